#include "cosprod/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "cosprod/errors.hpp"

namespace cosprod {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long value) : value_(value) {}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(long numerator, long denominator)
    : Rational(mpz_class(numerator), mpz_class(denominator)) {}

Rational::Rational(const mpq_class& value) : value_(value) {
  if (value_.get_den() == 0) throw DivisionByZero("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto fail = [&]() -> Rational {
    throw std::invalid_argument("expected an integer or p/q rational, got '" +
                                std::string(text) + "'");
  };
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  bool negative = false;
  if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
    negative = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!is_digits(num) || !is_digits(den)) return fail();
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw DivisionByZero("rational with zero denominator: '" + std::string(text) + "'");
  if (negative) p = -p;
  return Rational(p, q);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(denominator(), numerator());
}

std::string Rational::to_string() const {
  return numerator().get_str() + "/" + denominator().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

Rational operator-(const Rational& r) { return Rational(mpq_class(-r.value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), exponent);
  return Rational(num, den);
}

Rational rational_arith(const Rational& a, const Rational& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::kAdd:
      return a + b;
    case ArithKind::kSub:
      return a - b;
    case ArithKind::kMul:
      return a * b;
    case ArithKind::kDiv:
      return a / b;
  }
  throw std::invalid_argument("unknown ArithKind");
}

}  // namespace cosprod
