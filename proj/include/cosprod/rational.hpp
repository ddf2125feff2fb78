#ifndef COSPROD_RATIONAL_HPP
#define COSPROD_RATIONAL_HPP

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cosprod {

// Arbitrary-precision signed rational, always in lowest terms with a
// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value);  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& numerator, const mpz_class& denominator);
  Rational(long numerator, long denominator);
  explicit Rational(const mpq_class& value);

  // Accepts "p/q" or a bare integer, with optional leading sign on p.
  // Decimal and exponent notation are rejected with std::invalid_argument.
  static Rational parse(std::string_view text);

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }
  const mpq_class& get() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return denominator() == 1; }

  Rational abs() const;
  Rational reciprocal() const;

  // Always "p/q", also for integers ("3/1", "0/1").
  std::string to_string() const;
  double to_double() const { return value_.get_d(); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& r);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class value_{0};
};

Rational pow(const Rational& base, unsigned exponent);

enum class ArithKind { kAdd, kSub, kMul, kDiv };

// Single entry point for the four field operations. kDiv with b == 0
// throws DivisionByZero.
Rational rational_arith(const Rational& a, const Rational& b, ArithKind kind);

}  // namespace cosprod

#endif  // COSPROD_RATIONAL_HPP
