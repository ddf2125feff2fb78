#include "cosprod/bounded_real.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "cosprod/errors.hpp"

namespace cosprod {

namespace {

// Upper bound on the error of one round-to-nearest at `precision` bits that
// produced `rounded` with MPFR ternary value `ternary`.
BigFloat rounding_error(const BigFloat& rounded, int ternary, mpfr_prec_t precision) {
  if (ternary == 0) return bound::zero();
  return bound::mul_2exp_up(bound::abs_up(rounded), -static_cast<long>(precision));
}

mpfr_prec_t endpoint_precision(const BoundedReal& x) {
  return std::max<mpfr_prec_t>(x.precision(), bound::kPrecision) + 64;
}

}  // namespace

BoundedReal::BoundedReal(BigFloat value, BigFloat abs_error)
    : value_(std::move(value)), abs_error_(bound::abs_up(abs_error)) {
  if (!value_.is_finite()) throw std::invalid_argument("BoundedReal value must be finite");
  if (!abs_error.is_finite() || abs_error.sign() < 0) {
    throw std::invalid_argument("BoundedReal error must be finite and non-negative");
  }
}

BoundedReal BoundedReal::exact(long value, mpfr_prec_t precision) {
  BigFloat v(precision);
  const int t = mpfr_set_si(v.get(), value, MPFR_RNDN);
  BigFloat err = rounding_error(v, t, precision);
  return BoundedReal(std::move(v), std::move(err));
}

BoundedReal BoundedReal::rounded(const BigFloat& value, mpfr_prec_t precision) {
  BigFloat v(precision);
  const int t = mpfr_set(v.get(), value.get(), MPFR_RNDN);
  BigFloat err = rounding_error(v, t, precision);
  return BoundedReal(std::move(v), std::move(err));
}

BigFloat BoundedReal::lower() const {
  BigFloat r(endpoint_precision(*this));
  mpfr_sub(r.get(), value_.get(), abs_error_.get(), MPFR_RNDD);
  return r;
}

BigFloat BoundedReal::upper() const {
  BigFloat r(endpoint_precision(*this));
  mpfr_add(r.get(), value_.get(), abs_error_.get(), MPFR_RNDU);
  return r;
}

BigFloat BoundedReal::magnitude_upper() const {
  return bound::add_up(bound::abs_up(value_), abs_error_);
}

BigFloat BoundedReal::magnitude_lower() const {
  BigFloat r = bound::sub_down(bound::abs_down(value_), abs_error_);
  if (r.sign() < 0) return bound::zero();
  return r;
}

bool BoundedReal::contains(const BigFloat& x) const { return lower() <= x && x <= upper(); }

bool BoundedReal::contains(const Rational& x) const {
  return mpfr_cmp_q(lower().get(), x.get().get_mpq_t()) <= 0 &&
         mpfr_cmp_q(upper().get(), x.get().get_mpq_t()) >= 0;
}

bool BoundedReal::overlaps(const BoundedReal& other) const {
  return lower() <= other.upper() && other.lower() <= upper();
}

bool BoundedReal::certainly_positive() const { return lower().sign() > 0; }

bool BoundedReal::certainly_nonzero() const { return magnitude_lower().sign() > 0; }

BoundedReal BoundedReal::widened(const BigFloat& extra) const {
  return BoundedReal(value_, bound::add_up(abs_error_, bound::abs_up(extra)));
}

BoundedReal BoundedReal::with_one_sided_tail(const BigFloat& tail) const {
  if (tail.sign() < 0) throw std::invalid_argument("tail must be non-negative");
  BigFloat half_tail = bound::mul_2exp_up(tail, -1);
  BigFloat v(precision());
  const int t = mpfr_add(v.get(), value_.get(), half_tail.get(), MPFR_RNDN);
  // half_tail >= tail / 2, so the new radius still reaches both ends.
  BigFloat err = bound::add_up(bound::add_up(abs_error_, half_tail),
                               rounding_error(v, t, precision()));
  return BoundedReal(std::move(v), std::move(err));
}

BoundedReal BoundedReal::with_precision(mpfr_prec_t precision) const {
  BoundedReal r = rounded(value_, precision);
  return r.widened(abs_error_);
}

BoundedReal BoundedReal::abs() const {
  if (value_.sign() >= 0) return *this;
  return -*this;
}

std::string BoundedReal::to_string(int digits) const {
  return value_.to_scientific(digits) + " +/- " + abs_error_.to_scientific(3);
}

BoundedReal operator+(const BoundedReal& a, const BoundedReal& b) {
  const mpfr_prec_t p = std::max(a.precision(), b.precision());
  BigFloat v(p);
  const int t = mpfr_add(v.get(), a.value_.get(), b.value_.get(), MPFR_RNDN);
  BigFloat err = bound::add_up(bound::add_up(a.abs_error_, b.abs_error_), rounding_error(v, t, p));
  return BoundedReal(std::move(v), std::move(err));
}

BoundedReal operator-(const BoundedReal& a, const BoundedReal& b) {
  const mpfr_prec_t p = std::max(a.precision(), b.precision());
  BigFloat v(p);
  const int t = mpfr_sub(v.get(), a.value_.get(), b.value_.get(), MPFR_RNDN);
  BigFloat err = bound::add_up(bound::add_up(a.abs_error_, b.abs_error_), rounding_error(v, t, p));
  return BoundedReal(std::move(v), std::move(err));
}

BoundedReal operator-(const BoundedReal& a) {
  BigFloat v(a.precision());
  mpfr_neg(v.get(), a.value_.get(), MPFR_RNDN);
  return BoundedReal(std::move(v), a.abs_error_);
}

BoundedReal operator*(const BoundedReal& a, const BoundedReal& b) {
  const mpfr_prec_t p = std::max(a.precision(), b.precision());
  BigFloat v(p);
  const int t = mpfr_mul(v.get(), a.value_.get(), b.value_.get(), MPFR_RNDN);
  // |ab - a'b'| <= |a'| eb + |b'| ea + ea eb
  BigFloat err = bound::mul_up(bound::abs_up(a.value_), b.abs_error_);
  err = bound::add_up(err, bound::mul_up(bound::abs_up(b.value_), a.abs_error_));
  err = bound::add_up(err, bound::mul_up(a.abs_error_, b.abs_error_));
  err = bound::add_up(err, rounding_error(v, t, p));
  return BoundedReal(std::move(v), std::move(err));
}

BoundedReal operator/(const BoundedReal& a, const BoundedReal& b) {
  if (!b.certainly_nonzero()) {
    throw DivisionByZero("divisor enclosure contains zero");
  }
  const mpfr_prec_t p = std::max(a.precision(), b.precision());
  BigFloat v(p);
  const int t = mpfr_div(v.get(), a.value_.get(), b.value_.get(), MPFR_RNDN);
  // |a/b - a'/b'| <= (ea |b'| + |a'| eb) / (|b'| (|b'| - eb))
  BigFloat num = bound::mul_up(a.abs_error_, bound::abs_up(b.value_));
  num = bound::add_up(num, bound::mul_up(bound::abs_up(a.value_), b.abs_error_));
  BigFloat den(bound::kPrecision);
  mpfr_mul(den.get(), bound::abs_down(b.value_).get(), b.magnitude_lower().get(), MPFR_RNDD);
  BigFloat err = num.is_zero() ? bound::zero() : bound::div_up(num, den);
  err = bound::add_up(err, rounding_error(v, t, p));
  return BoundedReal(std::move(v), std::move(err));
}

BoundedReal BoundedReal::mul_ui(unsigned long k) const {
  BigFloat v(precision());
  const int t = mpfr_mul_ui(v.get(), value_.get(), k, MPFR_RNDN);
  BigFloat err = bound::add_up(bound::mul_ui_up(abs_error_, k), rounding_error(v, t, precision()));
  return BoundedReal(std::move(v), std::move(err));
}

BoundedReal BoundedReal::div_ui(unsigned long k) const {
  if (k == 0) throw DivisionByZero();
  BigFloat v(precision());
  const int t = mpfr_div_ui(v.get(), value_.get(), k, MPFR_RNDN);
  BigFloat err = bound::add_up(bound::div_ui_up(abs_error_, k), rounding_error(v, t, precision()));
  return BoundedReal(std::move(v), std::move(err));
}

BoundedReal BoundedReal::mul_2exp(long exponent) const {
  BigFloat v(precision());
  mpfr_mul_2si(v.get(), value_.get(), exponent, MPFR_RNDN);
  return BoundedReal(std::move(v), bound::mul_2exp_up(abs_error_, exponent));
}

BoundedReal BoundedReal::mul(const Rational& r) const {
  return *this * real_from_rational(r, precision());
}

BoundedReal real_from_rational(const Rational& r, mpfr_prec_t precision) {
  if (precision < kMinPrecision) throw std::invalid_argument("precision must be at least 8 bits");
  BigFloat v(precision);
  const int t = mpfr_set_q(v.get(), r.get().get_mpq_t(), MPFR_RNDN);
  BigFloat err = rounding_error(v, t, precision);
  return BoundedReal(std::move(v), std::move(err));
}

BoundedReal pow(const BoundedReal& base, unsigned exponent) {
  BoundedReal result = BoundedReal::exact(1, base.precision());
  BoundedReal square = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent != 0) square *= square;
  }
  return result;
}

}  // namespace cosprod
