#ifndef COSPROD_BOUNDED_REAL_HPP
#define COSPROD_BOUNDED_REAL_HPP

#include <string>

#include "cosprod/big_float.hpp"
#include "cosprod/rational.hpp"

namespace cosprod {

inline constexpr mpfr_prec_t kMinPrecision = 8;

// A binary floating-point midpoint together with an absolute error bound:
// the represented real lies in [value - abs_error, value + abs_error].
//
// Arithmetic rounds the midpoint to nearest at the result precision and
// adds |result| * 2^-precision for that rounding, plus the propagated
// input errors. Error bounds are kept at 64 bits, rounded upward.
// Binary operations produce a result at the larger of the two input
// precisions.
class BoundedReal {
 public:
  BoundedReal(BigFloat value, BigFloat abs_error);

  // Exact small integer.
  static BoundedReal exact(long value, mpfr_prec_t precision);
  // Rounds `value` to `precision` bits; the rounding error goes into the bound.
  static BoundedReal rounded(const BigFloat& value, mpfr_prec_t precision);

  const BigFloat& value() const { return value_; }
  const BigFloat& abs_error() const { return abs_error_; }
  mpfr_prec_t precision() const { return value_.precision(); }
  bool is_exact() const { return abs_error_.is_zero(); }

  // Directed endpoints of the enclosure.
  BigFloat lower() const;
  BigFloat upper() const;
  // Upper bound on max |x| over the enclosure.
  BigFloat magnitude_upper() const;
  // Lower bound on min |x| over the enclosure (zero when it contains 0).
  BigFloat magnitude_lower() const;

  bool contains(const BigFloat& x) const;
  bool contains(const Rational& x) const;
  bool overlaps(const BoundedReal& other) const;
  bool certainly_positive() const;
  bool certainly_nonzero() const;

  // Same midpoint, error widened by `extra` (rounded up).
  BoundedReal widened(const BigFloat& extra) const;
  // Enclosure of [lower, upper + tail] for a non-negative one-sided `tail`,
  // re-centred.
  BoundedReal with_one_sided_tail(const BigFloat& tail) const;
  // Re-rounds the midpoint to `precision` bits.
  BoundedReal with_precision(mpfr_prec_t precision) const;

  BoundedReal abs() const;

  double to_double() const { return value_.to_double(); }
  std::string to_string(int digits = 20) const;

  friend BoundedReal operator+(const BoundedReal& a, const BoundedReal& b);
  friend BoundedReal operator-(const BoundedReal& a, const BoundedReal& b);
  friend BoundedReal operator*(const BoundedReal& a, const BoundedReal& b);
  // Throws DivisionByZero unless the divisor's enclosure excludes zero.
  friend BoundedReal operator/(const BoundedReal& a, const BoundedReal& b);
  friend BoundedReal operator-(const BoundedReal& a);

  BoundedReal& operator+=(const BoundedReal& b) { return *this = *this + b; }
  BoundedReal& operator-=(const BoundedReal& b) { return *this = *this - b; }
  BoundedReal& operator*=(const BoundedReal& b) { return *this = *this * b; }
  BoundedReal& operator/=(const BoundedReal& b) { return *this = *this / b; }

  BoundedReal mul_ui(unsigned long k) const;
  BoundedReal div_ui(unsigned long k) const;
  BoundedReal mul_2exp(long exponent) const;
  BoundedReal mul(const Rational& r) const;

 private:
  BigFloat value_;
  BigFloat abs_error_;
};

// |value - r| <= abs_error <= 2^(1-precision) |r|, and abs_error = 0 when r
// is representable at `precision` bits.
BoundedReal real_from_rational(const Rational& r, mpfr_prec_t precision);

// Square-and-multiply power; errors propagate through each product.
BoundedReal pow(const BoundedReal& base, unsigned exponent);

}  // namespace cosprod

#endif  // COSPROD_BOUNDED_REAL_HPP
