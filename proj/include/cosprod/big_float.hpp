#ifndef COSPROD_BIG_FLOAT_HPP
#define COSPROD_BIG_FLOAT_HPP

#include <string>

#include <mpfr.h>

namespace cosprod {

// Owning RAII handle around an mpfr_t. Every instance carries its own
// precision; there is no reliance on the MPFR default precision.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision);
  BigFloat(mpfr_prec_t precision, long value);
  BigFloat(mpfr_prec_t precision, double value);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  // Scientific notation with `digits` significant digits, rounded to nearest.
  std::string to_scientific(int digits) const;

  friend bool operator<(const BigFloat& a, const BigFloat& b) {
    return mpfr_less_p(a.value_, b.value_) != 0;
  }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) {
    return mpfr_lessequal_p(a.value_, b.value_) != 0;
  }
  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }

 private:
  mpfr_t value_;
};

// Low-precision magnitudes rounded toward +infinity. Used for error bounds:
// every helper returns a value that is >= the exact mathematical result.
namespace bound {

inline constexpr mpfr_prec_t kPrecision = 64;

BigFloat zero();
BigFloat from_ulong(unsigned long v);
BigFloat pow2(long exponent);
BigFloat abs_up(const BigFloat& x);
BigFloat add_up(const BigFloat& a, const BigFloat& b);
BigFloat sub_up(const BigFloat& a, const BigFloat& b);
BigFloat mul_up(const BigFloat& a, const BigFloat& b);
BigFloat div_up(const BigFloat& a, const BigFloat& b);
BigFloat mul_ui_up(const BigFloat& a, unsigned long b);
BigFloat div_ui_up(const BigFloat& a, unsigned long b);
BigFloat mul_2exp_up(const BigFloat& a, long exponent);
// Lower bound on |x| at bound precision.
BigFloat abs_down(const BigFloat& x);
BigFloat sub_down(const BigFloat& a, const BigFloat& b);
BigFloat max(const BigFloat& a, const BigFloat& b);

// Classic gamma_k = k u / (1 - k u) with u = 2^-precision, rounded up.
// Bounds |prod (1 + d_i)^{+-1} - 1| for k roundings with |d_i| <= u.
// Throws std::overflow_error if k u >= 1/2.
BigFloat gamma(unsigned long k, mpfr_prec_t precision);

}  // namespace bound

}  // namespace cosprod

#endif  // COSPROD_BIG_FLOAT_HPP
