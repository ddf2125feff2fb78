#include "cosprod/big_float.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace cosprod {

BigFloat::BigFloat(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(mpfr_prec_t precision, long value) : BigFloat(precision) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(mpfr_prec_t precision, double value) : BigFloat(precision) {
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

std::string BigFloat::to_scientific(int digits) const {
  if (digits < 1) digits = 1;
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*RNe", digits - 1, value_);
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

namespace bound {

BigFloat zero() { return BigFloat(kPrecision); }

BigFloat from_ulong(unsigned long v) {
  BigFloat r(kPrecision);
  mpfr_set_ui(r.get(), v, MPFR_RNDU);
  return r;
}

BigFloat pow2(long exponent) {
  BigFloat r(kPrecision);
  mpfr_set_ui_2exp(r.get(), 1, exponent, MPFR_RNDU);
  return r;
}

BigFloat abs_up(const BigFloat& x) {
  BigFloat r(kPrecision);
  mpfr_abs(r.get(), x.get(), MPFR_RNDU);
  return r;
}

BigFloat abs_down(const BigFloat& x) {
  BigFloat r(kPrecision);
  mpfr_abs(r.get(), x.get(), MPFR_RNDD);
  return r;
}

BigFloat add_up(const BigFloat& a, const BigFloat& b) {
  BigFloat r(kPrecision);
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

BigFloat sub_up(const BigFloat& a, const BigFloat& b) {
  BigFloat r(kPrecision);
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

BigFloat sub_down(const BigFloat& a, const BigFloat& b) {
  BigFloat r(kPrecision);
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDD);
  return r;
}

BigFloat mul_up(const BigFloat& a, const BigFloat& b) {
  BigFloat r(kPrecision);
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

BigFloat div_up(const BigFloat& a, const BigFloat& b) {
  BigFloat r(kPrecision);
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

BigFloat mul_ui_up(const BigFloat& a, unsigned long b) {
  BigFloat r(kPrecision);
  mpfr_mul_ui(r.get(), a.get(), b, MPFR_RNDU);
  return r;
}

BigFloat div_ui_up(const BigFloat& a, unsigned long b) {
  BigFloat r(kPrecision);
  mpfr_div_ui(r.get(), a.get(), b, MPFR_RNDU);
  return r;
}

BigFloat mul_2exp_up(const BigFloat& a, long exponent) {
  BigFloat r(kPrecision);
  mpfr_mul_2si(r.get(), a.get(), exponent, MPFR_RNDU);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) {
  BigFloat r(kPrecision);
  mpfr_max(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

BigFloat gamma(unsigned long k, mpfr_prec_t precision) {
  BigFloat ku = mul_ui_up(pow2(-static_cast<long>(precision)), k);
  BigFloat half(kPrecision);
  mpfr_set_d(half.get(), 0.5, MPFR_RNDN);
  if (!(ku < half)) {
    throw std::overflow_error("too many roundings for the working precision");
  }
  BigFloat one(kPrecision, 1L);
  BigFloat denom(kPrecision);
  mpfr_sub(denom.get(), one.get(), ku.get(), MPFR_RNDD);
  return div_up(ku, denom);
}

}  // namespace bound

}  // namespace cosprod
