#include "cosprod/pi.hpp"

#include <stdexcept>

namespace cosprod {

namespace {

constexpr mpfr_prec_t kGuardBits = 32;

}  // namespace

BoundedReal atan_inverse(unsigned long k, mpfr_prec_t precision) {
  if (k < 2) throw std::invalid_argument("atan_inverse needs k >= 2");
  const mpfr_prec_t work = precision + kGuardBits;
  const BigFloat cutoff = bound::pow2(-static_cast<long>(work));
  const unsigned long k2 = k * k;

  // power = k^-(2j+1); sum of (-1)^j power / (2j+1)
  BoundedReal power = BoundedReal::exact(1, work).div_ui(k);
  BoundedReal sum = power;
  for (unsigned long j = 1;; ++j) {
    power = power.div_ui(k2);
    BoundedReal term = power.div_ui(2 * j + 1);
    // Alternating series with decreasing terms: the remainder after the
    // previous partial sum is at most this term.
    if (term.magnitude_upper() <= cutoff) {
      return sum.widened(term.magnitude_upper()).with_precision(precision);
    }
    sum = (j % 2 == 1) ? sum - term : sum + term;
  }
}

BoundedReal pi_constant(mpfr_prec_t precision) {
  if (precision < kMinPrecision) throw std::invalid_argument("precision must be at least 8 bits");
  const mpfr_prec_t work = precision + kGuardBits;
  BoundedReal pi = atan_inverse(5, work).mul_ui(16) - atan_inverse(239, work).mul_ui(4);
  return pi.with_precision(precision);
}

}  // namespace cosprod
