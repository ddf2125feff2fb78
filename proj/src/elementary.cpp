#include "cosprod/elementary.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "cosprod/errors.hpp"
#include "cosprod/pi.hpp"

namespace cosprod {

namespace {

constexpr mpfr_prec_t kGuardBits = 32;

long binary_exponent(const BigFloat& x) { return x.is_zero() ? 0 : mpfr_get_exp(x.get()); }

void require_precision(mpfr_prec_t precision) {
  if (precision < kMinPrecision) throw std::invalid_argument("precision must be at least 8 bits");
}

BoundedReal mul_si(const BoundedReal& x, long k) {
  BoundedReal r = x.mul_ui(static_cast<unsigned long>(std::labs(k)));
  return k < 0 ? -r : r;
}

// atanh z = sum z^{2j+1} / (2j+1) for |z| <= 1/sqrt 2; remainder at most
// twice the first omitted term.
BoundedReal atanh_series(const BoundedReal& z, mpfr_prec_t work) {
  const BigFloat cutoff = bound::pow2(-static_cast<long>(work));
  const BoundedReal z2 = z * z;
  BoundedReal power = z;
  BoundedReal sum = z;
  for (unsigned long j = 1;; ++j) {
    power *= z2;
    BoundedReal term = power.div_ui(2 * j + 1);
    if (term.magnitude_upper() <= cutoff) {
      return sum.widened(bound::mul_2exp_up(term.magnitude_upper(), 1));
    }
    sum += term;
  }
}

}  // namespace

BoundedReal cos_approx(const BoundedReal& x, mpfr_prec_t precision) {
  require_precision(precision);
  const long mag = std::max(0L, binary_exponent(x.value()));
  const mpfr_prec_t work = std::max(precision, x.precision()) + kGuardBits + mag;
  BoundedReal r = BoundedReal::rounded(x.value(), work);

  BigFloat four(bound::kPrecision, 4L);
  if (four < bound::abs_up(x.value())) {
    const BoundedReal two_pi = pi_constant(work + mag).mul_2exp(1);
    BigFloat quotient(work);
    mpfr_div(quotient.get(), x.value().get(), two_pi.value().get(), MPFR_RNDN);
    mpz_class turns;
    mpfr_get_z(turns.get_mpz_t(), quotient.get(), MPFR_RNDN);
    r = r - two_pi * real_from_rational(Rational(turns, 1), work + mag);
  }

  // Lagrange remainder: |cos r - sum_{j<J} (-1)^j r^{2j}/(2j)!| <= |r|^{2J}/(2J)!
  const BigFloat cutoff = bound::pow2(-static_cast<long>(work));
  const BoundedReal r2 = r * r;
  BoundedReal term = BoundedReal::exact(1, work);
  BoundedReal sum = term;
  for (unsigned long j = 1;; ++j) {
    term = -(term * r2).div_ui((2 * j - 1) * (2 * j));
    if (term.magnitude_upper() <= cutoff) {
      sum = sum.widened(term.magnitude_upper());
      break;
    }
    sum += term;
  }
  // |cos a - cos b| <= |a - b|
  return sum.widened(x.abs_error()).with_precision(precision);
}

BoundedReal exp_approx(const BoundedReal& x, mpfr_prec_t precision) {
  require_precision(precision);
  if (BigFloat(bound::kPrecision, 1L) < x.abs_error()) {
    throw std::invalid_argument("exp_approx needs an argument error of at most 1");
  }
  // Halve until |z| <= 1/2, then square back up.
  const long halvings = x.value().is_zero() ? 0 : std::max(0L, binary_exponent(x.value()) + 1);
  const mpfr_prec_t work = std::max(precision, x.precision()) + kGuardBits + halvings;
  const BoundedReal z = BoundedReal::rounded(x.value(), work).mul_2exp(-halvings);

  const BigFloat cutoff = bound::pow2(-static_cast<long>(work));
  BoundedReal term = BoundedReal::exact(1, work);
  BoundedReal sum = term;
  for (unsigned long j = 1;; ++j) {
    term = (term * z).div_ui(j);
    if (term.magnitude_upper() <= cutoff) {
      // sum_{i>=j} |z|^i/i! <= 2 |z|^j/j! when |z| <= 1/2
      sum = sum.widened(bound::mul_2exp_up(term.magnitude_upper(), 1));
      break;
    }
    sum += term;
  }
  for (long i = 0; i < halvings; ++i) sum *= sum;

  // |exp(a) - exp(b)| <= exp(b) (e^{|a-b|} - 1) <= exp(b) * 3 |a-b| for |a-b| <= 1
  BigFloat propagated = bound::mul_up(sum.magnitude_upper(), bound::mul_ui_up(x.abs_error(), 3));
  return sum.widened(propagated).with_precision(precision);
}

BoundedReal log_approx(const BoundedReal& x, mpfr_prec_t precision) {
  require_precision(precision);
  if (!x.certainly_positive()) {
    throw DomainError("log of a value not certainly positive");
  }
  // x = m 2^e with m in [0.7, 1.4)
  long e = binary_exponent(x.value());
  BigFloat m(x.precision());
  mpfr_mul_2si(m.get(), x.value().get(), -e, MPFR_RNDN);
  if (m.to_double() < 0.7) {
    mpfr_mul_2si(m.get(), m.get(), 1, MPFR_RNDN);
    --e;
  }
  long e_bits = 0;
  for (long a = std::labs(e); a != 0; a >>= 1) ++e_bits;
  const mpfr_prec_t work = std::max(precision, x.precision()) + kGuardBits + e_bits;

  const BoundedReal one = BoundedReal::exact(1, work);
  const BoundedReal mm = BoundedReal::rounded(m, work);
  BoundedReal result = atanh_series((mm - one) / (mm + one), work).mul_2exp(1);
  if (e != 0) {
    const BoundedReal third = one.div_ui(3);
    const BoundedReal log2 = atanh_series(third, work).mul_2exp(1);
    result += mul_si(log2, e);
  }
  // |log a - log b| <= |a - b| / min(a, b)
  BigFloat propagated =
      x.is_exact() ? bound::zero() : bound::div_up(x.abs_error(), x.magnitude_lower());
  return result.widened(propagated).with_precision(precision);
}

}  // namespace cosprod
