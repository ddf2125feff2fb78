#ifndef COSPROD_PI_HPP
#define COSPROD_PI_HPP

#include "cosprod/bounded_real.hpp"

namespace cosprod {

// pi at `precision` bits with |value - pi| <= abs_error <= 2^(4 - precision).
// Computed from Machin's formula pi = 16 atan(1/5) - 4 atan(1/239); each
// arctangent series is cut where the alternating remainder drops below the
// working precision, and that remainder is added to the bound.
BoundedReal pi_constant(mpfr_prec_t precision);

// atan(1/k) for an integer k >= 2, at `precision` bits.
BoundedReal atan_inverse(unsigned long k, mpfr_prec_t precision);

}  // namespace cosprod

#endif  // COSPROD_PI_HPP
