#ifndef COSPROD_ELEMENTARY_HPP
#define COSPROD_ELEMENTARY_HPP

#include "cosprod/bounded_real.hpp"

namespace cosprod {

// Maclaurin evaluations with explicit remainder bounds. The series is summed
// at the midpoint of the argument, and the argument's own error is then
// propagated through a Lipschitz bound on the function.

// cos x for any finite x. Arguments larger than 4 in magnitude are first
// reduced modulo 2 pi.
BoundedReal cos_approx(const BoundedReal& x, mpfr_prec_t precision);

// exp x. Requires abs_error(x) <= 1.
BoundedReal exp_approx(const BoundedReal& x, mpfr_prec_t precision);

// log x for x whose enclosure is strictly positive; DomainError otherwise.
BoundedReal log_approx(const BoundedReal& x, mpfr_prec_t precision);

}  // namespace cosprod

#endif  // COSPROD_ELEMENTARY_HPP
