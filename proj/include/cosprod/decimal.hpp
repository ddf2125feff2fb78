#ifndef COSPROD_DECIMAL_HPP
#define COSPROD_DECIMAL_HPP

#include <string>

#include "cosprod/bounded_real.hpp"

namespace cosprod::cli {

struct DecimalText {
  std::string value;
  std::string bound;
};

// Value in scientific notation, cut two digits past the decimal place of the
// error bound; the bound itself with two significant digits, rounded up.
// Exact values print up to `max_digits` digits with trailing zeros removed.
DecimalText format_bounded(const BoundedReal& x, int max_digits = 40);

// Upper bound with two significant digits, rounded up ("0" for zero).
std::string format_bound(const BigFloat& bound);

}  // namespace cosprod::cli

#endif  // COSPROD_DECIMAL_HPP
