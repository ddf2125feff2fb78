#include "cosprod/decimal.hpp"

#include <algorithm>
#include <cmath>

namespace cosprod::cli {

namespace {

long decimal_exponent(const BigFloat& x) {
  BigFloat a(bound::kPrecision);
  mpfr_abs(a.get(), x.get(), MPFR_RNDN);
  mpfr_log10(a.get(), a.get(), MPFR_RNDN);
  return static_cast<long>(std::floor(a.to_double()));
}

std::string scientific(const BigFloat& x, int digits) {
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*RNe", std::max(digits, 1) - 1, x.get());
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

std::string strip_mantissa_zeros(std::string s) {
  const auto e = s.find('e');
  std::string mantissa = s.substr(0, e);
  const std::string exponent = e == std::string::npos ? "" : s.substr(e);
  if (mantissa.find('.') != std::string::npos) {
    while (mantissa.back() == '0') mantissa.pop_back();
    if (mantissa.back() == '.') mantissa.pop_back();
  }
  return mantissa + exponent;
}

}  // namespace

std::string format_bound(const BigFloat& bound) {
  if (bound.is_zero()) return "0";
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.1RUe", bound.get());
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

DecimalText format_bounded(const BoundedReal& x, int max_digits) {
  if (x.value().is_zero() && x.is_exact()) return {"0", "0"};
  if (x.is_exact()) {
    const int digits = std::min<int>(max_digits, static_cast<int>(x.precision() * 0.30103) + 1);
    return {strip_mantissa_zeros(scientific(x.value(), digits)), "0"};
  }
  int digits = 2;
  if (!x.value().is_zero()) {
    const long span = decimal_exponent(x.value()) - decimal_exponent(x.abs_error());
    digits = static_cast<int>(std::clamp<long>(span + 3, 1, max_digits));
  }
  return {scientific(x.value(), digits), format_bound(x.abs_error())};
}

}  // namespace cosprod::cli
