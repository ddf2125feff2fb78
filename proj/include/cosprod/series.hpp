#ifndef COSPROD_SERIES_HPP
#define COSPROD_SERIES_HPP

#include <cstddef>
#include <vector>

#include "cosprod/rational.hpp"
#include "cosprod/recurrence.hpp"

namespace cosprod {

// Truncated series c_1 x + c_2 x^3 + ... + c_M x^{2M-1}. coeff(m) is 1-based.
class OddSeries {
 public:
  explicit OddSeries(std::vector<Rational> coeffs);
  // All-zero series of the given order.
  static OddSeries zero(std::size_t order);
  static OddSeries from_table(const CoefficientTable& table);

  std::size_t order() const { return coeffs_.size(); }
  const Rational& coeff(std::size_t m) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  friend bool operator==(const OddSeries&, const OddSeries&) = default;
  // Sum truncated to the smaller order.
  friend OddSeries operator+(const OddSeries& a, const OddSeries& b);

 private:
  std::vector<Rational> coeffs_;
};

// Truncated series e_1 x^2 + e_2 x^4 + ... + e_M x^{2M}. coeff(m) is 1-based.
class EvenSeries {
 public:
  explicit EvenSeries(std::vector<Rational> coeffs);

  std::size_t order() const { return coeffs_.size(); }
  const Rational& coeff(std::size_t m) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  friend bool operator==(const EvenSeries&, const EvenSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

// t^2 truncated at x^{2M}, M = t.order().
EvenSeries square_odd(const OddSeries& t);

// 2 * integral_0^x sq: e_m x^{2m} -> 2 e_m / (2m+1) x^{2m+1}. The result has
// the same order as `sq`, with slot 1 (the x term) equal to zero.
OddSeries integrate_twice_scaled(const EvenSeries& sq);

// One substitution t -> x/2 + 2 * integral of t^2.
OddSeries picard_step(const OddSeries& t);

// Iterates picard_step from t = x/2 at the given order until two successive
// iterates agree exactly.
OddSeries picard_fixed_point(std::size_t order);

// Iterates of picard_step from x/2, including the seed, up to and including
// the first repeated one.
std::vector<OddSeries> picard_iterates(std::size_t order);

// Coefficients of 2 t'(x) - 1 - 4 t(x)^2 at x^0, x^2, ..., x^{2(k-1)}.
// The default k = t.order() stays within the range where the truncated t
// determines every term; larger k exposes the truncation terms.
std::vector<Rational> ode_residual(const OddSeries& t);
std::vector<Rational> ode_residual(const OddSeries& t, std::size_t num_coeffs);

}  // namespace cosprod

#endif  // COSPROD_SERIES_HPP
