#ifndef COSPROD_RECURRENCE_HPP
#define COSPROD_RECURRENCE_HPP

#include <cstddef>
#include <vector>

#include "cosprod/rational.hpp"

namespace cosprod {

// The coefficient sequence c_1 = 1/2, c_m = 2/(2m-1) * sum_{i+j=m} c_i c_j.
// Indexing is 1-based: at(1) is the first coefficient.
class CoefficientTable {
 public:
  explicit CoefficientTable(std::vector<Rational> coeffs);

  std::size_t size() const { return coeffs_.size(); }
  const Rational& at(std::size_t m) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

 private:
  std::vector<Rational> coeffs_;
};

// Bernoulli numbers B_0 .. B_k with B_1 = -1/2. 0-based.
class BernoulliTable {
 public:
  explicit BernoulliTable(std::vector<Rational> values);

  std::size_t size() const { return values_.size(); }
  const Rational& at(std::size_t k) const;
  const std::vector<Rational>& values() const { return values_; }

 private:
  std::vector<Rational> values_;
};

// Exact table c_1 .. c_{m_max}. Throws std::invalid_argument if m_max == 0.
CoefficientTable euler_coefficients(std::size_t m_max);

// B_0 .. B_{k_max} from sum_{j=0}^{k} C(k+1, j) B_j = 0.
BernoulliTable bernoulli_numbers(std::size_t k_max);

// Maclaurin coefficients of tan x at x^1, x^3, ..., x^{2 m_max - 1}:
// (-1)^(m-1) 2^{2m} (2^{2m} - 1) B_{2m} / (2m)!. Returned 0-based, so
// element m-1 multiplies x^{2m-1}.
std::vector<Rational> tangent_coefficients(std::size_t m_max);

// q_m = c_m / 4^m, so that sum over odd k of k^{-2m} = q_m pi^{2m}.
Rational lambda_closed_form(std::size_t m);

}  // namespace cosprod

#endif  // COSPROD_RECURRENCE_HPP
