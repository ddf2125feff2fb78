#include "cosprod/recurrence.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace cosprod {

CoefficientTable::CoefficientTable(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

const Rational& CoefficientTable::at(std::size_t m) const {
  if (m == 0 || m > coeffs_.size()) {
    throw std::out_of_range("coefficient index " + std::to_string(m) + " outside 1.." +
                            std::to_string(coeffs_.size()));
  }
  return coeffs_[m - 1];
}

BernoulliTable::BernoulliTable(std::vector<Rational> values) : values_(std::move(values)) {}

const Rational& BernoulliTable::at(std::size_t k) const {
  if (k >= values_.size()) {
    throw std::out_of_range("Bernoulli index " + std::to_string(k) + " outside table");
  }
  return values_[k];
}

CoefficientTable euler_coefficients(std::size_t m_max) {
  if (m_max == 0) throw std::invalid_argument("m_max must be at least 1");
  std::vector<Rational> c;
  c.reserve(m_max);
  c.emplace_back(1, 2);
  for (std::size_t m = 2; m <= m_max; ++m) {
    // Ordered pairs (i, j), i + j = m: cross terms twice, the square once.
    Rational conv;
    for (std::size_t i = 1; 2 * i < m; ++i) conv += c[i - 1] * c[m - i - 1];
    conv *= Rational(2);
    if (m % 2 == 0) conv += c[m / 2 - 1] * c[m / 2 - 1];
    c.push_back(conv * Rational(2, static_cast<long>(2 * m - 1)));
  }
  return CoefficientTable(std::move(c));
}

BernoulliTable bernoulli_numbers(std::size_t k_max) {
  std::vector<Rational> b;
  b.reserve(k_max + 1);
  b.emplace_back(1);
  for (std::size_t k = 1; k <= k_max; ++k) {
    // B_k = -1/(k+1) sum_{j<k} C(k+1, j) B_j
    mpz_class binom = 1;  // C(k+1, 0)
    Rational acc;
    for (std::size_t j = 0; j < k; ++j) {
      acc += Rational(binom, 1) * b[j];
      binom = binom * static_cast<unsigned long>(k + 1 - j) / static_cast<unsigned long>(j + 1);
    }
    b.push_back(-acc / Rational(static_cast<long>(k + 1)));
  }
  return BernoulliTable(std::move(b));
}

std::vector<Rational> tangent_coefficients(std::size_t m_max) {
  if (m_max == 0) throw std::invalid_argument("m_max must be at least 1");
  const BernoulliTable bern = bernoulli_numbers(2 * m_max);
  std::vector<Rational> out;
  out.reserve(m_max);
  mpz_class factorial = 1;
  for (std::size_t m = 1; m <= m_max; ++m) {
    factorial *= static_cast<unsigned long>((2 * m - 1) * (2 * m));
    mpz_class four_m;
    mpz_ui_pow_ui(four_m.get_mpz_t(), 4, m);
    Rational t = Rational(four_m * (four_m - 1), factorial) * bern.at(2 * m);
    out.push_back(m % 2 == 1 ? t : -t);
  }
  return out;
}

Rational lambda_closed_form(std::size_t m) {
  if (m == 0) throw std::invalid_argument("m must be at least 1");
  mpz_class four_m;
  mpz_ui_pow_ui(four_m.get_mpz_t(), 4, m);
  return euler_coefficients(m).at(m) / Rational(four_m, 1);
}

}  // namespace cosprod
