#include "cosprod/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace cosprod {

namespace {

// sum over ordered (i, j), i, j >= 1, i + j = m, of c_i c_j. 1-based m.
Rational odd_square_coeff(const std::vector<Rational>& c, std::size_t m) {
  Rational acc;
  for (std::size_t i = 1; i < m; ++i) {
    const std::size_t j = m - i;
    if (i > c.size() || j > c.size()) continue;
    acc += c[i - 1] * c[j - 1];
  }
  return acc;
}

void require_order(std::size_t order) {
  if (order == 0) throw std::invalid_argument("series order must be at least 1");
}

}  // namespace

OddSeries::OddSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  require_order(coeffs_.size());
}

OddSeries OddSeries::zero(std::size_t order) {
  require_order(order);
  return OddSeries(std::vector<Rational>(order));
}

OddSeries OddSeries::from_table(const CoefficientTable& table) {
  return OddSeries(table.coeffs());
}

const Rational& OddSeries::coeff(std::size_t m) const {
  if (m == 0 || m > coeffs_.size()) {
    throw std::out_of_range("odd series slot " + std::to_string(m) + " out of range");
  }
  return coeffs_[m - 1];
}

OddSeries operator+(const OddSeries& a, const OddSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<Rational> out(order);
  for (std::size_t i = 0; i < order; ++i) out[i] = a.coeffs_[i] + b.coeffs_[i];
  return OddSeries(std::move(out));
}

EvenSeries::EvenSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  require_order(coeffs_.size());
}

const Rational& EvenSeries::coeff(std::size_t m) const {
  if (m == 0 || m > coeffs_.size()) {
    throw std::out_of_range("even series slot " + std::to_string(m) + " out of range");
  }
  return coeffs_[m - 1];
}

EvenSeries square_odd(const OddSeries& t) {
  // x^{2i-1} x^{2j-1} = x^{2(i+j-1)}, so slot m collects i + j = m + 1.
  std::vector<Rational> out;
  out.reserve(t.order());
  for (std::size_t m = 1; m <= t.order(); ++m) out.push_back(odd_square_coeff(t.coeffs(), m + 1));
  return EvenSeries(std::move(out));
}

OddSeries integrate_twice_scaled(const EvenSeries& sq) {
  // e_m x^{2m} integrates to x^{2m+1}, which is odd slot m + 1.
  std::vector<Rational> out(sq.order());
  for (std::size_t m = 1; m < sq.order(); ++m) {
    out[m] = sq.coeff(m) * Rational(2, static_cast<long>(2 * m + 1));
  }
  return OddSeries(std::move(out));
}

OddSeries picard_step(const OddSeries& t) {
  OddSeries next = integrate_twice_scaled(square_odd(t));
  std::vector<Rational> c = next.coeffs();
  c[0] += Rational(1, 2);
  return OddSeries(std::move(c));
}

std::vector<OddSeries> picard_iterates(std::size_t order) {
  require_order(order);
  std::vector<Rational> seed(order);
  seed[0] = Rational(1, 2);
  std::vector<OddSeries> iterates{OddSeries(std::move(seed))};
  // Slot m is final after m - 1 steps, so order + 1 steps always suffice.
  for (std::size_t k = 0; k <= order; ++k) {
    iterates.push_back(picard_step(iterates.back()));
    if (iterates.back() == iterates[iterates.size() - 2]) return iterates;
  }
  throw std::logic_error("Picard iteration failed to stabilise");
}

OddSeries picard_fixed_point(std::size_t order) { return picard_iterates(order).back(); }

std::vector<Rational> ode_residual(const OddSeries& t) { return ode_residual(t, t.order()); }

std::vector<Rational> ode_residual(const OddSeries& t, std::size_t num_coeffs) {
  std::vector<Rational> out;
  out.reserve(num_coeffs);
  for (std::size_t k = 0; k < num_coeffs; ++k) {
    // x^{2k}: t' contributes (2k+1) c_{k+1}; t^2 contributes sum_{i+j=k+1} c_i c_j.
    Rational r;
    if (k < t.order()) r = Rational(static_cast<long>(2 * (2 * k + 1))) * t.coeff(k + 1);
    if (k == 0) r -= Rational(1);
    r -= Rational(4) * odd_square_coeff(t.coeffs(), k + 1);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace cosprod
