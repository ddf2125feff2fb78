#ifndef COSPROD_ANALYTIC_HPP
#define COSPROD_ANALYTIC_HPP

#include <cstdint>
#include <optional>

#include "cosprod/big_float.hpp"
#include "cosprod/bounded_real.hpp"
#include "cosprod/elementary.hpp"
#include "cosprod/rational.hpp"

namespace cosprod {

// Truncated sum 1 + 3^{-2m} + ... + (2N-1)^{-2m}.
struct LambdaEstimate {
  unsigned m;
  std::uint64_t num_terms;
  // Rounded partial sum; abs_error covers summation rounding only.
  BoundedReal value;
  // Upper bound on the omitted (positive) terms.
  BigFloat tail_bound;

  // Enclosure of the full sum: [value - err, value + err + tail].
  BoundedReal enclosure() const { return value.with_one_sided_tail(tail_bound); }
};

// Upper bound on sum_{k > N} (2k-1)^{-2m}:
// (2N+1)^{-2m} + (2N+1)^{1-2m} / (2 (2m-1)).
BigFloat odd_power_tail(std::uint64_t num_terms, unsigned m);

LambdaEstimate lambda_direct(unsigned m, std::uint64_t num_terms, mpfr_prec_t precision);

// -log prod (1 - x^2/((2k-1)^2 rho^2)) as sum_{m<=order} c_m x^{2m} / m, with the
// truncation remainder folded into abs_error. DomainError unless |x| < pi/2
// can be certified.
BoundedReal neg_log_S_series(const BoundedReal& x, unsigned order, mpfr_prec_t precision);

struct PartialProductResult {
  Rational n;
  std::uint64_t num_factors;
  // prod_{k<=N} (1 - 1/((2k-1)^2 n^2)) with rounding error.
  BoundedReal value;
  // Bound on |log S - log value|; empty for n = 1, where value is exactly 0.
  std::optional<BigFloat> log_tail_bound;

  // Enclosure of the infinite product. Omitted factors are all in (0, 1),
  // so S lies in [value * e^{-tail}, value].
  BoundedReal enclosure() const;
};

// DomainError for n < 1.
PartialProductResult partial_product(const Rational& n, std::uint64_t num_factors,
                                     mpfr_prec_t precision);

struct RearrangementReport {
  Rational n;
  std::uint64_t num_rows;
  unsigned series_order;
  // sum over rows k of sum_j 1 / (j ((2k-1)^2 n^2)^j)
  BoundedReal row_order;
  // sum over m of lambda(2m) / (m n^{2m})
  BoundedReal column_order;

  bool consistent() const { return row_order.overlaps(column_order); }
};

// Both orders of the double series for -log S. DomainError for n <= 1.
RearrangementReport rearrangement_check(const Rational& n, std::uint64_t num_rows,
                                        unsigned series_order, mpfr_prec_t precision);

// pi / (2n)
BoundedReal half_pi_over(const Rational& n, mpfr_prec_t precision);

struct IdentityReport {
  Rational n;
  BoundedReal product;      // enclosure of the infinite product
  BoundedReal via_log;      // exp(-neg_log_S_series(pi/2n))
  BoundedReal cosine;       // cos(pi/2n)
  BoundedReal neg_log;      // neg_log_S_series(pi/2n)
  // log of the product enclosure; empty when the enclosure reaches zero.
  std::optional<BoundedReal> log_product;

  bool product_matches_log() const { return product.overlaps(via_log); }
  bool product_matches_cosine() const { return product.overlaps(cosine); }
  bool log_matches_cosine() const { return via_log.overlaps(cosine); }
  // log(product) = -neg_log, checked in the log domain.
  bool log_domain_consistent() const {
    return log_product.has_value() && log_product->overlaps(-neg_log);
  }
  bool passed() const {
    return product_matches_log() && product_matches_cosine() && log_matches_cosine();
  }
};

// DomainError for n <= 1.
IdentityReport verify_identity(const Rational& n, std::uint64_t num_factors, unsigned order,
                               mpfr_prec_t precision);

}  // namespace cosprod

#endif  // COSPROD_ANALYTIC_HPP
