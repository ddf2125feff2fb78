#include "cosprod/analytic.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "cosprod/errors.hpp"
#include "cosprod/pi.hpp"
#include "cosprod/recurrence.hpp"

namespace cosprod {

namespace {

constexpr mpfr_prec_t kGuardBits = 32;

void require_precision(mpfr_prec_t precision) {
  if (precision < kMinPrecision) throw std::invalid_argument("precision must be at least 8 bits");
}

BigFloat one_up() { return BigFloat(bound::kPrecision, 1L); }

// 1 / x rounded up, for x > 0.
BigFloat recip_up(const BigFloat& x) {
  BigFloat r(bound::kPrecision);
  mpfr_ui_div(r.get(), 1, x.get(), MPFR_RNDU);
  return r;
}

// Lower bound on base^exponent for base >= 0.
BigFloat pow_down(const BigFloat& base, unsigned long exponent) {
  BigFloat r(bound::kPrecision);
  mpfr_pow_ui(r.get(), base.get(), exponent, MPFR_RNDD);
  return r;
}

BigFloat pow_up(const BigFloat& base, unsigned long exponent) {
  BigFloat r(bound::kPrecision);
  mpfr_pow_ui(r.get(), base.get(), exponent, MPFR_RNDU);
  return r;
}

// Upper bound on a rational.
BigFloat rational_up(const Rational& r) {
  BigFloat v(bound::kPrecision);
  mpfr_set_q(v.get(), r.get().get_mpq_t(), MPFR_RNDU);
  return v;
}

BigFloat rational_down(const Rational& r) {
  BigFloat v(bound::kPrecision);
  mpfr_set_q(v.get(), r.get().get_mpq_t(), MPFR_RNDD);
  return v;
}

// Upper bound on lambda(2) = pi^2 / 8, the largest of the lambda(2m).
BigFloat lambda2_upper() {
  const BoundedReal pi = pi_constant(bound::kPrecision);
  return bound::mul_2exp_up(bound::mul_up(pi.magnitude_upper(), pi.magnitude_upper()), -3);
}

// Rounded-sum error for a sum or product of positive quantities whose every
// contribution passed through at most `roundings` round-to-nearest steps:
// |computed - exact| <= gamma exact <= gamma / (1 - gamma) |computed|.
BigFloat positive_accumulation_error(const BigFloat& computed, unsigned long roundings,
                                     mpfr_prec_t precision) {
  const BigFloat gamma = bound::gamma(roundings, precision);
  const BigFloat shrink = bound::sub_down(one_up(), gamma);
  return bound::div_up(bound::mul_up(gamma, bound::abs_up(computed)), shrink);
}

// Upper bound on sum_{k > N} -log(1 - a_k), a_k = 1/((2k-1)^2 n^2), n >= 1.
// Uses -log(1 - a) <= a / (1 - a) and a_k <= a_{N+1} for k > N.
BigFloat log_factor_tail(const Rational& n, std::uint64_t num_factors) {
  const Rational inv_n2 = (n * n).reciprocal();
  const Rational odd = Rational(static_cast<long>(2 * num_factors + 1));
  const BigFloat first_omitted = rational_up(inv_n2 / (odd * odd));
  const BigFloat shrink = bound::sub_down(one_up(), first_omitted);
  const BigFloat sum_a = bound::mul_up(rational_up(inv_n2), odd_power_tail(num_factors, 1));
  return bound::div_up(sum_a, shrink);
}

}  // namespace

BigFloat odd_power_tail(std::uint64_t num_terms, unsigned m) {
  if (m == 0) throw std::invalid_argument("m must be at least 1");
  BigFloat odd(bound::kPrecision);
  mpfr_set_ui(odd.get(), 2 * num_terms + 1, MPFR_RNDD);
  // f(k) = (2k-1)^{-2m} is decreasing, so f(k) <= int_{k-1}^{k} f for k >= N+2
  // and the omitted terms sum to at most f(N+1) + int_{N+1}^inf f
  // = (2N+1)^{-2m} + (2N+1)^{1-2m} / (2(2m-1)).
  const BigFloat first = recip_up(pow_down(odd, 2UL * m));
  BigFloat integral_den = pow_down(odd, 2UL * m - 1);
  mpfr_mul_ui(integral_den.get(), integral_den.get(), 2UL * (2UL * m - 1), MPFR_RNDD);
  return bound::add_up(first, recip_up(integral_den));
}

LambdaEstimate lambda_direct(unsigned m, std::uint64_t num_terms, mpfr_prec_t precision) {
  require_precision(precision);
  if (m == 0) throw std::invalid_argument("m must be at least 1");
  if (num_terms == 0) throw std::invalid_argument("num_terms must be at least 1");

  BigFloat sum(precision);
  BigFloat term(precision);
  for (std::uint64_t k = 1; k <= num_terms; ++k) {
    mpfr_ui_pow_ui(term.get(), 2 * k - 1, 2UL * m, MPFR_RNDN);
    mpfr_ui_div(term.get(), 1, term.get(), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
  }
  // Each term: one rounding for the power, one for the reciprocal, then at
  // most N - 1 additions.
  BigFloat err = positive_accumulation_error(sum, num_terms + 1, precision);
  return LambdaEstimate{m, num_terms, BoundedReal(std::move(sum), std::move(err)),
                        odd_power_tail(num_terms, m)};
}

BoundedReal neg_log_S_series(const BoundedReal& x, unsigned order, mpfr_prec_t precision) {
  require_precision(precision);
  if (order == 0) throw std::invalid_argument("order must be at least 1");
  const mpfr_prec_t work = precision + kGuardBits;
  const BoundedReal pi = pi_constant(work);

  // ratio = (2|x| / pi)^2, bounded above
  BigFloat pi_low(bound::kPrecision);
  mpfr_set(pi_low.get(), pi.lower().get(), MPFR_RNDD);
  const BigFloat scaled = bound::div_up(bound::mul_2exp_up(x.magnitude_upper(), 1), pi_low);
  const BigFloat ratio = bound::mul_up(scaled, scaled);
  if (!(ratio < one_up())) {
    throw DomainError("log series needs |x| < pi/2 (got x = " + x.value().to_scientific(12) + ")");
  }

  const CoefficientTable c = euler_coefficients(order);
  const BoundedReal x2 = x.with_precision(work) * x.with_precision(work);
  BoundedReal power = x2;
  BoundedReal sum = BoundedReal::exact(0, work);
  for (unsigned m = 1; m <= order; ++m) {
    if (m > 1) power *= x2;
    sum += power.mul(c.at(m) / Rational(static_cast<long>(m)));
  }

  // c_m x^{2m} = lambda(2m) ratio^m <= lambda(2) ratio^m, so the omitted part
  // is at most lambda(2) ratio^{M+1} / ((M+1)(1 - ratio)).
  BigFloat tail = bound::mul_up(lambda2_upper(), pow_up(ratio, order + 1UL));
  tail = bound::div_ui_up(tail, order + 1UL);
  tail = bound::div_up(tail, bound::sub_down(one_up(), ratio));
  return sum.widened(tail).with_precision(precision);
}

BoundedReal PartialProductResult::enclosure() const {
  if (!log_tail_bound) return value;
  // S >= value e^{-tail} >= value (1 - tail): extend the lower end only.
  const BigFloat drop = bound::mul_up(value.magnitude_upper(), *log_tail_bound);
  return -((-value).with_one_sided_tail(drop));
}

PartialProductResult partial_product(const Rational& n, std::uint64_t num_factors,
                                     mpfr_prec_t precision) {
  require_precision(precision);
  if (num_factors == 0) throw std::invalid_argument("num_factors must be at least 1");
  if (n < Rational(1)) {
    throw DomainError("product needs n >= 1 (got n = " + n.to_string() + ")");
  }
  if (n == Rational(1)) {
    return PartialProductResult{n, num_factors, BoundedReal::exact(0, precision), std::nullopt};
  }

  // factor k = ((2k-1)^2 p^2 - q^2) / ((2k-1)^2 p^2) for n = p/q
  const mpz_class p2 = n.numerator() * n.numerator();
  const mpz_class q2 = n.denominator() * n.denominator();
  BigFloat product(precision);
  mpfr_set_ui(product.get(), 1, MPFR_RNDN);
  BigFloat factor(precision);
  mpq_class f;
  for (std::uint64_t k = 1; k <= num_factors; ++k) {
    mpz_class odd2 = 2 * k - 1;
    odd2 *= odd2;
    f.get_den() = odd2 * p2;
    f.get_num() = f.get_den() - q2;
    f.canonicalize();
    mpfr_set_q(factor.get(), f.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(product.get(), product.get(), factor.get(), MPFR_RNDN);
  }
  // N roundings of factors and N multiplications.
  BigFloat err = positive_accumulation_error(product, 2 * num_factors, precision);
  return PartialProductResult{n, num_factors, BoundedReal(std::move(product), std::move(err)),
                              log_factor_tail(n, num_factors)};
}

RearrangementReport rearrangement_check(const Rational& n, std::uint64_t num_rows,
                                        unsigned series_order, mpfr_prec_t precision) {
  require_precision(precision);
  if (num_rows == 0) throw std::invalid_argument("num_rows must be at least 1");
  if (series_order == 0) throw std::invalid_argument("series_order must be at least 1");
  if (n <= Rational(1)) {
    throw DomainError("rearrangement needs n > 1 (got n = " + n.to_string() + ")");
  }
  const mpfr_prec_t work = precision + kGuardBits;
  const Rational inv_n2 = (n * n).reciprocal();

  // Row order. Row k is -log(1 - y) = sum_j y^j / j with y = 1/((2k-1)^2 n^2);
  // after `series_order` terms its remainder is at most y^{M+1} / ((M+1)(1-y)).
  BoundedReal rows = BoundedReal::exact(0, work);
  BigFloat omitted = log_factor_tail(n, num_rows);
  for (std::uint64_t k = 1; k <= num_rows; ++k) {
    const Rational odd(static_cast<long>(2 * k - 1));
    const Rational y_exact = inv_n2 / (odd * odd);
    const BoundedReal y = real_from_rational(y_exact, work);
    BoundedReal power = y;
    BoundedReal row = y;
    for (unsigned j = 2; j <= series_order; ++j) {
      power *= y;
      row += power.div_ui(j);
    }
    rows += row;
    BigFloat rem = bound::div_ui_up(pow_up(rational_up(y_exact), series_order + 1UL),
                                    series_order + 1UL);
    rem = bound::div_up(rem, bound::sub_down(one_up(), rational_up(y_exact)));
    omitted = bound::add_up(omitted, rem);
  }
  BoundedReal row_order = rows.with_one_sided_tail(omitted).with_precision(precision);

  // Column order: lambda(2m) n^{-2m} / m, with the omitted columns bounded by
  // lambda(2) n^{-2(M+1)} / ((M+1)(1 - n^{-2})).
  BoundedReal columns = BoundedReal::exact(0, work);
  Rational n_pow = Rational(1);
  for (unsigned m = 1; m <= series_order; ++m) {
    n_pow *= inv_n2;
    const BoundedReal lambda = lambda_direct(m, num_rows, work).enclosure();
    columns += lambda.mul(n_pow / Rational(static_cast<long>(m)));
  }
  BigFloat column_tail = bound::mul_up(lambda2_upper(), rational_up(n_pow * inv_n2));
  column_tail = bound::div_ui_up(column_tail, series_order + 1UL);
  column_tail = bound::div_up(column_tail, rational_down(Rational(1) - inv_n2));
  BoundedReal column_order = columns.with_one_sided_tail(column_tail).with_precision(precision);

  return RearrangementReport{n, num_rows, series_order, std::move(row_order),
                             std::move(column_order)};
}

BoundedReal half_pi_over(const Rational& n, mpfr_prec_t precision) {
  if (n.sign() <= 0) throw DomainError("n must be positive");
  const mpfr_prec_t work = precision + kGuardBits;
  return pi_constant(work).mul(Rational(1, 2) / n).with_precision(precision);
}

IdentityReport verify_identity(const Rational& n, std::uint64_t num_factors, unsigned order,
                               mpfr_prec_t precision) {
  require_precision(precision);
  if (n <= Rational(1)) {
    throw DomainError("identity check needs n > 1 (got n = " + n.to_string() + ")");
  }
  const mpfr_prec_t work = precision + kGuardBits;
  const BoundedReal x = half_pi_over(n, work);

  BoundedReal product = partial_product(n, num_factors, precision).enclosure();
  BoundedReal neg_log = neg_log_S_series(x, order, precision);
  BoundedReal via_log = exp_approx(-neg_log, precision);
  BoundedReal cosine = cos_approx(x, precision);
  std::optional<BoundedReal> log_product;
  if (product.certainly_positive()) log_product = log_approx(product, precision);
  return IdentityReport{n,
                        std::move(product),
                        std::move(via_log),
                        std::move(cosine),
                        std::move(neg_log),
                        std::move(log_product)};
}

}  // namespace cosprod
