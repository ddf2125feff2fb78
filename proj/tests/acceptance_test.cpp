// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. argv[1] is the path to the cosprod CLI binary.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cosprod/analytic.hpp"
#include "cosprod/errors.hpp"
#include "cosprod/pi.hpp"
#include "cosprod/recurrence.hpp"
#include "cosprod/series.hpp"
#include "mpfr_oracle.hpp"

namespace {

using namespace cosprod;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

Outcome coefficient_cross_check() {
  Outcome out;
  const CoefficientTable c = euler_coefficients(25);
  const std::vector<Rational> tan = tangent_coefficients(25);
  for (std::size_t m = 1; m <= 25; ++m) {
    out.require(c.at(m) * Rational(2) == tan[m - 1], "c_" + std::to_string(m) + " != tan/2");
  }
  out.require(c.at(1) == Rational(1, 2) && c.at(2) == Rational(1, 6) &&
                  c.at(3) == Rational(1, 15) && c.at(4) == Rational(17, 630),
              "first four coefficients");
  return out;
}

Outcome fixed_point_equivalence() {
  Outcome out;
  const OddSeries fixed = picard_fixed_point(25);
  out.require(fixed == OddSeries::from_table(euler_coefficients(25)), "picard != recurrence");
  const std::vector<Rational> residual = ode_residual(fixed);
  out.require(residual.size() == 25, "residual should cover x^0 .. x^48");
  for (std::size_t k = 0; k < residual.size(); ++k) {
    out.require(residual[k].is_zero(), "residual at x^" + std::to_string(2 * k));
  }
  return out;
}

Outcome lambda_closed_forms() {
  Outcome out;
  const Rational expected[] = {Rational(1, 8), Rational(1, 96), Rational(1, 960)};
  for (unsigned m = 1; m <= 3; ++m) {
    const Rational q = lambda_closed_form(m);
    out.require(q == expected[m - 1], "q_" + std::to_string(m) + " = " + q.to_string());
    const LambdaEstimate est = lambda_direct(m, 1000000, 128);
    const BigFloat target = oracle::pi_power_times(2 * m, q);
    out.require(est.value.lower() <= target, "lower bracket m=" + std::to_string(m));
    out.require(target <= est.value.widened(est.tail_bound).upper(),
                "upper bracket m=" + std::to_string(m));
    if (m == 1) {
      const double total = bound::add_up(est.value.abs_error(), est.tail_bound).to_double();
      out.require(total <= 3e-7, "m=1 bound " + std::to_string(total) + " > 3e-7");
    }
  }
  return out;
}

Outcome product_identity() {
  Outcome out;
  for (const Rational& n : {Rational(2), Rational(3), Rational(3, 2), Rational(10)}) {
    const PartialProductResult p = partial_product(n, 100000, 128);
    const BoundedReal cosine = cos_approx(half_pi_over(n, 160), 128);
    // sum of the reported bounds: rounding, tail (as value * tail), cosine
    BigFloat budget = bound::add_up(p.value.abs_error(),
                                    bound::mul_up(p.value.magnitude_upper(), *p.log_tail_bound));
    budget = bound::add_up(budget, cosine.abs_error());
    BigFloat diff(256);
    mpfr_sub(diff.get(), p.value.value().get(), cosine.value().get(), MPFR_RNDN);
    mpfr_abs(diff.get(), diff.get(), MPFR_RNDU);
    out.require(diff <= budget, "n=" + n.to_string() + " deviation exceeds bounds");
    if (n == Rational(3)) {
      const double dev = oracle::abs_diff(p.value.value(), oracle::sqrt_rational(Rational(3, 4)));
      out.require(dev < 1e-5, "n=3 deviation " + std::to_string(dev));
    }
  }
  return out;
}

Outcome log_series_identity() {
  Outcome out;
  const BoundedReal x = pi_constant(128).div_ui(6);
  const BoundedReal r = neg_log_S_series(x, 30, 128);
  out.require(r.contains(oracle::neg(oracle::log(oracle::sqrt_rational(Rational(3, 4))))),
              "-ln(sqrt3/2) outside reported bound");
  out.require(r.abs_error().to_double() <= 1e-8, "bound above 1e-8");
  return out;
}

Outcome rearrangement_consistency() {
  Outcome out;
  const RearrangementReport r = rearrangement_check(Rational(3), 1000, 20, 128);
  out.require(r.consistent(), "row and column intervals do not overlap");
  return out;
}

// Each configuration: run at (precision, terms), rerun at (4x, 10x) and
// require the rerun's value inside the first enclosure.
Outcome bound_soundness() {
  Outcome out;
  std::mt19937_64 rng(664);
  std::uniform_int_distribution<int> prec(24, 160);
  std::uniform_int_distribution<int> terms(1, 2000);
  std::uniform_int_distribution<long> num(11, 200);
  std::uniform_int_distribution<long> den(1, 10);
  std::uniform_int_distribution<unsigned> small_m(1, 8);
  std::uniform_int_distribution<unsigned> order(1, 30);
  int configs = 0;
  const auto random_n = [&] {
    Rational n(num(rng), den(rng));
    return n > Rational(21, 20) ? n : Rational(21, 20);
  };
  const auto check = [&](bool inside, const std::string& what) {
    ++configs;
    out.require(inside, what);
  };
  for (int round = 0; round < 25; ++round) {
    const mpfr_prec_t p = prec(rng);
    const std::uint64_t n_terms = terms(rng);
    {
      const unsigned m = small_m(rng);
      const BoundedReal first = lambda_direct(m, n_terms, p).enclosure();
      const BoundedReal again = lambda_direct(m, 10 * n_terms, 4 * p).value;
      check(first.contains(again.value()), "lambda m=" + std::to_string(m));
    }
    {
      const Rational n = random_n();
      const BoundedReal first = partial_product(n, n_terms, p).enclosure();
      const BoundedReal again = partial_product(n, 10 * n_terms, 4 * p).value;
      check(first.contains(again.value()), "product n=" + n.to_string());
    }
    {
      const Rational n = random_n();
      const unsigned k = order(rng);
      const BoundedReal first = neg_log_S_series(half_pi_over(n, p), k, p);
      const BoundedReal again = neg_log_S_series(half_pi_over(n, 4 * p), 10 * k, 4 * p);
      check(first.contains(again.value()), "log series n=" + n.to_string());
    }
    {
      const Rational n = random_n();
      const BoundedReal first = cos_approx(half_pi_over(n, p), p);
      const BoundedReal again = cos_approx(half_pi_over(n, 4 * p), 4 * p);
      check(first.contains(again.value()), "cosine n=" + n.to_string());
    }
    {
      const BoundedReal first = pi_constant(p);
      check(first.contains(pi_constant(4 * p).value()), "pi p=" + std::to_string(p));
    }
    if (round % 5 == 0) {
      const Rational n = random_n();
      const std::uint64_t rows = 1 + n_terms / 20;
      const unsigned k = 1 + order(rng) / 5;
      const RearrangementReport first = rearrangement_check(n, rows, k, p);
      const RearrangementReport again = rearrangement_check(n, 10 * rows, 10 * k, 4 * p);
      check(first.row_order.contains(again.row_order.value()), "row order n=" + n.to_string());
      check(first.column_order.contains(again.column_order.value()),
            "column order n=" + n.to_string());
    }
  }
  out.require(configs >= 100, "only " + std::to_string(configs) + " configurations");
  if (out.ok) out.detail = std::to_string(configs) + " configurations";
  return out;
}

Outcome edge_cases(const std::string& cli) {
  Outcome out;
  for (std::uint64_t n : {1ull, 2ull, 10ull, 1000ull, 100000ull}) {
    const PartialProductResult p = partial_product(Rational(1), n, 128);
    out.require(p.value.value().is_zero() && p.value.is_exact(),
                "partial_product(1, " + std::to_string(n) + ") not exactly 0");
  }
  const BoundedReal half_pi = pi_constant(128).mul_2exp(-1);
  for (const BoundedReal& x : {half_pi, -half_pi, half_pi.mul_ui(3).div_ui(2),
                               BoundedReal::exact(2, 128)}) {
    bool rejected = false;
    try {
      neg_log_S_series(x, 10, 128);
    } catch (const DomainError&) {
      rejected = true;
    }
    out.require(rejected, "log series accepted x = " + x.to_string(10));
  }
  const std::string command = "\"" + cli + "\" verify --n 1 >/dev/null 2>&1";
  const int status = std::system(command.c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  out.require(code == 3, "verify --n 1 exited with " + std::to_string(code) + ", expected 3");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance_test <path-to-cosprod-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];

  struct Criterion {
    int id;
    std::string name;
    double time_limit_s;  // 0 = none stated
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "coefficient cross-verification", 5, coefficient_cross_check},
      {2, "fixed-point equivalence and ODE residual", 10, fixed_point_equivalence},
      {3, "lambda closed forms and direct brackets", 30, lambda_closed_forms},
      {4, "product identity at desk scale", 60, product_identity},
      {5, "log-series identity", 5, log_series_identity},
      {6, "rearrangement consistency", 30, rearrangement_consistency},
      {7, "bound-soundness property suite", 0, bound_soundness},
      {8, "edge cases", 0, [&] { return edge_cases(cli); }},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && seconds >= c.time_limit_s) {
      outcome.ok = false;
      outcome.detail += (outcome.detail.empty() ? "" : "; ") + std::string("over time limit");
    }
    std::ostringstream line;
    line << (outcome.ok ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << " (";
    line.precision(3);
    line << std::fixed << seconds << " s";
    if (c.time_limit_s > 0) line << ", limit " << c.time_limit_s << " s";
    line << ")";
    if (!outcome.detail.empty()) line << ": " << outcome.detail;
    std::cout << line.str() << std::endl;
    if (!outcome.ok) ++failures;
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed"
                              : std::to_string(failures) + " acceptance criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
