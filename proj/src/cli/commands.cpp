#include "cosprod/commands.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "cosprod/analytic.hpp"
#include "cosprod/decimal.hpp"
#include "cosprod/errors.hpp"
#include "cosprod/pi.hpp"
#include "cosprod/recurrence.hpp"

namespace cosprod::cli {

namespace {

constexpr mpfr_prec_t kGuardBits = 32;

const char* pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

void append_decimal(std::vector<std::string>& row, const BoundedReal& x) {
  DecimalText text = format_bounded(x);
  row.push_back(std::move(text.value));
  row.push_back(std::move(text.bound));
}

std::string precision_text(unsigned precision) { return std::to_string(precision); }

}  // namespace

CommandResult coeffs_command(unsigned m_max, unsigned precision) {
  CommandResult result;
  OutputRecord& rec = result.record;
  rec.command = "coeffs";
  rec.parameters = {{"m_max", std::to_string(m_max)}, {"precision", precision_text(precision)}};
  rec.columns = {{"m", CellKind::kInteger},
                 {"c_m", CellKind::kRational},
                 {"tangent_coeff", CellKind::kRational},
                 {"lambda_2m", CellKind::kDecimal},
                 {"lambda_2m_bound", CellKind::kDecimal}};

  const CoefficientTable table = euler_coefficients(m_max);
  const mpfr_prec_t work = precision + kGuardBits;
  const BoundedReal rho2 = pow(pi_constant(work).mul_2exp(-1), 2);
  BoundedReal rho_power = BoundedReal::exact(1, work);
  for (unsigned m = 1; m <= m_max; ++m) {
    rho_power *= rho2;
    const Rational& c = table.at(m);
    std::vector<std::string> row{std::to_string(m), c.to_string(), (c * Rational(2)).to_string()};
    append_decimal(row, rho_power.mul(c).with_precision(precision));
    rec.add_row(std::move(row));
  }
  return result;
}

CommandResult lambda_command(unsigned m_max, std::uint64_t num_terms, unsigned precision) {
  CommandResult result;
  OutputRecord& rec = result.record;
  rec.command = "lambda";
  rec.parameters = {{"m_max", std::to_string(m_max)},
                    {"num_terms", std::to_string(num_terms)},
                    {"precision", precision_text(precision)}};
  rec.columns = {{"m", CellKind::kInteger},         {"direct", CellKind::kDecimal},
                 {"direct_bound", CellKind::kDecimal}, {"closed_form", CellKind::kRational},
                 {"closed_value", CellKind::kDecimal}, {"closed_bound", CellKind::kDecimal},
                 {"status", CellKind::kText}};

  const mpfr_prec_t work = precision + kGuardBits;
  const BoundedReal pi2 = pow(pi_constant(work), 2);
  BoundedReal pi_power = BoundedReal::exact(1, work);
  bool all_pass = true;
  for (unsigned m = 1; m <= m_max; ++m) {
    pi_power *= pi2;
    const Rational q = lambda_closed_form(m);
    const BoundedReal direct = lambda_direct(m, num_terms, precision).enclosure();
    const BoundedReal closed = pi_power.mul(q).with_precision(precision);
    const bool ok = direct.overlaps(closed);
    all_pass = all_pass && ok;

    std::vector<std::string> row{std::to_string(m)};
    append_decimal(row, direct);
    row.push_back(q.to_string());
    append_decimal(row, closed);
    row.emplace_back(pass_fail(ok));
    rec.add_row(std::move(row));
  }
  rec.verdict = pass_fail(all_pass);
  result.exit_code = all_pass ? kSuccess : kVerificationFailed;
  return result;
}

CommandResult product_command(const Rational& n, std::uint64_t num_factors, unsigned precision) {
  CommandResult result;
  OutputRecord& rec = result.record;
  rec.command = "product";
  rec.parameters = {{"n", n.to_string()},
                    {"num_factors", std::to_string(num_factors)},
                    {"precision", precision_text(precision)}};
  rec.columns = {{"num_factors", CellKind::kInteger},
                 {"value", CellKind::kDecimal},
                 {"value_bound", CellKind::kDecimal},
                 {"log_tail_bound", CellKind::kDecimal},
                 {"status", CellKind::kText}};

  if (n < Rational(1)) {
    throw DomainError("product needs n >= 1 (got n = " + n.to_string() + ")");
  }
  const BoundedReal cosine = cos_approx(half_pi_over(n, precision + kGuardBits), precision);

  std::vector<std::uint64_t> trace;
  for (std::uint64_t k = 1; k < num_factors; k *= 10) trace.push_back(k);
  trace.push_back(num_factors);

  bool all_pass = true;
  for (std::uint64_t k : trace) {
    const PartialProductResult p = partial_product(n, k, precision);
    const bool ok = p.enclosure().overlaps(cosine);
    all_pass = all_pass && ok;
    std::vector<std::string> row{std::to_string(k)};
    append_decimal(row, p.value);
    row.push_back(p.log_tail_bound ? format_bound(*p.log_tail_bound) : "n/a");
    row.emplace_back(pass_fail(ok));
    rec.add_row(std::move(row));
  }
  const DecimalText cos_text = format_bounded(cosine);
  rec.notes.push_back("cos(pi/2n) = " + cos_text.value + " +/- " + cos_text.bound);
  if (n == Rational(1)) rec.notes.emplace_back("n = 1: the first factor is exactly 0");
  rec.verdict = pass_fail(all_pass);
  result.exit_code = all_pass ? kSuccess : kVerificationFailed;
  return result;
}

CommandResult verify_command(const Rational& n, std::uint64_t num_factors, unsigned order,
                             unsigned precision) {
  CommandResult result;
  OutputRecord& rec = result.record;
  rec.command = "verify";
  rec.parameters = {{"n", n.to_string()},
                    {"num_factors", std::to_string(num_factors)},
                    {"order", std::to_string(order)},
                    {"precision", precision_text(precision)}};
  rec.columns = {{"method", CellKind::kText},
                 {"value", CellKind::kDecimal},
                 {"bound", CellKind::kDecimal},
                 {"status", CellKind::kText}};

  if (n.sign() <= 0) throw DomainError("n must be positive (got n = " + n.to_string() + ")");

  if (n <= Rational(1)) {
    // Log-based routes are undefined here; report what can still be computed.
    const BoundedReal cosine = cos_approx(half_pi_over(n, precision + kGuardBits), precision);
    if (n == Rational(1)) {
      const PartialProductResult p = partial_product(n, num_factors, precision);
      std::vector<std::string> row{"product"};
      append_decimal(row, p.value);
      row.push_back(p.enclosure().overlaps(cosine) ? "exact zero, matches cosine" : "FAIL");
      rec.add_row(std::move(row));
    } else {
      rec.add_row({"product", "", "", "domain error: n < 1"});
    }
    rec.add_row({"exp_neg_log_series", "", "", "domain error: |x| >= pi/2"});
    std::vector<std::string> row{"cosine"};
    append_decimal(row, cosine);
    row.emplace_back("ok");
    rec.add_row(std::move(row));
    rec.notes.push_back("the log series and the log of the product need n > 1; at n = 1 the "
                        "product has a zero factor and x = pi/2 is on the radius of convergence");
    rec.verdict = "DOMAIN_ERROR";
    result.exit_code = kDomainError;
    return result;
  }

  const IdentityReport report = verify_identity(n, num_factors, order, precision);
  const auto add = [&](const char* method, const BoundedReal& x, bool ok) {
    std::vector<std::string> row{method};
    append_decimal(row, x);
    row.emplace_back(ok ? "consistent" : "INCONSISTENT");
    rec.add_row(std::move(row));
  };
  add("product", report.product, report.product_matches_log() && report.product_matches_cosine());
  add("exp_neg_log_series", report.via_log,
      report.product_matches_log() && report.log_matches_cosine());
  add("cosine", report.cosine, report.product_matches_cosine() && report.log_matches_cosine());

  rec.notes.push_back(std::string("product vs exp(-log series): ") +
                      pass_fail(report.product_matches_log()));
  rec.notes.push_back(std::string("product vs cosine: ") +
                      pass_fail(report.product_matches_cosine()));
  rec.notes.push_back(std::string("exp(-log series) vs cosine: ") +
                      pass_fail(report.log_matches_cosine()));
  rec.notes.push_back(std::string("log(product) vs -log series: ") +
                      (report.log_product ? pass_fail(report.log_domain_consistent()) : "n/a"));
  rec.verdict = pass_fail(report.passed());
  result.exit_code = report.passed() ? kSuccess : kVerificationFailed;
  return result;
}

CommandResult rearrange_command(const Rational& n, std::uint64_t num_rows, unsigned order,
                                unsigned precision) {
  CommandResult result;
  OutputRecord& rec = result.record;
  rec.command = "rearrange";
  rec.parameters = {{"n", n.to_string()},
                    {"rows", std::to_string(num_rows)},
                    {"order", std::to_string(order)},
                    {"precision", precision_text(precision)}};
  rec.columns = {{"summation", CellKind::kText},
                 {"value", CellKind::kDecimal},
                 {"bound", CellKind::kDecimal}};

  const RearrangementReport report = rearrangement_check(n, num_rows, order, precision);
  std::vector<std::string> row{"row_order"};
  append_decimal(row, report.row_order);
  rec.add_row(std::move(row));
  row = {"column_order"};
  append_decimal(row, report.column_order);
  rec.add_row(std::move(row));
  rec.verdict = pass_fail(report.consistent());
  result.exit_code = report.consistent() ? kSuccess : kVerificationFailed;
  return result;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and error-bounded checks of the cosine infinite product", "cosprod"};
  app.require_subcommand(1);

  unsigned precision = kDefaultPrecision;
  std::string format = "table";
  std::string out_path;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--precision", precision, "Working precision in bits")
        ->check(CLI::Range(8U, 1U << 20));
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    sub->add_option("--out", out_path, "Write output to this file instead of stdout");
  };

  unsigned m_max = kDefaultMMax;
  std::uint64_t num_terms = kDefaultLambdaTerms;
  std::uint64_t num_factors = kDefaultNumFactors;
  std::uint64_t rows = kDefaultRows;
  unsigned order = kDefaultOrder;
  unsigned rearrange_order = kDefaultRearrangeOrder;
  std::string n_text;

  CLI::App* coeffs = app.add_subcommand("coeffs", "Exact coefficient table");
  coeffs->add_option("--m-max", m_max, "Number of coefficients")->check(CLI::Range(1U, 100000U));
  add_common(coeffs);

  CLI::App* lambda = app.add_subcommand("lambda", "Odd reciprocal power sums, direct vs closed form");
  lambda->add_option("--m-max", m_max, "Largest m")->check(CLI::Range(1U, 100000U));
  lambda->add_option("--num-terms", num_terms, "Terms in each direct sum")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));
  add_common(lambda);

  CLI::App* product = app.add_subcommand("product", "Partial product convergence trace");
  product->add_option("--n", n_text, "Parameter n as an integer or p/q")->required();
  product->add_option("--num-factors", num_factors, "Number of factors")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));
  add_common(product);

  CLI::App* verify = app.add_subcommand("verify", "Three-way check of the product identity");
  verify->add_option("--n", n_text, "Parameter n as an integer or p/q")->required();
  verify->add_option("--num-factors", num_factors, "Number of product factors")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));
  verify->add_option("--order", order, "Log series order")->check(CLI::Range(1U, 100000U));
  add_common(verify);

  CLI::App* rearrange = app.add_subcommand("rearrange", "Row vs column order of the log double sum");
  rearrange->add_option("--n", n_text, "Parameter n as an integer or p/q")->required();
  rearrange->add_option("--rows", rows, "Number of rows (and terms per lambda sum)")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));
  rearrange->add_option("--order", rearrange_order, "Terms per row / number of columns")
      ->check(CLI::Range(1U, 100000U));
  add_common(rearrange);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  Rational n;
  if (!n_text.empty()) {
    try {
      n = Rational::parse(n_text);
    } catch (const std::invalid_argument& e) {
      err << "usage error: --n: " << e.what() << "\n";
      return kUsageError;
    } catch (const DomainError& e) {
      err << "usage error: --n: " << e.what() << "\n";
      return kUsageError;
    }
  }

  CommandResult result;
  try {
    if (coeffs->parsed()) {
      result = coeffs_command(m_max, precision);
    } else if (lambda->parsed()) {
      result = lambda_command(m_max, num_terms, precision);
    } else if (product->parsed()) {
      result = product_command(n, num_factors, precision);
    } else if (verify->parsed()) {
      result = verify_command(n, num_factors, order, precision);
    } else {
      result = rearrange_command(n, rows, rearrange_order, precision);
    }
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomainError;
  }

  const std::string text = render(result.record, parse_format(format));
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path);
    if (!file) {
      err << "usage error: cannot open '" << out_path << "' for writing\n";
      return kUsageError;
    }
    file << text;
  }
  if (result.exit_code == kDomainError) {
    err << "domain error: see report notes\n";
  }
  return result.exit_code;
}

}  // namespace cosprod::cli
