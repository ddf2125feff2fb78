#include "cosprod/commands.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cosprod/decimal.hpp"
#include "cosprod/output_record.hpp"
#include "cosprod/pi.hpp"

namespace cosprod::cli {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) lines.push_back(line);
  return lines;
}

TEST(DecimalTest, DigitsFollowTheBound) {
  const BoundedReal x = real_from_rational(Rational(1, 3), 64).widened(BigFloat(64, 1e-6));
  const DecimalText t = format_bounded(x);
  // certain to the 1e-6 place, plus two guard digits
  EXPECT_EQ(t.value, "3.3333333e-01");
  EXPECT_EQ(t.bound, "1.1e-06");
}

TEST(DecimalTest, ExactValues) {
  EXPECT_EQ(format_bounded(BoundedReal::exact(0, 64)).value, "0");
  EXPECT_EQ(format_bounded(real_from_rational(Rational(1, 2), 64)).value, "5e-01");
  EXPECT_EQ(format_bounded(real_from_rational(Rational(1, 2), 64)).bound, "0");
}

TEST(DecimalTest, BoundRoundsUp) {
  EXPECT_EQ(format_bound(BigFloat(64, 1.2345e-7)), "1.3e-07");
  EXPECT_EQ(format_bound(BigFloat(64, 0.0)), "0");
}

TEST(OutputRecordTest, CsvQuotesRationals) {
  const CliRun r = run({"coeffs", "--m-max", "4", "--format", "csv"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto lines = split_lines(r.out);
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[0], "m,c_m,tangent_coeff,lambda_2m,lambda_2m_bound");
  EXPECT_EQ(lines[4].rfind("4,\"17/630\",\"17/315\",1.000155179", 0), 0u) << lines[4];
}

TEST(OutputRecordTest, JsonRoundTrips) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"coeffs", "--m-max", "5", "--format", "json"},
        std::vector<std::string>{"lambda", "--m-max", "3", "--num-terms", "100", "--format", "json"},
        std::vector<std::string>{"verify", "--n", "1", "--format", "json"},
        std::vector<std::string>{"verify", "--n", "5/2", "--num-factors", "100", "--format", "json"}}) {
    const CliRun r = run(args);
    const OutputRecord parsed = parse_json(r.out);
    EXPECT_EQ(render_json(parsed), r.out);
  }
  EXPECT_THROW(parse_json("{\"command\": 3}"), std::invalid_argument);
  EXPECT_THROW(parse_json("not json"), std::invalid_argument);
}

TEST(OutputRecordTest, CsvAndJsonCarrySameCells) {
  const CliRun csv = run({"lambda", "--m-max", "4", "--num-terms", "500", "--format", "csv"});
  const CliRun json = run({"lambda", "--m-max", "4", "--num-terms", "500", "--format", "json"});
  const OutputRecord rec = parse_json(json.out);
  std::string rebuilt = render_csv(rec);
  EXPECT_EQ(rebuilt, csv.out);
}

TEST(OutputRecordTest, RowWidthChecked) {
  OutputRecord rec;
  rec.columns = {{"a", CellKind::kText}};
  EXPECT_THROW(rec.add_row({"x", "y"}), std::logic_error);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

TEST(CliTest, CoeffsFirstRow) {
  const CliRun r = run({"coeffs", "--m-max", "1"});
  ASSERT_EQ(r.code, kSuccess);
  EXPECT_NE(r.out.find("1/2"), std::string::npos);
}

TEST(CliTest, CoeffsUsageErrors) {
  EXPECT_EQ(run({"coeffs", "--m-max", "0"}).code, kUsageError);
  EXPECT_EQ(run({"coeffs", "--format", "xml"}).code, kUsageError);
  EXPECT_EQ(run({}).code, kUsageError);
  EXPECT_EQ(run({"bogus"}).code, kUsageError);
  EXPECT_EQ(run({"coeffs", "--precision", "4"}).code, kUsageError);
  EXPECT_EQ(run({"coeffs", "--help"}).code, kSuccess);
}

TEST(CliTest, LambdaTable) {
  const CliRun r = run({"lambda", "--m-max", "3", "--num-terms", "1000"});
  ASSERT_EQ(r.code, kSuccess) << r.out;
  EXPECT_NE(r.out.find("1/8"), std::string::npos);
  EXPECT_NE(r.out.find("1/96"), std::string::npos);
  EXPECT_NE(r.out.find("1/960"), std::string::npos);
  EXPECT_NE(r.out.find("1.2337005"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("verdict: PASS"), std::string::npos);
}

TEST(CliTest, LambdaDefaultsAllPass) {
  const CommandResult r =
      lambda_command(kDefaultMMax, kDefaultLambdaTerms, kDefaultPrecision);
  EXPECT_EQ(r.exit_code, kSuccess);
  for (const auto& row : r.record.rows) EXPECT_EQ(row.back(), "PASS");
}

TEST(CliTest, VerifyPasses) {
  const CliRun three = run({"verify", "--n", "3"});
  EXPECT_EQ(three.code, kSuccess) << three.out;
  EXPECT_NE(three.out.find("8.660254"), std::string::npos);
  EXPECT_NE(three.out.find("verdict: PASS"), std::string::npos);

  const CliRun three_halves = run({"verify", "--n", "3/2"});
  EXPECT_EQ(three_halves.code, kSuccess);
  EXPECT_NE(three_halves.out.find("5.0000"), std::string::npos);
}

TEST(CliTest, VerifyAtOneIsDomainError) {
  const CliRun r = run({"verify", "--n", "1", "--format", "json"});
  EXPECT_EQ(r.code, kDomainError);
  const OutputRecord rec = parse_json(r.out);
  ASSERT_EQ(rec.rows.size(), 3u);
  EXPECT_EQ(rec.rows[0][1], "0");
  EXPECT_EQ(rec.rows[0][2], "0");
  EXPECT_NE(rec.rows[1][3].find("domain error"), std::string::npos);
  EXPECT_EQ(rec.verdict, "DOMAIN_ERROR");
  EXPECT_FALSE(rec.notes.empty());
}

TEST(CliTest, NonPositiveAndDecimalN) {
  EXPECT_EQ(run({"verify", "--n", "1/2"}).code, kDomainError);
  EXPECT_EQ(run({"verify", "--n", "0"}).code, kDomainError);
  EXPECT_EQ(run({"product", "--n", "1/2"}).code, kDomainError);
  EXPECT_EQ(run({"rearrange", "--n", "1"}).code, kDomainError);
  EXPECT_EQ(run({"verify", "--n", "1.5"}).code, kUsageError);
  EXPECT_EQ(run({"verify"}).code, kUsageError);
}

TEST(CliTest, ProductTrace) {
  const CliRun r = run({"product", "--n", "2", "--num-factors", "1000", "--format", "json"});
  ASSERT_EQ(r.code, kSuccess);
  const OutputRecord rec = parse_json(r.out);
  ASSERT_EQ(rec.rows.size(), 4u);
  EXPECT_EQ(rec.rows.back()[0], "1000");
  for (const auto& row : rec.rows) EXPECT_EQ(row.back(), "PASS");

  const CliRun one = run({"product", "--n", "1", "--num-factors", "10", "--format", "csv"});
  EXPECT_EQ(one.code, kSuccess);
  EXPECT_NE(one.out.find("n/a"), std::string::npos);
}

TEST(CliTest, Rearrange) {
  const CliRun r = run({"rearrange", "--n", "10", "--rows", "200", "--order", "8"});
  EXPECT_EQ(r.code, kSuccess) << r.out;
  EXPECT_NE(r.out.find("verdict: PASS"), std::string::npos);
}

TEST(CliTest, WritesToOutFile) {
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / "cosprod_cli_test_out.csv";
  std::filesystem::remove(path);
  const CliRun r = run({"coeffs", "--m-max", "2", "--format", "csv", "--out", path.string()});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream contents;
  contents << in.rdbuf();
  EXPECT_NE(contents.str().find("\"1/6\""), std::string::npos);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace cosprod::cli
