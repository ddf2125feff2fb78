#ifndef COSPROD_COMMANDS_HPP
#define COSPROD_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cosprod/output_record.hpp"
#include "cosprod/rational.hpp"

namespace cosprod::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kDomainError = 3,
};

inline constexpr unsigned kDefaultPrecision = 128;
inline constexpr std::uint64_t kDefaultNumFactors = 100000;
inline constexpr unsigned kDefaultOrder = 30;
inline constexpr unsigned kDefaultMMax = 10;
inline constexpr std::uint64_t kDefaultLambdaTerms = 100000;
inline constexpr std::uint64_t kDefaultRows = 1000;
inline constexpr unsigned kDefaultRearrangeOrder = 20;

struct CommandResult {
  OutputRecord record;
  int exit_code = kSuccess;
};

CommandResult coeffs_command(unsigned m_max, unsigned precision);
CommandResult lambda_command(unsigned m_max, std::uint64_t num_terms, unsigned precision);
CommandResult product_command(const Rational& n, std::uint64_t num_factors, unsigned precision);
CommandResult verify_command(const Rational& n, std::uint64_t num_factors, unsigned order,
                             unsigned precision);
CommandResult rearrange_command(const Rational& n, std::uint64_t num_rows, unsigned order,
                                unsigned precision);

// Full command line (without the program name). Writes the rendered record
// to `out` (or to --out), diagnostics to `err`, and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cosprod::cli

#endif  // COSPROD_COMMANDS_HPP
