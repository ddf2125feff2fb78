#ifndef COSPROD_OUTPUT_RECORD_HPP
#define COSPROD_OUTPUT_RECORD_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cosprod::cli {

enum class CellKind { kInteger, kRational, kDecimal, kText };

struct Column {
  std::string name;
  CellKind kind = CellKind::kText;

  friend bool operator==(const Column&, const Column&) = default;
};

// One command invocation's result. Every cell is already a string: rationals
// as "p/q", inexact decimals next to a bound column.
struct OutputRecord {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<Column> columns;
  std::vector<std::vector<std::string>> rows;
  std::optional<std::string> verdict;
  std::vector<std::string> notes;

  void add_row(std::vector<std::string> row);

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

enum class OutputFormat { kTable, kCsv, kJson };

OutputFormat parse_format(std::string_view name);

std::string render_table(const OutputRecord& record);
// Header row, then one line per row; rational cells are double-quoted.
std::string render_csv(const OutputRecord& record);
// {command, parameters, columns, rows: [{name: cell}], verdict?, notes?}
std::string render_json(const OutputRecord& record);
std::string render(const OutputRecord& record, OutputFormat format);

// Inverse of render_json. Throws std::invalid_argument on malformed input.
OutputRecord parse_json(std::string_view text);

}  // namespace cosprod::cli

#endif  // COSPROD_OUTPUT_RECORD_HPP
