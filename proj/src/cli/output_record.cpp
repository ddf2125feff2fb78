#include "cosprod/output_record.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cosprod::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::pair<CellKind, std::string_view> kKindNames[] = {
    {CellKind::kInteger, "integer"},
    {CellKind::kRational, "rational"},
    {CellKind::kDecimal, "decimal"},
    {CellKind::kText, "text"},
};

std::string_view kind_name(CellKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "text";
}

CellKind kind_from_name(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  throw std::invalid_argument("unknown column kind '" + std::string(name) + "'");
}

std::string csv_cell(const std::string& cell, CellKind kind) {
  const bool needs_quotes = kind == CellKind::kRational ||
                            cell.find_first_of(",\"\n") != std::string::npos;
  if (!needs_quotes) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void OutputRecord::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("row width does not match the column list");
  }
  rows.push_back(std::move(row));
}

OutputFormat parse_format(std::string_view name) {
  if (name == "table") return OutputFormat::kTable;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string render_table(const OutputRecord& record) {
  std::ostringstream os;
  os << "# " << record.command;
  for (const auto& [key, value] : record.parameters) os << "  " << key << '=' << value;
  os << '\n';

  std::vector<std::size_t> width(record.columns.size());
  for (std::size_t c = 0; c < record.columns.size(); ++c) {
    width[c] = record.columns[c].name.size();
    for (const auto& row : record.rows) width[c] = std::max(width[c], row[c].size());
  }
  const auto emit = [&](auto&& cell_at) {
    for (std::size_t c = 0; c < width.size(); ++c) {
      const std::string& cell = cell_at(c);
      os << cell;
      if (c + 1 < width.size()) os << std::string(width[c] - cell.size() + 2, ' ');
    }
    os << '\n';
  };
  emit([&](std::size_t c) -> const std::string& { return record.columns[c].name; });
  for (const auto& row : record.rows) {
    emit([&](std::size_t c) -> const std::string& { return row[c]; });
  }
  for (const auto& note : record.notes) os << "note: " << note << '\n';
  if (record.verdict) os << "verdict: " << *record.verdict << '\n';
  return os.str();
}

std::string render_csv(const OutputRecord& record) {
  std::ostringstream os;
  for (std::size_t c = 0; c < record.columns.size(); ++c) {
    if (c) os << ',';
    os << csv_cell(record.columns[c].name, CellKind::kText);
  }
  os << '\n';
  for (const auto& row : record.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ',';
      os << csv_cell(row[c], record.columns[c].kind);
    }
    os << '\n';
  }
  return os.str();
}

std::string render_json(const OutputRecord& record) {
  Json j;
  j["command"] = record.command;
  Json params = Json::object();
  for (const auto& [key, value] : record.parameters) params[key] = value;
  j["parameters"] = std::move(params);
  Json columns = Json::array();
  for (const auto& col : record.columns) {
    columns.push_back({{"name", col.name}, {"kind", kind_name(col.kind)}});
  }
  j["columns"] = std::move(columns);
  Json rows = Json::array();
  for (const auto& row : record.rows) {
    Json obj = Json::object();
    for (std::size_t c = 0; c < row.size(); ++c) obj[record.columns[c].name] = row[c];
    rows.push_back(std::move(obj));
  }
  j["rows"] = std::move(rows);
  if (record.verdict) j["verdict"] = *record.verdict;
  if (!record.notes.empty()) j["notes"] = record.notes;
  return j.dump(2) + "\n";
}

std::string render(const OutputRecord& record, OutputFormat format) {
  switch (format) {
    case OutputFormat::kTable:
      return render_table(record);
    case OutputFormat::kCsv:
      return render_csv(record);
    case OutputFormat::kJson:
      return render_json(record);
  }
  throw std::invalid_argument("unknown output format");
}

OutputRecord parse_json(std::string_view text) {
  try {
    const Json j = Json::parse(text);
    OutputRecord record;
    record.command = j.at("command").get<std::string>();
    for (const auto& [key, value] : j.at("parameters").items()) {
      record.parameters.emplace_back(key, value.get<std::string>());
    }
    for (const auto& col : j.at("columns")) {
      record.columns.push_back(
          Column{col.at("name").get<std::string>(), kind_from_name(col.at("kind").get<std::string>())});
    }
    for (const auto& obj : j.at("rows")) {
      std::vector<std::string> row;
      for (const auto& col : record.columns) row.push_back(obj.at(col.name).get<std::string>());
      record.add_row(std::move(row));
    }
    if (j.contains("verdict")) record.verdict = j.at("verdict").get<std::string>();
    if (j.contains("notes")) record.notes = j.at("notes").get<std::vector<std::string>>();
    return record;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed record JSON: ") + e.what());
  }
}

}  // namespace cosprod::cli
