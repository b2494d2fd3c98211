#include "cvqrc/harness/csv.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "cvqrc/error.hpp"

namespace cvqrc::harness {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

bool parses_as_number(const std::string& s) {
  if (s.empty()) return false;
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  return ec == std::errc{} && ptr == end;
}

}  // namespace

std::size_t CsvTable::column(const std::string& name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw ConfigError("CSV has no column '" + name + "'", name);
  return static_cast<std::size_t>(it - header.begin());
}

bool CsvTable::has_column(const std::string& name) const {
  return std::find(header.begin(), header.end(), name) != header.end();
}

double CsvTable::number(std::size_t row, std::size_t col) const {
  const auto& cell = rows.at(row).at(col);
  double v = 0.0;
  const auto* end = cell.data() + cell.size();
  const auto [ptr, ec] = std::from_chars(cell.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError("line " + std::to_string(row + 2) + ": '" + cell + "' in column '" +
                      header.at(col) + "' is not a number", header.at(col));
  }
  return v;
}

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path.string());
  const auto write_row = [&out](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << row[i];
    }
    out << '\n';
  };
  write_row(table.header);
  for (const auto& row : table.rows) write_row(row);
  if (!out) throw ConfigError("failed writing " + path.string());
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read CSV file " + path.string());
  CsvTable table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_line(line);
    if (table.header.empty()) {
      if (std::any_of(fields.begin(), fields.end(), parses_as_number) || fields.empty()) {
        throw ConfigError(path.string() + ": line " + std::to_string(lineno) +
                          ": expected a header row, found data");
      }
      table.header = std::move(fields);
      continue;
    }
    if (fields.size() != table.header.size()) {
      throw ConfigError(path.string() + ": line " + std::to_string(lineno) + ": expected " +
                        std::to_string(table.header.size()) + " fields, found " +
                        std::to_string(fields.size()));
    }
    table.rows.push_back(std::move(fields));
  }
  if (table.header.empty()) throw ConfigError(path.string() + ": line 1: missing header row");
  return table;
}

}  // namespace cvqrc::harness
