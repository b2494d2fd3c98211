#ifndef CVQRC_HARNESS_CSV_HPP
#define CVQRC_HARNESS_CSV_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace cvqrc::harness {

// Comma-separated table with a mandatory header row.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Column position of `name`; throws ConfigError if absent.
  std::size_t column(const std::string& name) const;
  bool has_column(const std::string& name) const;
  // Cell parsed as a double; throws ConfigError naming the line on failure.
  double number(std::size_t row, std::size_t col) const;
};

// Shortest text that parses back to exactly `value`.
std::string format_number(double value);

// Throws ConfigError on I/O failure.
void write_csv(const std::filesystem::path& path, const CsvTable& table);

// Throws ConfigError if the file cannot be read, a row has the wrong number
// of fields, or the first line looks like data rather than a header. Error
// messages carry the 1-based line number.
CsvTable read_csv(const std::filesystem::path& path);

}  // namespace cvqrc::harness

#endif  // CVQRC_HARNESS_CSV_HPP
