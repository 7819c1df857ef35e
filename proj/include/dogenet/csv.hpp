#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dogenet {

/// A parsed RFC-4180 table. The first row is the header.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of a header column, case-insensitive. nullopt when absent.
  std::optional<std::size_t> column(std::string_view name) const;
};

/// Parses RFC-4180 text (quoted fields, doubled quotes, CRLF or LF).
/// A UTF-8 byte-order mark at the start is skipped. Blank lines are ignored.
/// Throws std::runtime_error on an unterminated quoted field.
CsvTable parse_csv(std::string_view text);

/// Quotes a field when it contains a comma, quote, or line break.
std::string csv_escape(std::string_view field);

std::string read_file(const std::string& path);

}  // namespace dogenet
