#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace deltac::io {

inline constexpr std::string_view kSchemaLine = "#schema=deltac-v1";

using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  /// Throws InvalidArgument when the row width differs from the header.
  void add(std::vector<Cell> row);
};

/// 17 significant digits (%.17g): parses back to the identical double.
std::string format_double(double v);

std::string format_cell(const Cell& c);

/// Schema line, header row, data rows; "\n" line endings. Strings holding a
/// comma, quote or newline are quoted with doubled quotes.
std::string to_csv(const Table& t);

/// Inverse of to_csv with every cell kept as text. Throws InvalidArgument
/// if the schema line is missing or a row has the wrong width.
struct TextTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};
TextTable parse_csv(std::string_view text);

/// Writes to a temporary sibling and renames it over `path`.
/// Throws std::runtime_error on I/O failure.
void write_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace deltac::io
