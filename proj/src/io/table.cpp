#include "deltac/io/table.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <system_error>
#include <unistd.h>

#include "deltac/errors.hpp"

namespace deltac::io {

void Table::add(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw InvalidArgument("Table::add: row width differs from header");
  rows.push_back(std::move(row));
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string quoted(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

void append_row(std::string& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += quoted(cells[i]);
  }
  out += '\n';
}

// one logical CSV record starting at pos; advances pos past its newline
std::vector<std::string> read_record(std::string_view text, std::size_t& pos) {
  std::vector<std::string> cells(1);
  bool in_quotes = false;
  while (pos < text.size()) {
    const char ch = text[pos++];
    if (in_quotes) {
      if (ch == '"') {
        if (pos < text.size() && text[pos] == '"') {
          cells.back() += '"';
          ++pos;
        } else {
          in_quotes = false;
        }
      } else {
        cells.back() += ch;
      }
    } else if (ch == '"') {
      in_quotes = true;
    } else if (ch == ',') {
      cells.emplace_back();
    } else if (ch == '\n') {
      return cells;
    } else if (ch != '\r') {
      cells.back() += ch;
    }
  }
  if (in_quotes) throw InvalidArgument("parse_csv: unterminated quoted field");
  return cells;
}

}  // namespace

std::string format_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

std::string to_csv(const Table& t) {
  std::string out(kSchemaLine);
  out += '\n';
  append_row(out, t.columns);
  std::vector<std::string> cells;
  for (const auto& row : t.rows) {
    cells.clear();
    for (const auto& c : row) cells.push_back(format_cell(c));
    append_row(out, cells);
  }
  return out;
}

TextTable parse_csv(std::string_view text) {
  const auto eol = text.find('\n');
  std::string_view first = text.substr(0, eol);
  if (!first.empty() && first.back() == '\r') first.remove_suffix(1);
  if (first != kSchemaLine) throw InvalidArgument("parse_csv: missing schema line");
  if (eol == std::string_view::npos) throw InvalidArgument("parse_csv: missing header row");
  std::size_t pos = eol + 1;
  TextTable out;
  out.columns = read_record(text, pos);
  while (pos < text.size()) {
    auto row = read_record(text, pos);
    if (row.size() == 1 && row[0].empty()) continue;
    if (row.size() != out.columns.size()) throw InvalidArgument("parse_csv: row width differs from header");
    out.rows.push_back(std::move(row));
  }
  return out;
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) {
      std::error_code ignore;
      std::filesystem::remove(tmp, ignore);
      throw std::runtime_error("write failed: " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignore;
    std::filesystem::remove(tmp, ignore);
    throw std::runtime_error("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
  }
}

}  // namespace deltac::io
