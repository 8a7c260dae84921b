#pragma once

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

namespace pjacobi {

using Cell = std::variant<std::int64_t, double, std::string>;

/// One logical table: named columns, homogeneous row layout.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// 17 significant digits (round-trips any double); a floating marker is kept
/// so the parse is type-faithful.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s = buf;
  if (s.find_first_of(".eEnN") == std::string::npos) s += ".0";
  return s;
}

inline std::string format_cell(const Cell& c) {
  if (std::holds_alternative<std::int64_t>(c)) return std::to_string(std::get<std::int64_t>(c));
  if (std::holds_alternative<double>(c)) return format_double(std::get<double>(c));
  const std::string& s = std::get<std::string>(c);
  if (s.find_first_of(",\n\"") != std::string::npos)
    throw std::invalid_argument("format_cell: string cells must not contain ',', '\"' or newlines");
  return s;
}

/// UTF-8, LF line endings, mandatory header row.
inline std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ',';
    out += t.columns[i];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    if (row.size() != t.columns.size()) throw std::invalid_argument("to_csv: ragged row");
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_cell(row[i]);
    }
    out += '\n';
  }
  return out;
}

namespace detail {

inline Cell parse_cell(const std::string& tok) {
  if (!tok.empty() && tok.find_first_not_of("+-0123456789") == std::string::npos &&
      tok.find_first_of("0123456789") != std::string::npos) {
    try {
      std::size_t pos = 0;
      const long long v = std::stoll(tok, &pos);
      if (pos == tok.size()) return Cell(static_cast<std::int64_t>(v));
    } catch (const std::exception&) {
    }
  }
  try {
    std::size_t pos = 0;
    const double v = std::stod(tok, &pos);
    if (pos == tok.size()) return Cell(v);
  } catch (const std::exception&) {
  }
  return Cell(tok);
}

inline std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(line.substr(start));
      return out;
    }
    out.emplace_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace detail

inline Table from_csv(std::string_view text, std::string name = {}) {
  Table t;
  t.name = std::move(name);
  std::size_t start = 0;
  bool header = true;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (line.empty()) continue;
    if (header) {
      t.columns = detail::split(line, ',');
      header = false;
      continue;
    }
    std::vector<Cell> row;
    for (const auto& tok : detail::split(line, ',')) row.push_back(detail::parse_cell(tok));
    if (row.size() != t.columns.size()) throw std::invalid_argument("from_csv: ragged row");
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline nlohmann::ordered_json to_json(const Table& t) {
  nlohmann::ordered_json j;
  j["columns"] = t.columns;
  auto& rows = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json jr = nlohmann::ordered_json::array();
    for (const auto& c : row) {
      if (std::holds_alternative<std::int64_t>(c))
        jr.push_back(std::get<std::int64_t>(c));
      else if (std::holds_alternative<double>(c))
        jr.push_back(std::get<double>(c));
      else
        jr.push_back(std::get<std::string>(c));
    }
    rows.push_back(std::move(jr));
  }
  return j;
}

inline Table from_json(const nlohmann::ordered_json& j, std::string name = {}) {
  Table t;
  t.name = std::move(name);
  t.columns = j.at("columns").get<std::vector<std::string>>();
  for (const auto& jr : j.at("rows")) {
    std::vector<Cell> row;
    for (const auto& c : jr) {
      if (c.is_number_integer())
        row.emplace_back(c.get<std::int64_t>());
      else if (c.is_number_float())
        row.emplace_back(c.get<double>());
      else
        row.emplace_back(c.get<std::string>());
    }
    if (row.size() != t.columns.size()) throw std::invalid_argument("from_json: ragged row");
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline bool operator==(const Table& a, const Table& b) {
  return a.columns == b.columns && a.rows == b.rows;
}

}  // namespace pjacobi
