#pragma once

// Grid bitmap documents and pair documents.
//
// Grid document:
//   m n
//   <n lines of m characters '0'/'1', top line is row y = n-1>
//
// Pair document (JSON): {"m": M, "n": N, "pairs": [{"A": [x,y], "B": .., "C": .., "D": ..}]}

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tgrid/error.hpp"
#include "tgrid/geometry.hpp"
#include "tgrid/grid_function.hpp"
#include "tgrid/two_threshold.hpp"

namespace tgrid {

inline constexpr Coord kMaxDocumentSide = 1 << 16;

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

inline bool parse_decimal(std::string_view s, Coord& out) {
  if (s.empty() || s.size() > 9) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc{} && res.ptr == s.data() + s.size();
}

}  // namespace detail

inline GridFunction parse_grid(std::string_view text) {
  if (text.empty()) throw parse_error(1, "empty document");
  if (text.back() != '\n') throw parse_error(0, "document must end with a single newline");
  const auto lines = detail::split_lines(text);

  const std::string_view header = lines[0];
  const std::size_t space = header.find(' ');
  Coord m = 0, n = 0;
  if (space == std::string_view::npos || !detail::parse_decimal(header.substr(0, space), m) ||
      !detail::parse_decimal(header.substr(space + 1), n)) {
    throw parse_error(1, "malformed header, expected \"m n\"");
  }
  if (m < 1 || n < 1 || m > kMaxDocumentSide || n > kMaxDocumentSide) {
    throw parse_error(1, "grid dimensions out of range");
  }
  const GridDim dim(m, n);
  if (lines.size() != static_cast<std::size_t>(n) + 1) {
    throw parse_error(lines.size() < static_cast<std::size_t>(n) + 1 ? lines.size() + 1 : n + 2,
                      "expected " + std::to_string(n) + " rows, found " + std::to_string(lines.size() - 1));
  }

  GridFunction f(dim);
  for (Coord j = 0; j < n; ++j) {
    const std::string_view row = lines[static_cast<std::size_t>(j) + 1];
    const std::size_t line_no = static_cast<std::size_t>(j) + 2;
    if (row.size() != static_cast<std::size_t>(m)) {
      throw parse_error(line_no, "bad line length " + std::to_string(row.size()) + ", expected " +
                                     std::to_string(m));
    }
    for (Coord x = 0; x < m; ++x) {
      const char c = row[static_cast<std::size_t>(x)];
      if (c != '0' && c != '1') {
        throw parse_error(line_no, "illegal character at column " + std::to_string(x + 1));
      }
      f.set(Point{x, n - 1 - j}, c == '1');
    }
  }
  return f;
}

inline std::string render_grid(const GridFunction& f) {
  const GridDim dim = f.dim();
  std::string out = std::to_string(dim.m) + " " + std::to_string(dim.n) + "\n";
  for (Coord y = dim.n - 1; y >= 0; --y) {
    for (Coord x = 0; x < dim.m; ++x) out += f(Point{x, y}) ? '1' : '0';
    out += '\n';
  }
  return out;
}

struct PairDocument {
  GridDim dim;
  std::vector<ProperPair> pairs;

  friend bool operator==(const PairDocument&, const PairDocument&) = default;
};

namespace detail {

inline nlohmann::ordered_json point_json(Point p) { return nlohmann::ordered_json::array({p.x, p.y}); }

inline Point json_point(const nlohmann::ordered_json& j, const char* key) {
  if (!j.contains(key)) throw parse_error(0, std::string("pair is missing key ") + key);
  const auto& v = j.at(key);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
    throw parse_error(0, std::string("key ") + key + " must be [x, y]");
  }
  return Point{v[0].get<Coord>(), v[1].get<Coord>()};
}

}  // namespace detail

inline std::string render_pairs(const PairDocument& doc) {
  nlohmann::ordered_json j;
  j["m"] = doc.dim.m;
  j["n"] = doc.dim.n;
  j["pairs"] = nlohmann::ordered_json::array();
  for (const auto& p : doc.pairs) {
    nlohmann::ordered_json e;
    e["A"] = detail::point_json(p.first().a());
    e["B"] = detail::point_json(p.first().b());
    e["C"] = detail::point_json(p.second().a());
    e["D"] = detail::point_json(p.second().b());
    j["pairs"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

/// Reads a pair document. Points must lie in the grid, each (A,B) and (C,D)
/// must be prime, and each pair must be proper.
inline PairDocument parse_pairs(std::string_view text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(0, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("m") || !j.contains("n") || !j.contains("pairs") ||
      !j["m"].is_number_integer() || !j["n"].is_number_integer() || !j["pairs"].is_array()) {
    throw parse_error(0, "pair document needs integer m, n and an array pairs");
  }
  const Coord m = j["m"].get<Coord>();
  const Coord n = j["n"].get<Coord>();
  if (m < 1 || n < 1 || m > kMaxDocumentSide || n > kMaxDocumentSide) {
    throw parse_error(0, "grid dimensions out of range");
  }
  PairDocument doc{GridDim(m, n), {}};
  for (const auto& e : j["pairs"]) {
    if (!e.is_object()) throw parse_error(0, "each pair must be an object");
    const Point a = detail::json_point(e, "A"), b = detail::json_point(e, "B");
    const Point c = detail::json_point(e, "C"), d = detail::json_point(e, "D");
    for (Point p : {a, b, c, d})
      if (!doc.dim.contains(p)) throw parse_error(0, "point " + to_string(p) + " outside the grid");
    if (!is_prime(a, b) || !is_prime(c, d)) throw parse_error(0, "segments must be prime");
    const OrientedSegment ab(a, b), cd(c, d);
    if (!proper_conditions_hold(ab, cd)) {
      throw parse_error(0, "pair " + to_string(a) + "->" + to_string(b) + ", " + to_string(c) + "->" +
                               to_string(d) + " is not proper");
    }
    doc.pairs.emplace_back(ab, cd);
  }
  return doc;
}

}  // namespace tgrid
