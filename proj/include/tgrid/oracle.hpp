#pragma once

// Brute-force reference implementations.
//
// Nothing in here calls the geometric predicates of the main library: the
// determinant, adjacency and distance tests are written out again from the
// definitions, and threshold membership is decided by table lookup instead
// of convex hulls. Only the GridFunction container is shared.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "tgrid/error.hpp"
#include "tgrid/geometry.hpp"
#include "tgrid/grid_function.hpp"

namespace tgrid::oracle {

inline constexpr std::size_t kNaiveThresholdLimit = 64;
inline constexpr std::size_t kNaiveTwoThresholdLimit = 25;

namespace detail {

inline std::int64_t det3(Point a, Point b, Point c) {
  // | a.x a.y 1 |
  // | b.x b.y 1 |
  // | c.x c.y 1 |
  return a.x * (b.y - c.y) - a.y * (b.x - c.x) + (b.x * c.y - b.y * c.x);
}

inline std::int64_t dist2(Point p, Point q) {
  return (p.x - q.x) * (p.x - q.x) + (p.y - q.y) * (p.y - q.y);
}

/// Adjacent by scanning: distinct, and no grid point strictly between them.
inline bool adjacent_in_grid(Point a, Point b, GridDim dim) {
  if (a.x == b.x && a.y == b.y) return false;
  for (Coord x = std::min(a.x, b.x); x <= std::max(a.x, b.x); ++x) {
    for (Coord y = std::min(a.y, b.y); y <= std::max(a.y, b.y); ++y) {
      const Point p{x, y};
      if ((p.x == a.x && p.y == a.y) || (p.x == b.x && p.y == b.y)) continue;
      if (!dim.contains(p)) continue;
      if (det3(a, b, p) == 0) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Literal evaluation of the three defining clauses of f_AB at every point.
inline GridFunction naive_function_from_segment(Point a, Point b, GridDim dim) {
  if (!dim.contains(a) || !dim.contains(b)) {
    throw precondition_error("naive_function_from_segment: endpoint outside grid");
  }
  if (!detail::adjacent_in_grid(a, b, dim)) {
    throw precondition_error("naive_function_from_segment: endpoints are not adjacent");
  }
  GridFunction f(dim);
  for (Coord y = 0; y < dim.n; ++y) {
    for (Coord x = 0; x < dim.m; ++x) {
      const Point p{x, y};
      bool value;
      if (p == a) {
        value = true;
      } else if (p == b) {
        value = false;
      } else if (detail::det3(a, b, p) == 0) {
        value = detail::dist2(a, p) < detail::dist2(b, p);
      } else {
        value = detail::det3(a, b, p) > 0;
      }
      f.set(p, value);
    }
  }
  return f;
}

inline GridFunction naive_function_from_segment(const OrientedSegment& s, GridDim dim) {
  return naive_function_from_segment(s.a(), s.b(), dim);
}

/// Truth tables of all oriented adjacent pairs, in (A, B) lexicographic order.
inline std::vector<GridFunction> naive_threshold_table(GridDim dim) {
  if (dim.size() > kNaiveThresholdLimit) {
    throw guard_exceeded("naive_threshold_table: grid " + to_string(dim) + " exceeds " +
                         std::to_string(kNaiveThresholdLimit) + " points");
  }
  std::vector<GridFunction> table;
  for (Coord ax = 0; ax < dim.m; ++ax)
    for (Coord ay = 0; ay < dim.n; ++ay)
      for (Coord bx = 0; bx < dim.m; ++bx)
        for (Coord by = 0; by < dim.n; ++by)
          if (detail::adjacent_in_grid({ax, ay}, {bx, by}, dim))
            table.push_back(naive_function_from_segment({ax, ay}, {bx, by}, dim));
  return table;
}

/// Threshold iff constant or equal to some segment-defined truth table.
inline bool naive_is_threshold(const GridFunction& f, const std::vector<GridFunction>& table) {
  if (f.is_constant()) return true;
  return std::find(table.begin(), table.end(), f) != table.end();
}

inline bool naive_is_threshold(const GridFunction& f) {
  if (f.size() > kNaiveThresholdLimit) {
    throw guard_exceeded("naive_is_threshold: grid " + to_string(f.dim()) + " exceeds " +
                         std::to_string(kNaiveThresholdLimit) + " points");
  }
  return naive_is_threshold(f, naive_threshold_table(f.dim()));
}

/// Threshold, or the AND of two table entries.
inline bool naive_is_two_threshold(const GridFunction& f, const std::vector<GridFunction>& table) {
  if (f.size() > kNaiveTwoThresholdLimit) {
    throw guard_exceeded("naive_is_two_threshold: grid " + to_string(f.dim()) + " exceeds " +
                         std::to_string(kNaiveTwoThresholdLimit) + " points");
  }
  if (naive_is_threshold(f, table)) return true;
  for (const auto& g : table)
    for (const auto& h : table)
      if ((g & h) == f) return true;
  return false;
}

inline bool naive_is_two_threshold(const GridFunction& f) {
  if (f.size() > kNaiveTwoThresholdLimit) {
    throw guard_exceeded("naive_is_two_threshold: grid " + to_string(f.dim()) + " exceeds " +
                         std::to_string(kNaiveTwoThresholdLimit) + " points");
  }
  return naive_is_two_threshold(f, naive_threshold_table(f.dim()));
}

}  // namespace tgrid::oracle
