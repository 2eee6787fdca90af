#pragma once

// Threshold functions on a grid and their oriented prime segments.

#include <algorithm>
#include <cstdlib>
#include <utility>
#include <vector>

#include "tgrid/error.hpp"
#include "tgrid/geometry.hpp"
#include "tgrid/grid_function.hpp"

namespace tgrid {

inline constexpr std::size_t kThresholdEnumerationLimit = 4096;

inline void require_segment_in_grid(const OrientedSegment& seg, GridDim dim, const char* what) {
  require_in_grid(dim, seg.a(), what);
  require_in_grid(dim, seg.b(), what);
}

/// Value of f_AB at p. Off the line through A and B: true iff ABp turns
/// counterclockwise. On the line p = A + t(B - A) with integer t (AB is
/// prime), and p is closer to A than to B exactly when t <= 0.
inline bool segment_value(const OrientedSegment& seg, Point p) {
  const Point d = seg.direction();
  const Point e = p - seg.a();
  const Coord side = cross(d, e);
  if (side != 0) return side > 0;
  return dot(d, e) <= 0;
}

/// The threshold function f_AB on the grid.
inline GridFunction function_from_segment(const OrientedSegment& seg, GridDim dim) {
  require_segment_in_grid(seg, dim, "function_from_segment");
  GridFunction f(dim);
  for (std::size_t i = 0; i < dim.size(); ++i) f.set(i, segment_value(seg, dim.point(i)));
  return f;
}

/// Integer half-plane w1*x + w2*y >= w0.
struct SeparatingInequality {
  Coord w1 = 0;
  Coord w2 = 0;
  Coord w0 = 0;

  bool holds(Point p) const { return w1 * p.x + w2 * p.y >= w0; }

  friend bool operator==(const SeparatingInequality&, const SeparatingInequality&) = default;
};

/// An inequality whose solution set on the grid is exactly M_1(f_AB).
///
/// With d = B - A and left normal (-d.y, d.x) the form is
/// K*cross(d, X - A) - dot(d, X - A) >= 0: K dominates the dot term off the
/// line, and on the line only the sign of the dot term is left. K is fixed to
/// (|d.x| + |d.y|)(m + n) + 1, which exceeds |dot(d, X - A)| on the grid.
inline SeparatingInequality separating_inequality(const OrientedSegment& seg, GridDim dim) {
  require_segment_in_grid(seg, dim, "separating_inequality");
  const Point d = seg.direction();
  const Coord k = (std::abs(d.x) + std::abs(d.y)) * (dim.m + dim.n) + 1;
  SeparatingInequality ineq;
  ineq.w1 = -k * d.y - d.x;
  ineq.w2 = k * d.x - d.y;
  ineq.w0 = ineq.w1 * seg.a().x + ineq.w2 * seg.a().y;
  return ineq;
}

/// Linear separability of the true and false points, decided by hull
/// disjointness. Constants are threshold.
inline bool is_threshold(const GridFunction& f) {
  const auto ones = f.true_points();
  const auto zeros = f.false_points();
  return hulls_disjoint(convex_hull(ones), convex_hull(zeros));
}

/// The closest pair (first contact, second contact) of a common tangent. Both
/// contacts are disjoint intervals of one line, so the pair is unique.
inline std::pair<Point, Point> closest_contact_points(const CommonTangent& t) {
  std::pair<Point, Point> best{t.first.first, t.second.first};
  Coord best_len = squared_length(best.second - best.first);
  int ties = 0;
  for (Point a : {t.first.first, t.first.last}) {
    for (Point b : {t.second.first, t.second.last}) {
      const Coord len = squared_length(b - a);
      if (len < best_len) {
        best = {a, b};
        best_len = len;
        ties = 0;
      } else if (len == best_len && std::pair{a, b} != best) {
        ++ties;
      }
    }
  }
  if (ties != 0) throw internal_error("closest_contact_points: closest pair is not unique");
  return best;
}

/// The unique oriented prime segment defining a non-constant threshold f.
///
/// The line through it is the left inner common tangent of Conv(M_1) and
/// Conv(M_0); A and B are the closest true and false lattice points on it.
inline OrientedSegment segment_from_function(const GridFunction& f) {
  if (f.is_constant()) throw precondition_error("segment_from_function: constant function");
  const ConvexPolygon ones = convex_hull(f.true_points());
  const ConvexPolygon zeros = convex_hull(f.false_points());
  if (!hulls_disjoint(ones, zeros)) {
    throw precondition_error("segment_from_function: function is not threshold");
  }
  const auto [a, b] = closest_contact_points(inner_common_tangent(ones, zeros, Side::Left));
  if (!is_prime(a, b)) {
    throw internal_error("segment_from_function: nearest tangent points are not adjacent");
  }
  OrientedSegment seg(a, b);
  if (function_from_segment(seg, f.dim()) != f) {
    throw internal_error("segment_from_function: round trip failed");
  }
  return seg;
}

/// Every oriented prime segment with both ends in the grid, sorted by (A, B).
inline std::vector<OrientedSegment> prime_segments(GridDim dim) {
  std::vector<OrientedSegment> segs;
  const auto pts = grid_points(dim);
  for (const Point& a : pts)
    for (const Point& b : pts)
      if (is_prime(a, b)) segs.emplace_back(a, b);
  std::sort(segs.begin(), segs.end());
  return segs;
}

struct ThresholdEntry {
  OrientedSegment segment;
  GridFunction function;
};

/// All non-constant threshold functions with their defining segments, sorted by segment.
inline std::vector<ThresholdEntry> enumerate_threshold(GridDim dim) {
  if (dim.size() > kThresholdEnumerationLimit) {
    throw guard_exceeded("enumerate_threshold: grid " + to_string(dim) + " exceeds " +
                         std::to_string(kThresholdEnumerationLimit) + " points");
  }
  std::vector<ThresholdEntry> out;
  for (const auto& seg : prime_segments(dim)) out.push_back({seg, function_from_segment(seg, dim)});
  return out;
}

/// Points whose flip leaves f threshold.
inline std::vector<Point> essential_points_threshold(const GridFunction& f) {
  if (!is_threshold(f)) throw precondition_error("essential_points_threshold: not threshold");
  std::vector<Point> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Point p = f.dim().point(i);
    if (is_threshold(f.flipped(p))) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tgrid
