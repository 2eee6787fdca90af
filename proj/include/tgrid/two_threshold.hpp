#pragma once

// Conjunctions of two threshold functions and their proper pairs of segments.

#include <algorithm>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "tgrid/error.hpp"
#include "tgrid/geometry.hpp"
#include "tgrid/grid_function.hpp"
#include "tgrid/threshold.hpp"

namespace tgrid {

inline constexpr std::size_t kPairSearchLimit = 1024;
inline constexpr std::size_t kTwoThresholdEnumerationLimit = 25;

enum class FunctionClass { ConstantZero, ConstantOne, Threshold, Proper2Threshold, NotTwoThreshold };

inline const char* to_string(FunctionClass c) {
  switch (c) {
    case FunctionClass::ConstantZero: return "ConstantZero";
    case FunctionClass::ConstantOne: return "ConstantOne";
    case FunctionClass::Threshold: return "Threshold";
    case FunctionClass::Proper2Threshold: return "Proper2Threshold";
    case FunctionClass::NotTwoThreshold: return "NotTwoThreshold";
  }
  return "?";
}

inline std::ostream& operator<<(std::ostream& os, FunctionClass c) { return os << to_string(c); }

/// Which geometric configuration makes a pair proper.
enum class PairCase { CollinearNested, TriangleAInBD, TriangleCInBD, CcwQuadrilateral, NotProper };

inline const char* to_string(PairCase c) {
  switch (c) {
    case PairCase::CollinearNested: return "CollinearNested";
    case PairCase::TriangleAInBD: return "TriangleAInBD";
    case PairCase::TriangleCInBD: return "TriangleCInBD";
    case PairCase::CcwQuadrilateral: return "CcwQuadrilateral";
    case PairCase::NotProper: return "NotProper";
  }
  return "?";
}

inline std::ostream& operator<<(std::ostream& os, PairCase c) { return os << to_string(c); }

/// Each endpoint of one segment is a true point of the other's function.
/// Depends only on the four endpoints, not on the grid.
inline bool proper_conditions_hold(const OrientedSegment& s1, const OrientedSegment& s2) {
  return segment_value(s2, s1.a()) && segment_value(s2, s1.b()) && segment_value(s1, s2.a()) &&
         segment_value(s1, s2.b());
}

/// An unordered proper pair {AB, CD}, stored with the smaller segment first.
class ProperPair {
public:
  ProperPair(const OrientedSegment& s1, const OrientedSegment& s2)
      : first_(std::min(s1, s2)), second_(std::max(s1, s2)) {
    if (!proper_conditions_hold(s1, s2)) {
      std::ostringstream os;
      os << "pair {" << s1 << ", " << s2 << "} is not proper";
      throw precondition_error(os.str());
    }
  }

  const OrientedSegment& first() const { return first_; }
  const OrientedSegment& second() const { return second_; }

  std::vector<Point> endpoints() const {
    return {first_.a(), first_.b(), second_.a(), second_.b()};
  }

  friend auto operator<=>(const ProperPair&, const ProperPair&) = default;

  friend std::ostream& operator<<(std::ostream& os, const ProperPair& p) {
    return os << '{' << p.first_ << ", " << p.second_ << '}';
  }

private:
  OrientedSegment first_;
  OrientedSegment second_;
};

inline void require_pair_in_grid(const OrientedSegment& s1, const OrientedSegment& s2, GridDim dim,
                                 const char* what) {
  require_segment_in_grid(s1, dim, what);
  require_segment_in_grid(s2, dim, what);
}

inline bool is_proper_pair(const OrientedSegment& s1, const OrientedSegment& s2, GridDim dim) {
  require_pair_in_grid(s1, s2, dim, "is_proper_pair");
  return proper_conditions_hold(s1, s2);
}

/// Purely geometric test for properness. With s1 = AB and s2 = CD the pair is
/// proper exactly in one of these configurations:
///   - all four points collinear and A, C inside segment BD;
///   - A inside BD with CDB counterclockwise, or C inside BD with ABD counterclockwise;
///   - ABCD a counterclockwise convex quadrilateral.
/// "Inside BD" excludes the endpoints B and D.
inline PairCase classify_pair(const OrientedSegment& s1, const OrientedSegment& s2, GridDim dim) {
  require_pair_in_grid(s1, s2, dim, "classify_pair");
  const Point a = s1.a(), b = s1.b(), c = s2.a(), d = s2.b();
  constexpr auto ccw = Orientation::Counterclockwise;

  if (orientation(a, b, c) == Orientation::Collinear &&
      orientation(a, b, d) == Orientation::Collinear) {
    return strictly_inside_segment(a, b, d) && strictly_inside_segment(c, b, d)
               ? PairCase::CollinearNested
               : PairCase::NotProper;
  }
  if (strictly_inside_segment(a, b, d) && orientation(c, d, b) == ccw) {
    return PairCase::TriangleAInBD;
  }
  if (strictly_inside_segment(c, b, d) && orientation(a, b, d) == ccw) {
    return PairCase::TriangleCInBD;
  }
  if (orientation(a, b, c) == ccw && orientation(b, c, d) == ccw && orientation(c, d, a) == ccw &&
      orientation(d, a, b) == ccw) {
    return PairCase::CcwQuadrilateral;
  }
  return PairCase::NotProper;
}

inline GridFunction function_from_pair(const OrientedSegment& s1, const OrientedSegment& s2,
                                       GridDim dim) {
  require_pair_in_grid(s1, s2, dim, "function_from_pair");
  return function_from_segment(s1, dim) & function_from_segment(s2, dim);
}

inline GridFunction function_from_pair(const ProperPair& p, GridDim dim) {
  return function_from_pair(p.first(), p.second(), dim);
}

/// All non-constant threshold functions of one grid, computed once and shared
/// across many queries on that grid.
class ThresholdCatalog {
public:
  explicit ThresholdCatalog(GridDim dim) : dim_(dim), entries_(enumerate_threshold(dim)) {}

  GridDim dim() const { return dim_; }
  const std::vector<ThresholdEntry>& entries() const { return entries_; }

  /// Entries whose function is true on every true point of f.
  std::vector<ThresholdEntry> covering(const GridFunction& f) const {
    if (f.dim() != dim_) throw precondition_error("ThresholdCatalog: grid mismatch");
    std::vector<ThresholdEntry> out;
    for (const auto& e : entries_)
      if (e.function.covers(f)) out.push_back(e);
    return out;
  }

private:
  GridDim dim_;
  std::vector<ThresholdEntry> entries_;
};

namespace detail {

/// Covering threshold functions without a catalog. A threshold function's true
/// set is the grid part of a half-plane, so it covers M_1(f) as soon as it
/// covers the hull vertices of M_1(f); only survivors get a full truth table.
inline std::vector<ThresholdEntry> covering_threshold_functions(const GridFunction& f,
                                                                const ThresholdCatalog* catalog) {
  if (catalog != nullptr) return catalog->covering(f);
  const ConvexPolygon hull = convex_hull(f.true_points());
  std::vector<ThresholdEntry> out;
  for (const auto& seg : prime_segments(f.dim())) {
    const bool candidate = std::all_of(hull.vertices().begin(), hull.vertices().end(),
                                       [&seg](Point v) { return segment_value(seg, v); });
    if (!candidate) continue;
    GridFunction g = function_from_segment(seg, f.dim());
    if (g.covers(f)) out.push_back({seg, std::move(g)});
  }
  return out;
}

inline bool and_equals(const GridFunction& x, const GridFunction& y, const GridFunction& target) {
  const auto& xw = x.words();
  const auto& yw = y.words();
  const auto& tw = target.words();
  for (std::size_t i = 0; i < tw.size(); ++i)
    if ((xw[i] & yw[i]) != tw[i]) return false;
  return true;
}

inline void require_pair_search_size(const GridFunction& f, const char* what) {
  if (f.size() > kPairSearchLimit) {
    throw guard_exceeded(std::string(what) + ": grid " + to_string(f.dim()) + " exceeds " +
                         std::to_string(kPairSearchLimit) + " points");
  }
}

}  // namespace detail

/// Constants first, then threshold, then an exhaustive search for two covering
/// threshold functions whose conjunction is f. One of the two must be false
/// on the first false point of f, which halves the search.
inline FunctionClass classify_function(const GridFunction& f,
                                       const ThresholdCatalog* catalog = nullptr) {
  if (f.is_constant_zero()) return FunctionClass::ConstantZero;
  if (f.is_constant_one()) return FunctionClass::ConstantOne;
  if (is_threshold(f)) return FunctionClass::Threshold;
  detail::require_pair_search_size(f, "classify_function");

  const auto cover = detail::covering_threshold_functions(f, catalog);
  const Point z0 = f.false_points().front();
  for (const auto& t1 : cover) {
    if (t1.function(z0)) continue;
    for (const auto& t2 : cover) {
      if (detail::and_equals(t1.function, t2.function, f)) return FunctionClass::Proper2Threshold;
    }
  }
  return FunctionClass::NotTwoThreshold;
}

inline FunctionClass classify_function(const GridFunction& f, const ThresholdCatalog& catalog) {
  return classify_function(f, &catalog);
}

inline void require_proper_two_threshold(const GridFunction& f, const ThresholdCatalog* catalog,
                                         const char* what) {
  detail::require_pair_search_size(f, what);
  const FunctionClass c = classify_function(f, catalog);
  if (c != FunctionClass::Proper2Threshold) {
    throw precondition_error(std::string(what) + ": function is " + to_string(c) +
                             ", not Proper2Threshold");
  }
}

/// Every proper pair whose conjunction is f, sorted.
inline std::vector<ProperPair> find_all_proper_pairs(const GridFunction& f,
                                                     const ThresholdCatalog* catalog = nullptr) {
  require_proper_two_threshold(f, catalog, "find_all_proper_pairs");
  const auto cover = detail::covering_threshold_functions(f, catalog);
  std::vector<ProperPair> out;
  for (std::size_t i = 0; i < cover.size(); ++i) {
    for (std::size_t j = i + 1; j < cover.size(); ++j) {
      if (!detail::and_equals(cover[i].function, cover[j].function, f)) continue;
      if (!proper_conditions_hold(cover[i].segment, cover[j].segment)) continue;
      out.emplace_back(cover[i].segment, cover[j].segment);
    }
  }
  std::sort(out.begin(), out.end());
  if (out.empty()) throw internal_error("find_all_proper_pairs: no proper pair found");
  return out;
}

inline std::vector<ProperPair> find_all_proper_pairs(const GridFunction& f,
                                                     const ThresholdCatalog& catalog) {
  return find_all_proper_pairs(f, &catalog);
}

/// Intermediate objects of the constructive existence argument, exposed for
/// inspection and testing.
struct ProperPairConstruction {
  Point x;                          ///< false point of f
  Point y;                          ///< false point of f, segment xy meets Conv(M_1(f))
  std::size_t family_size = 0;      ///< ordered defining pairs with x, y split between them
  std::vector<Point> mx;            ///< points false for the first and true for the second in every such pair
  std::vector<Point> my;            ///< the mirror set for y
  ProperPair pair;
};

/// Builds a proper pair for a proper 2-threshold f following the existence
/// argument:
///   1. take the lexicographically smallest false points (x, y) whose segment
///      meets Conv(M_1(f));
///   2. collect every ordered pair (t1, t2) of threshold functions with
///      t1 & t2 = f, t1(x) = 0, t2(x) = 1, t1(y) = 1, t2(y) = 0;
///   3. M_x is the intersection over that family of M_0(t1) & M_1(t2), M_y of
///      M_1(t1) & M_0(t2);
///   4. A*B* are the closest points of Conv(M_1(f)) and Conv(M_x) on their
///      left inner common tangent, C*D* likewise for M_y.
/// The result is checked to be proper and to define f.
inline ProperPairConstruction construct_proper_pair_traced(const GridFunction& f,
                                                           const ThresholdCatalog* catalog = nullptr) {
  require_proper_two_threshold(f, catalog, "construct_proper_pair");
  const GridDim dim = f.dim();
  const auto ones = f.true_points();
  const auto zeros = f.false_points();
  const ConvexPolygon ones_hull = convex_hull(ones);

  std::vector<Point> sorted_zeros = zeros;
  std::sort(sorted_zeros.begin(), sorted_zeros.end());
  std::optional<std::pair<Point, Point>> xy;
  for (std::size_t i = 0; i < sorted_zeros.size() && !xy; ++i) {
    for (std::size_t j = 0; j < sorted_zeros.size(); ++j) {
      if (i == j) continue;
      if (!hulls_disjoint(convex_hull({sorted_zeros[i], sorted_zeros[j]}), ones_hull)) {
        xy = {sorted_zeros[i], sorted_zeros[j]};
        break;
      }
    }
  }
  if (!xy) throw internal_error("construct_proper_pair: no false segment meets Conv(M_1(f))");
  const auto [x, y] = *xy;

  const auto cover = detail::covering_threshold_functions(f, catalog);
  GridFunction mx(dim, true);
  GridFunction my(dim, true);
  std::size_t family = 0;
  for (const auto& t1 : cover) {
    if (t1.function(x) || !t1.function(y)) continue;
    for (const auto& t2 : cover) {
      if (!t2.function(x) || t2.function(y)) continue;
      if (!detail::and_equals(t1.function, t2.function, f)) continue;
      ++family;
      mx &= ~t1.function & t2.function;
      my &= t1.function & ~t2.function;
    }
  }
  if (family == 0 || mx.is_constant_zero() || my.is_constant_zero()) {
    throw internal_error("construct_proper_pair: empty defining family or empty M_x / M_y");
  }

  auto tangent_segment = [&](const GridFunction& region) {
    const ConvexPolygon region_hull = convex_hull(region.true_points());
    const auto [a, b] =
        closest_contact_points(inner_common_tangent(ones_hull, region_hull, Side::Left));
    if (!is_prime(a, b)) throw internal_error("construct_proper_pair: tangent segment not prime");
    return OrientedSegment(a, b);
  };
  const OrientedSegment ab = tangent_segment(mx);
  const OrientedSegment cd = tangent_segment(my);

  if (!proper_conditions_hold(ab, cd)) {
    std::ostringstream os;
    os << "construct_proper_pair: constructed pair {" << ab << ", " << cd << "} is not proper";
    throw internal_error(os.str());
  }
  ProperPair pair(ab, cd);
  if (function_from_pair(pair, dim) != f) {
    throw internal_error("construct_proper_pair: constructed pair does not define f");
  }
  return {x, y, family, mx.true_points(), my.true_points(), pair};
}

inline ProperPair construct_proper_pair(const GridFunction& f,
                                        const ThresholdCatalog* catalog = nullptr) {
  return construct_proper_pair_traced(f, catalog).pair;
}

inline ProperPair construct_proper_pair(const GridFunction& f, const ThresholdCatalog& catalog) {
  return construct_proper_pair(f, &catalog);
}

/// Points whose flip keeps f 2-threshold (constants and threshold included).
inline std::vector<Point> essential_points_2threshold(const GridFunction& f,
                                                      const ThresholdCatalog* catalog = nullptr) {
  detail::require_pair_search_size(f, "essential_points_2threshold");
  if (classify_function(f, catalog) == FunctionClass::NotTwoThreshold) {
    throw precondition_error("essential_points_2threshold: function is not 2-threshold");
  }
  std::vector<Point> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Point p = f.dim().point(i);
    if (classify_function(f.flipped(p), catalog) != FunctionClass::NotTwoThreshold) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Point> essential_points_2threshold(const GridFunction& f,
                                                      const ThresholdCatalog& catalog) {
  return essential_points_2threshold(f, &catalog);
}

/// Number of proper pairs defining the function true only at an interior
/// point a. Such pairs are {aB, aD} with B, D mirror images through a and
/// B - a primitive; the grid bounds |B - a| coordinatewise by the distance
/// from a to the nearer side.
inline std::size_t count_singleton_proper_pairs(GridDim dim, Point a) {
  require_in_grid(dim, a, "count_singleton_proper_pairs");
  if (dim.on_boundary(a)) {
    throw precondition_error("count_singleton_proper_pairs: " + to_string(a) +
                             " lies on the grid boundary");
  }
  const Coord rx = std::min(a.x, dim.m - 1 - a.x);
  const Coord ry = std::min(a.y, dim.n - 1 - a.y);
  std::size_t count = 1;  // the vertical pair
  for (Coord p = 1; p <= rx; ++p)
    for (Coord q = -ry; q <= ry; ++q)
      if (std::gcd(p, q < 0 ? -q : q) == 1) ++count;
  return count;
}

/// Every 2-threshold function on the grid, constants and threshold included, sorted.
inline std::vector<GridFunction> enumerate_two_threshold(GridDim dim) {
  if (dim.size() > kTwoThresholdEnumerationLimit) {
    throw guard_exceeded("enumerate_two_threshold: grid " + to_string(dim) + " exceeds " +
                         std::to_string(kTwoThresholdEnumerationLimit) + " points");
  }
  const auto entries = enumerate_threshold(dim);
  std::vector<GridFunction> out{GridFunction(dim, false), GridFunction(dim, true)};
  for (std::size_t i = 0; i < entries.size(); ++i) {
    out.push_back(entries[i].function);
    for (std::size_t j = i + 1; j < entries.size(); ++j)
      out.push_back(entries[i].function & entries[j].function);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace tgrid
