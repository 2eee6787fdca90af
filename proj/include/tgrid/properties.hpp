#pragma once

// Exhaustive property sweeps. Each registered property checks one structural
// statement over every case of a small grid and reports all counterexamples.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tgrid/error.hpp"
#include "tgrid/geometry.hpp"
#include "tgrid/grid_function.hpp"
#include "tgrid/oracle.hpp"
#include "tgrid/threshold.hpp"
#include "tgrid/two_threshold.hpp"

namespace tgrid {

struct PropertyReport {
  std::string property_id;
  GridDim domain;
  std::size_t cases_checked = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }

  friend bool operator==(const PropertyReport&, const PropertyReport&) = default;
};

struct PropertySpec {
  std::string id;
  std::string description;
  std::size_t max_points;  ///< hard guard on m*n
  std::function<void(GridDim, PropertyReport&)> run;
};

namespace props {

template <class... Args>
void fail(PropertyReport& r, const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  r.failures.push_back(os.str());
}

inline bool on_line(Point a, Point b, Point p) { return orientation_determinant(a, b, p) == 0; }

/// A segment along line(a, b) long enough to cover every grid point on that line.
inline std::pair<Point, Point> line_span(Point a, Point b, GridDim dim) {
  const Point d = b - a;
  const Coord k = dim.m + dim.n;
  return {Point{a.x - k * d.x, a.y - k * d.y}, Point{a.x + k * d.x, a.y + k * d.y}};
}

inline std::vector<ConvexPolygon> small_subset_hulls(GridDim dim, std::size_t max_size) {
  const auto pts = grid_points(dim);
  std::vector<ConvexPolygon> out;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(convex_hull({pts[i]}));
    if (max_size < 2) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      out.push_back(convex_hull({pts[i], pts[j]}));
      if (max_size < 3) continue;
      for (std::size_t k = j + 1; k < n; ++k) out.push_back(convex_hull({pts[i], pts[j], pts[k]}));
    }
  }
  return out;
}

/// Hulls of M_1 and M_0 of every non-constant threshold function.
inline std::vector<std::pair<ConvexPolygon, ConvexPolygon>> threshold_hull_pairs(GridDim dim) {
  std::vector<std::pair<ConvexPolygon, ConvexPolygon>> out;
  for (const auto& e : enumerate_threshold(dim)) {
    out.emplace_back(convex_hull(e.function.true_points()), convex_hull(e.function.false_points()));
  }
  return out;
}

/// Unordered proper pairs, each listed once with the smaller segment first.
inline std::vector<ProperPair> all_proper_pairs(GridDim dim) {
  const auto segs = prime_segments(dim);
  std::vector<ProperPair> out;
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j)
      if (proper_conditions_hold(segs[i], segs[j])) out.emplace_back(segs[i], segs[j]);
  return out;
}

/// Each proper pair in both orders.
inline std::vector<std::pair<OrientedSegment, OrientedSegment>> ordered_proper_pairs(GridDim dim) {
  std::vector<std::pair<OrientedSegment, OrientedSegment>> out;
  for (const auto& p : all_proper_pairs(dim)) {
    out.emplace_back(p.first(), p.second());
    out.emplace_back(p.second(), p.first());
  }
  return out;
}

inline std::vector<Point> sorted(std::vector<Point> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline bool contains(const std::vector<Point>& sorted_pts, Point p) {
  return std::binary_search(sorted_pts.begin(), sorted_pts.end(), p);
}

// --- exact geometry -------------------------------------------------------

inline void orientation_antisymmetry(GridDim dim, PropertyReport& r) {
  const auto pts = grid_points(dim);
  for (Point a : pts)
    for (Point b : pts)
      for (Point c : pts) {
        const Orientation o = orientation(a, b, c);
        if (o == Orientation::Collinear) continue;
        ++r.cases_checked;
        const Orientation swapped = orientation(b, a, c);
        const Orientation expected = o == Orientation::Clockwise ? Orientation::Counterclockwise
                                                                 : Orientation::Clockwise;
        if (swapped != expected) fail(r, "orientation", a, b, c, "=", o, " but swapped gives ", swapped);
      }
}

inline void claim_same_orient(GridDim dim, PropertyReport& r) {
  const auto pts = grid_points(dim);
  for (Point a : pts)
    for (Point b : pts) {
      if (a == b) continue;
      const auto [p, q] = line_span(a, b, dim);
      for (Point c : pts) {
        if (on_line(a, b, c)) continue;
        for (Point d : pts) {
          if (on_line(a, b, d)) continue;
          ++r.cases_checked;
          const bool same = orientation(a, b, c) == orientation(a, b, d);
          const bool meets = intersects(segment_intersection(c, d, p, q));
          if (same == meets) {
            fail(r, "line", a, b, " points ", c, d, ": same orientation=", same, " segment meets line=", meets);
          }
        }
      }
    }
}

inline void claim_collinear_segments_and_point(GridDim dim, PropertyReport& r) {
  const auto pts = grid_points(dim);
  const auto segs = prime_segments(dim);
  for (const auto& s : segs)
    for (const auto& t : segs) {
      if (t.direction() != s.direction() || !on_line(s.a(), s.b(), t.a())) continue;
      for (Point e : pts) {
        if (on_line(s.a(), s.b(), e)) continue;
        ++r.cases_checked;
        if (orientation(s.a(), s.b(), e) != orientation(t.a(), t.b(), e)) {
          fail(r, "segments ", s, " and ", t, " disagree at ", e);
        }
      }
    }
}

inline void claim_clockwise_triangles(GridDim dim, PropertyReport& r) {
  const auto pts = grid_points(dim);
  for (Point a : pts)
    for (Point b : pts)
      for (Point c : pts)
        for (Point d : pts) {
          const Orientation o = orientation(a, b, d);
          if (o == Orientation::Collinear || orientation(b, c, d) != o || orientation(c, a, d) != o) {
            continue;
          }
          ++r.cases_checked;
          if (orientation(a, b, c) != o) fail(r, "abc=", a, b, c, " d=", d, " expected ", o);
        }
}

inline bool is_cyclic_rotation(const std::vector<Point>& cycle, const std::vector<Point>& target) {
  if (cycle.size() != target.size()) return false;
  for (std::size_t shift = 0; shift < cycle.size(); ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < cycle.size() && ok; ++i)
      ok = cycle[(i + shift) % cycle.size()] == target[i];
    if (ok) return true;
  }
  return false;
}

inline void claim_convex_rectangle(GridDim dim, PropertyReport& r) {
  const auto pts = grid_points(dim);
  for (Point a : pts)
    for (Point b : pts)
      for (Point c : pts)
        for (Point d : pts) {
          const Orientation o = orientation(a, b, c);
          if (o == Orientation::Collinear || orientation(b, c, d) != o ||
              orientation(c, d, a) != o || orientation(d, a, b) != o) {
            continue;
          }
          ++r.cases_checked;
          const ConvexPolygon h = convex_hull({a, b, c, d});
          const std::vector<Point> expected = o == Orientation::Counterclockwise
                                                  ? std::vector<Point>{a, b, c, d}
                                                  : std::vector<Point>{a, d, c, b};
          if (!is_cyclic_rotation(h.vertices(), expected)) {
            fail(r, "abcd=", a, b, c, d, " (", o, ") hull ", h);
          }
        }
}

inline void claim_tangent_on_line(GridDim dim, PropertyReport& r) {
  const auto pts = grid_points(dim);
  auto hulls = small_subset_hulls(dim, 3);
  for (auto& [ones, zeros] : threshold_hull_pairs(dim)) {
    hulls.push_back(ones);
    hulls.push_back(zeros);
  }
  for (const auto& h : hulls) {
    for (Point x : pts) {
      if (point_in_hull(x, h)) continue;
      for (Side side : {Side::Left, Side::Right}) {
        const Contact c = tangent_from_point(x, h, side);
        const Point anchor = c.first;
        // A hull lying on the line has no point off it; the side is vacuous there.
        const bool degenerate = std::all_of(h.vertices().begin(), h.vertices().end(),
                                            [&](Point v) { return on_line(x, anchor, v); });
        if (degenerate) continue;
        for (Point y : pts) {
          if (y == x || !on_line(x, anchor, y)) continue;
          ++r.cases_checked;
          const bool misses = hulls_disjoint(convex_hull({x, y}), h);
          bool same = false;
          if (!point_in_hull(y, h)) {
            const Contact cy = tangent_from_point(y, h, side);
            same = on_line(x, anchor, cy.first) && on_line(x, anchor, cy.last);
          }
          if (same != misses) {
            fail(r, to_string(side), " tangent from ", x, " to ", h, " at ", c, ": y=", y,
                 " same line=", same, " xy misses hull=", misses);
          }
        }
      }
    }
  }
}

inline void hull_idempotence(GridDim dim, PropertyReport& r) {
  const auto pts = grid_points(dim);
  const std::size_t n = pts.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Point> subset;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1u) subset.push_back(pts[i]);
    ++r.cases_checked;
    const ConvexPolygon h = convex_hull(subset);
    if (convex_hull(h.vertices()) != h) fail(r, "hull of hull differs for mask ", mask);
    for (Point p : subset)
      if (!point_in_hull(p, h)) fail(r, "input point ", p, " outside its hull ", h);
    const auto& v = h.vertices();
    if (!v.empty() && *std::min_element(v.begin(), v.end()) != v.front()) {
      fail(r, "hull ", h, " does not start at its smallest vertex");
    }
    if (v.size() >= 3) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (orientation(v[i], v[(i + 1) % v.size()], v[(i + 2) % v.size()]) !=
            Orientation::Counterclockwise) {
          fail(r, "hull ", h, " has a non-convex or collinear corner");
        }
      }
    }
  }
}

inline void tangent_separation(GridDim dim, PropertyReport& r) {
  auto pairs = threshold_hull_pairs(dim);
  const auto small = small_subset_hulls(dim, 2);
  for (const auto& h1 : small)
    for (const auto& h2 : small)
      if (hulls_disjoint(h1, h2)) pairs.emplace_back(h1, h2);

  for (const auto& [h1, h2] : pairs) {
    for (Side side : {Side::Left, Side::Right}) {
      ++r.cases_checked;
      const CommonTangent t = inner_common_tangent(h1, h2, side);
      const Point u = t.first.first;
      const Point w = t.second.first;
      const Coord sign = side == Side::Left ? 1 : -1;
      auto report = [&](const char* what) {
        fail(r, to_string(side), " tangent ", u, w, " of ", h1, " and ", h2, ": ", what);
      };
      for (Point v : h1.vertices()) {
        const Coord s = sign * orientation_determinant(u, w, v);
        if (s < 0) report("first hull on the wrong side");
        if (s == 0 && !t.first.contains(v)) report("first contact incomplete");
      }
      for (Point v : h2.vertices()) {
        const Coord s = sign * orientation_determinant(u, w, v);
        if (s > 0) report("second hull on the wrong side");
        if (s == 0 && !t.second.contains(v)) report("second contact incomplete");
      }
    }
  }
}

// --- threshold functions --------------------------------------------------

inline void bijection(GridDim dim, PropertyReport& r) {
  const auto entries = enumerate_threshold(dim);
  const auto naive = oracle::naive_threshold_table(dim);
  r.cases_checked += entries.size();
  if (entries.size() != naive.size()) {
    fail(r, "enumerate_threshold gives ", entries.size(), " entries, adjacency scan gives ", naive.size());
  }
  std::vector<GridFunction> fns;
  for (const auto& e : entries) {
    if (e.function.is_constant()) fail(r, "segment ", e.segment, " defines a constant");
    if (!is_threshold(e.function)) fail(r, "segment ", e.segment, " defines a non-threshold function");
    fns.push_back(e.function);
  }
  std::sort(fns.begin(), fns.end());
  if (std::adjacent_find(fns.begin(), fns.end()) != fns.end()) fail(r, "two segments define the same function");

  const std::size_t n = dim.size();
  std::size_t threshold_count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const GridFunction f = GridFunction::from_mask(dim, mask);
    ++r.cases_checked;
    if (f.is_constant() || !is_threshold(f)) continue;
    ++threshold_count;
    if (!std::binary_search(fns.begin(), fns.end(), f)) fail(r, "threshold mask ", mask, " has no segment");
  }
  if (threshold_count != fns.size()) {
    fail(r, threshold_count, " non-constant threshold functions but ", fns.size(), " segments");
  }
}

inline void round_trip(GridDim dim, PropertyReport& r) {
  for (const auto& seg : prime_segments(dim)) {
    ++r.cases_checked;
    try {
      const OrientedSegment back = segment_from_function(function_from_segment(seg, dim));
      if (back != seg) fail(r, seg, " comes back as ", back);
    } catch (const std::exception& e) {
      fail(r, seg, ": ", e.what());
    }
  }
}

inline void inequality_consistency(GridDim dim, PropertyReport& r) {
  const auto pts = grid_points(dim);
  for (const auto& seg : prime_segments(dim)) {
    ++r.cases_checked;
    const GridFunction f = function_from_segment(seg, dim);
    const SeparatingInequality ineq = separating_inequality(seg, dim);
    for (Point p : pts)
      if (ineq.holds(p) != f(p)) fail(r, seg, " inequality disagrees at ", p);
  }
}

inline void claim_points_on_line(GridDim dim, PropertyReport& r) {
  const auto pts = grid_points(dim);
  for (const auto& seg : prime_segments(dim)) {
    const GridFunction f = function_from_segment(seg, dim);
    const Point a = seg.a(), b = seg.b();
    for (Point c : pts) {
      if (!on_line(a, b, c)) continue;
      ++r.cases_checked;
      const bool ok = (f(c) && on_segment(a, b, c)) || (!f(c) && on_segment(b, a, c));
      if (!ok) fail(r, seg, " at ", c, " f=", f(c));
    }
  }
}

inline void thm3_left_tangent(GridDim dim, PropertyReport& r) {
  for (const auto& seg : prime_segments(dim)) {
    ++r.cases_checked;
    const GridFunction f = function_from_segment(seg, dim);
    const CommonTangent t = inner_common_tangent(convex_hull(f.true_points()),
                                                 convex_hull(f.false_points()), Side::Left);
    if (!t.first.contains(seg.a()) || !t.second.contains(seg.b()) ||
        !on_line(seg.a(), seg.b(), t.first.first) || !on_line(seg.a(), seg.b(), t.second.last)) {
      fail(r, seg, " left inner common tangent touches at ", t.first, " and ", t.second);
    }
  }
}

inline void thm3_essential(GridDim dim, PropertyReport& r) {
  for (const auto& seg : prime_segments(dim)) {
    ++r.cases_checked;
    const auto ess = essential_points_threshold(function_from_segment(seg, dim));
    if (!contains(ess, seg.a()) || !contains(ess, seg.b())) fail(r, seg, ": endpoint not essential");
  }
}

// --- proper pairs ---------------------------------------------------------

inline void thm4_iff(GridDim dim, PropertyReport& r) {
  const auto segs = prime_segments(dim);
  for (const auto& s1 : segs)
    for (const auto& s2 : segs) {
      ++r.cases_checked;
      const bool proper = is_proper_pair(s1, s2, dim);
      const PairCase c = classify_pair(s1, s2, dim);
      if (proper != (c != PairCase::NotProper)) fail(r, s1, " ", s2, ": proper=", proper, " case=", c);
    }
}

inline void claim_zeros_ones_intersection(GridDim dim, PropertyReport& r) {
  for (const auto& [ab, cd] : ordered_proper_pairs(dim)) {
    ++r.cases_checked;
    if (!intersects(segment_intersection(ab.a(), cd.a(), ab.b(), cd.b()))) {
      fail(r, ab, " ", cd, ": AC and BD are disjoint");
    }
    if (is_threshold(function_from_pair(ab, cd, dim))) fail(r, ab, " ", cd, ": defines a threshold function");
  }
}

inline void cor_all_ones_on_line(GridDim dim, PropertyReport& r) {
  const auto pts = grid_points(dim);
  for (const auto& [ab, cd] : ordered_proper_pairs(dim)) {
    if (classify_pair(ab, cd, dim) != PairCase::CollinearNested) continue;
    ++r.cases_checked;
    std::vector<Point> on_ac;
    for (Point p : pts)
      if (on_segment(p, ab.a(), cd.a())) on_ac.push_back(p);
    if (sorted(function_from_pair(ab, cd, dim).true_points()) != sorted(on_ac)) {
      fail(r, ab, " ", cd, ": true points differ from the grid points of AC");
    }
  }
}

inline void cor_superb_intersect(GridDim dim, PropertyReport& r) {
  for (const auto& [ab, cd] : ordered_proper_pairs(dim)) {
    ++r.cases_checked;
    const bool meet = intersects(segment_intersection(ab.a(), ab.b(), cd.a(), cd.b()));
    const auto ones = function_from_pair(ab, cd, dim).true_points();
    const bool singleton_a = ones.size() == 1 && ones.front() == ab.a();
    if (meet != singleton_a) fail(r, ab, " ", cd, ": AB meets CD=", meet, " M_1={A}=", singleton_a);
  }
}

inline void claim_segments_zeros_ones(GridDim dim, PropertyReport& r) {
  const auto segs = prime_segments(dim);
  for (const auto& ab : segs)
    for (const auto& cd : segs) {
      if (ab == cd) continue;
      const Point a = ab.a(), b = ab.b(), c = cd.a(), d = cd.b();
      if (!segment_value(ab, c) || segment_value(ab, d) || !segment_value(cd, a)) continue;
      ++r.cases_checked;
      if (!segment_value(cd, b)) fail(r, ab, " ", cd, ": f_CD(B) = 0");
      if (orientation(b, c, d) == Orientation::Collinear) fail(r, ab, " ", cd, ": B, C, D collinear");
      if (!point_in_hull(a, convex_hull({b, c, d}))) fail(r, ab, " ", cd, ": A outside triangle BCD");

      const auto [p, q] = line_span(a, b, dim);
      const auto meet = segment_intersection(c, d, p, q);
      const auto* x = std::get_if<PointIntersection>(&meet);
      if (x == nullptr) {
        fail(r, ab, " ", cd, ": line AB does not meet CD in a single point");
        continue;
      }
      const Coord l = std::lcm(x->at.x_den(), x->at.y_den());
      const Point xs{x->at.x_num() * (l / x->at.x_den()), x->at.y_num() * (l / x->at.y_den())};
      if (!on_segment(Point{a.x * l, a.y * l}, xs, Point{b.x * l, b.y * l})) {
        fail(r, ab, " ", cd, ": A not on segment XB, X=", x->at);
      }
    }
}

inline void thm4_essential(GridDim dim, PropertyReport& r) {
  const ThresholdCatalog catalog(dim);
  std::map<GridFunction, std::vector<Point>> cache;
  for (const auto& pair : all_proper_pairs(dim)) {
    ++r.cases_checked;
    const GridFunction f = function_from_pair(pair, dim);
    auto it = cache.find(f);
    if (it == cache.end()) it = cache.emplace(f, essential_points_2threshold(f, catalog)).first;
    for (Point p : pair.endpoints())
      if (!contains(it->second, p)) fail(r, pair, ": endpoint ", p, " not essential");
  }
}

inline void thm5_existence(GridDim dim, PropertyReport& r) {
  const ThresholdCatalog catalog(dim);
  for (const auto& f : enumerate_two_threshold(dim)) {
    if (classify_function(f, catalog) != FunctionClass::Proper2Threshold) continue;
    ++r.cases_checked;
    try {
      const auto all = find_all_proper_pairs(f, catalog);
      const ProperPair built = construct_proper_pair(f, catalog);
      if (!std::binary_search(all.begin(), all.end(), built)) {
        fail(r, "constructed ", built, " not among the proper pairs of its function");
      }
      if (function_from_pair(built, dim) != f) fail(r, "constructed ", built, " defines another function");
    } catch (const std::exception& e) {
      fail(r, "function with true points ", f.count(), ": ", e.what());
    }
  }
}

inline void thm5_uniqueness_boundary(GridDim dim, PropertyReport& r) {
  const ThresholdCatalog catalog(dim);
  for (const auto& f : enumerate_two_threshold(dim)) {
    const auto ones = f.true_points();
    if (std::none_of(ones.begin(), ones.end(), [dim](Point p) { return dim.on_boundary(p); })) continue;
    if (classify_function(f, catalog) != FunctionClass::Proper2Threshold) continue;
    ++r.cases_checked;
    const auto all = find_all_proper_pairs(f, catalog);
    if (all.size() != 1) fail(r, "boundary function has ", all.size(), " proper pairs, first ", all.front());
  }
}

inline void lemma5_boundary_singleton(GridDim dim, PropertyReport& r) {
  const ThresholdCatalog catalog(dim);
  for (Point x : grid_points(dim)) {
    const bool vertical_side = x.x == 0 || x.x == dim.m - 1;
    const bool horizontal_side = x.y == 0 || x.y == dim.n - 1;
    if (vertical_side == horizontal_side) continue;
    ++r.cases_checked;
    const Point step = vertical_side ? Point{0, 1} : Point{1, 0};
    const ProperPair expected(OrientedSegment(x, x - step), OrientedSegment(x, x + step));
    const auto all = find_all_proper_pairs(GridFunction::from_true_points(dim, {x}), catalog);
    if (all.size() != 1 || all.front() != expected) {
      fail(r, "singleton ", x, ": ", all.size(), " pairs, expected only ", expected);
    }
  }
}

inline void singleton_count(GridDim dim, PropertyReport& r) {
  const ThresholdCatalog catalog(dim);
  for (Point a : grid_points(dim)) {
    if (dim.on_boundary(a)) continue;
    ++r.cases_checked;
    const std::size_t counted = count_singleton_proper_pairs(dim, a);
    const std::size_t found = find_all_proper_pairs(GridFunction::from_true_points(dim, {a}), catalog).size();
    if (counted != found) fail(r, "singleton ", a, ": counted ", counted, " found ", found);
  }
}

// --- oracle equivalence ---------------------------------------------------

inline void oracle_segment_equivalence(GridDim dim, PropertyReport& r) {
  const auto segs = prime_segments(dim);
  std::size_t adjacent = 0;
  for (Point a : grid_points(dim))
    for (Point b : grid_points(dim))
      if (oracle::detail::adjacent_in_grid(a, b, dim)) ++adjacent;
  if (adjacent != segs.size()) fail(r, "prime_segments gives ", segs.size(), ", scan gives ", adjacent);
  for (const auto& seg : segs) {
    ++r.cases_checked;
    if (oracle::naive_function_from_segment(seg, dim) != function_from_segment(seg, dim)) {
      fail(r, seg, ": naive and fast truth tables differ");
    }
  }
}

inline void oracle_threshold_equivalence(GridDim dim, PropertyReport& r) {
  const auto table = oracle::naive_threshold_table(dim);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim.size()); ++mask) {
    ++r.cases_checked;
    const GridFunction f = GridFunction::from_mask(dim, mask);
    if (oracle::naive_is_threshold(f, table) != is_threshold(f)) fail(r, "mask ", mask, " disagrees");
  }
}

inline void oracle_two_threshold_equivalence(GridDim dim, PropertyReport& r) {
  const auto table = oracle::naive_threshold_table(dim);
  const ThresholdCatalog catalog(dim);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim.size()); ++mask) {
    ++r.cases_checked;
    const GridFunction f = GridFunction::from_mask(dim, mask);
    const bool naive = oracle::naive_is_two_threshold(f, table);
    const bool fast = classify_function(f, catalog) != FunctionClass::NotTwoThreshold;
    if (naive != fast) fail(r, "mask ", mask, ": naive=", naive, " classify=", fast);
  }
}

}  // namespace props

inline const std::vector<PropertySpec>& property_registry() {
  static const std::vector<PropertySpec> registry = {
      {"orientation_antisymmetry", "swapping the first two points reverses a strict orientation", 49,
       props::orientation_antisymmetry},
      {"claim_same_orient", "ABC and ABD agree iff CD misses line AB", 25, props::claim_same_orient},
      {"claim_collinear_segments_and_point", "co-oriented collinear segments see every off-line point alike", 49,
       props::claim_collinear_segments_and_point},
      {"claim_clockwise_triangles", "ABD, BCD, CAD sharing an orientation force it on ABC", 25,
       props::claim_clockwise_triangles},
      {"claim_convex_rectangle", "four equally oriented triangles make ABCD a convex quadrilateral", 25,
       props::claim_convex_rectangle},
      {"claim_tangent_on_line", "a tangent from x is the tangent from y on it iff xy misses the hull", 16,
       props::claim_tangent_on_line},
      {"hull_idempotence", "hulls are canonical, contain their input and are fixed points", 16,
       props::hull_idempotence},
      {"tangent_separation", "inner common tangents separate the two hulls on the stated sides", 16,
       props::tangent_separation},
      {"bijection", "oriented prime segments biject onto non-constant threshold functions", 16,
       props::bijection},
      {"round_trip", "segment_from_function inverts function_from_segment", 64, props::round_trip},
      {"inequality_consistency", "separating_inequality reproduces the segment function", 64,
       props::inequality_consistency},
      {"claim_points_on_line", "on-line points: f(C)=1 with A in BC, or f(C)=0 with B in AC", 64,
       props::claim_points_on_line},
      {"thm3_left_tangent", "line AB is the left inner common tangent of Conv(M_1), Conv(M_0)", 64,
       props::thm3_left_tangent},
      {"thm3_essential", "A and B are essential for f_AB", 36, props::thm3_essential},
      {"thm4_iff", "classify_pair finds a configuration iff the pair is proper", 36, props::thm4_iff},
      {"claim_zeros_ones_intersection", "proper pairs: AC meets BD and f is not threshold", 36,
       props::claim_zeros_ones_intersection},
      {"cor_all_ones_on_line", "collinear proper pairs: M_1 is the grid part of AC", 36,
       props::cor_all_ones_on_line},
      {"cor_superb_intersect", "proper pairs: AB meets CD iff M_1 = {A}", 36, props::cor_superb_intersect},
      {"claim_segments_zeros_ones", "f_AB(C)=1, f_AB(D)=0, f_CD(A)=1 force f_CD(B)=1, A in BCD, A in XB",
       36, props::claim_segments_zeros_ones},
      {"thm4_essential", "all four endpoints of a proper pair are essential", 16, props::thm4_essential},
      {"thm5_existence", "every proper 2-threshold function has a proper pair; construction finds one", 25,
       props::thm5_existence},
      {"thm5_uniqueness_boundary", "a true point on the boundary makes the proper pair unique", 25,
       props::thm5_uniqueness_boundary},
      {"lemma5_boundary_singleton", "boundary singletons have only the pair along the boundary", 64,
       props::lemma5_boundary_singleton},
      {"singleton_count", "count_singleton_proper_pairs matches exhaustive search", 81,
       props::singleton_count},
      {"oracle_segment_equivalence", "naive and fast segment functions agree", 64,
       props::oracle_segment_equivalence},
      {"oracle_threshold_equivalence", "naive_is_threshold agrees with is_threshold on all functions", 16,
       props::oracle_threshold_equivalence},
      {"oracle_two_threshold_equivalence", "naive_is_two_threshold agrees with classify_function", 12,
       props::oracle_two_threshold_equivalence},
  };
  return registry;
}

inline const PropertySpec& find_property(std::string_view id) {
  for (const auto& p : property_registry())
    if (p.id == id) return p;
  throw precondition_error("unknown property id '" + std::string(id) + "'");
}

/// Runs one registered property over every case of the grid.
inline PropertyReport check_property(std::string_view id, GridDim dim) {
  const PropertySpec& spec = find_property(id);
  if (dim.size() > spec.max_points) {
    throw guard_exceeded("property " + spec.id + " is limited to grids of " +
                         std::to_string(spec.max_points) + " points, got " + to_string(dim));
  }
  PropertyReport report{spec.id, dim, 0, {}};
  spec.run(dim, report);
  return report;
}

}  // namespace tgrid
