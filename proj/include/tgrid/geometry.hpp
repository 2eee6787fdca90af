#pragma once

// Exact integer predicates and constructions on the plane lattice.
//
// Every routine here works on 64-bit integer coordinates and never touches
// floating point. Determinants are degree two in the coordinates, so grids up
// to about 10^6 points per side are safe; intersection points are carried as
// reduced fractions computed through 128-bit intermediates.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tgrid/error.hpp"

namespace tgrid {

using Coord = std::int64_t;

struct Point {
  Coord x = 0;
  Coord y = 0;

  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
constexpr Point operator-(Point a) { return {-a.x, -a.y}; }

constexpr Coord cross(Point u, Point v) { return u.x * v.y - u.y * v.x; }
constexpr Coord dot(Point u, Point v) { return u.x * v.x + u.y * v.y; }
constexpr Coord squared_length(Point v) { return dot(v, v); }

inline std::string to_string(Point p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

inline std::ostream& operator<<(std::ostream& os, Point p) { return os << to_string(p); }

/// A point with rational coordinates, each stored as a reduced fraction with a
/// positive denominator.
class RationalPoint {
public:
  RationalPoint() = default;
  explicit RationalPoint(Point p) : x_num_(p.x), y_num_(p.y) {}

  /// Builds x = xn/xd, y = yn/yd and reduces both fractions.
  static RationalPoint make(__int128 xn, __int128 xd, __int128 yn, __int128 yd) {
    if (xd == 0 || yd == 0) throw precondition_error("RationalPoint: zero denominator");
    RationalPoint r;
    reduce(xn, xd);
    reduce(yn, yd);
    r.x_num_ = static_cast<Coord>(xn);
    r.x_den_ = static_cast<Coord>(xd);
    r.y_num_ = static_cast<Coord>(yn);
    r.y_den_ = static_cast<Coord>(yd);
    return r;
  }

  Coord x_num() const { return x_num_; }
  Coord x_den() const { return x_den_; }
  Coord y_num() const { return y_num_; }
  Coord y_den() const { return y_den_; }

  bool is_integral() const { return x_den_ == 1 && y_den_ == 1; }

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;

  friend std::ostream& operator<<(std::ostream& os, const RationalPoint& p) {
    auto frac = [&os](Coord n, Coord d) {
      os << n;
      if (d != 1) os << '/' << d;
    };
    os << '(';
    frac(p.x_num_, p.x_den_);
    os << ',';
    frac(p.y_num_, p.y_den_);
    return os << ')';
  }

private:
  static __int128 abs128(__int128 v) { return v < 0 ? -v : v; }

  static void reduce(__int128& num, __int128& den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 a = abs128(num);
    __int128 b = den;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
  }

  Coord x_num_ = 0;
  Coord x_den_ = 1;
  Coord y_num_ = 0;
  Coord y_den_ = 1;
};

// ---------------------------------------------------------------------------
// Orientation
// ---------------------------------------------------------------------------

enum class Orientation { Clockwise, Counterclockwise, Collinear };

inline const char* to_string(Orientation o) {
  switch (o) {
    case Orientation::Clockwise: return "Clockwise";
    case Orientation::Counterclockwise: return "Counterclockwise";
    case Orientation::Collinear: return "Collinear";
  }
  return "?";
}

inline std::ostream& operator<<(std::ostream& os, Orientation o) { return os << to_string(o); }

/// The 3x3 determinant |a 1; b 1; c 1|, i.e. twice the signed area of abc.
constexpr Coord orientation_determinant(Point a, Point b, Point c) { return cross(b - a, c - a); }

constexpr Orientation orientation(Point a, Point b, Point c) {
  const Coord d = orientation_determinant(a, b, c);
  if (d > 0) return Orientation::Counterclockwise;
  if (d < 0) return Orientation::Clockwise;
  return Orientation::Collinear;
}

/// True iff a != b and no other lattice point lies on the closed segment ab.
inline bool is_prime(Point a, Point b) {
  if (a == b) return false;
  const Coord dx = b.x - a.x;
  const Coord dy = b.y - a.y;
  return std::gcd(dx < 0 ? -dx : dx, dy < 0 ? -dy : dy) == 1;
}

/// p lies on the closed segment ab (a == b allowed).
constexpr bool on_segment(Point p, Point a, Point b) {
  if (orientation_determinant(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

/// p lies on the closed segment ab and differs from both endpoints.
constexpr bool strictly_inside_segment(Point p, Point a, Point b) {
  return p != a && p != b && on_segment(p, a, b);
}

/// An ordered pair of adjacent lattice points. Construction rejects a == b and
/// any pair with a lattice point strictly between the ends.
class OrientedSegment {
public:
  OrientedSegment(Point a, Point b) : a_(a), b_(b) {
    if (!is_prime(a, b)) {
      throw precondition_error("segment " + to_string(a) + "->" + to_string(b) + " is not prime");
    }
  }

  Point a() const { return a_; }
  Point b() const { return b_; }
  Point direction() const { return b_ - a_; }
  OrientedSegment reversed() const { return {b_, a_}; }

  friend auto operator<=>(const OrientedSegment&, const OrientedSegment&) = default;

  friend std::ostream& operator<<(std::ostream& os, const OrientedSegment& s) {
    return os << s.a_ << "->" << s.b_;
  }

private:
  Point a_;
  Point b_;
};

// ---------------------------------------------------------------------------
// Convex polygons
// ---------------------------------------------------------------------------

/// Convex hull of a finite lattice set. Vertices run counterclockwise from the
/// lexicographically smallest one with no collinear vertices kept; 0, 1 and 2
/// vertex forms stand for the empty set, a point and a segment.
class ConvexPolygon {
public:
  ConvexPolygon() = default;

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }

  friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;

  friend std::ostream& operator<<(std::ostream& os, const ConvexPolygon& h) {
    os << '[';
    for (std::size_t i = 0; i < h.vertices_.size(); ++i) os << (i ? " " : "") << h.vertices_[i];
    return os << ']';
  }

  friend ConvexPolygon convex_hull(std::span<const Point> points);

private:
  explicit ConvexPolygon(std::vector<Point> v) : vertices_(std::move(v)) {}

  std::vector<Point> vertices_;
};

/// Andrew's monotone chain with strict turns, so collinear points drop out.
inline ConvexPolygon convex_hull(std::span<const Point> points) {
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 1) return ConvexPolygon(std::move(pts));

  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && orientation_determinant(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (k >= lower && orientation_determinant(hull[k - 2], hull[k - 1], *it) <= 0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);  // last point repeats the first
  return ConvexPolygon(std::move(hull));
}

inline ConvexPolygon convex_hull(std::initializer_list<Point> points) {
  return convex_hull(std::span<const Point>(points.begin(), points.size()));
}

/// Closed-region membership, boundary inclusive.
inline bool point_in_hull(Point p, const ConvexPolygon& h) {
  const auto& v = h.vertices();
  switch (v.size()) {
    case 0: return false;
    case 1: return p == v[0];
    case 2: return on_segment(p, v[0], v[1]);
    default:
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (orientation_determinant(v[i], v[(i + 1) % v.size()], p) < 0) return false;
      }
      return true;
  }
}

namespace detail {

inline bool separated_along(Point axis, const std::vector<Point>& p, const std::vector<Point>& q) {
  auto [p_lo, p_hi] = std::minmax_element(p.begin(), p.end(), [axis](Point a, Point b) {
    return dot(axis, a) < dot(axis, b);
  });
  auto [q_lo, q_hi] = std::minmax_element(q.begin(), q.end(), [axis](Point a, Point b) {
    return dot(axis, a) < dot(axis, b);
  });
  return dot(axis, *p_hi) < dot(axis, *q_lo) || dot(axis, *q_hi) < dot(axis, *p_lo);
}

inline void push_edge_normals(const std::vector<Point>& v, std::vector<Point>& axes) {
  if (v.size() < 2) return;
  const std::size_t edges = v.size() == 2 ? 1 : v.size();
  for (std::size_t i = 0; i < edges; ++i) {
    const Point d = v[(i + 1) % v.size()] - v[i];
    axes.push_back({-d.y, d.x});
  }
}

}  // namespace detail

/// True iff the closed regions share no point. Separating-axis test over the
/// edge normals of both hulls and the differences of all vertex pairs; the
/// closest pair of two disjoint convex sets is realised along one of these.
inline bool hulls_disjoint(const ConvexPolygon& h1, const ConvexPolygon& h2) {
  if (h1.empty() || h2.empty()) return true;
  const auto& p = h1.vertices();
  const auto& q = h2.vertices();
  std::vector<Point> axes;
  detail::push_edge_normals(p, axes);
  detail::push_edge_normals(q, axes);
  for (const Point& u : p)
    for (const Point& w : q) axes.push_back(u - w);
  for (const Point& axis : axes) {
    if (axis == Point{}) continue;
    if (detail::separated_along(axis, p, q)) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Segment intersection
// ---------------------------------------------------------------------------

struct NoIntersection {
  friend bool operator==(const NoIntersection&, const NoIntersection&) = default;
};

struct PointIntersection {
  RationalPoint at;
  friend bool operator==(const PointIntersection&, const PointIntersection&) = default;
};

/// Collinear overlap of positive length; `from` < `to` lexicographically.
struct OverlapIntersection {
  Point from;
  Point to;
  friend bool operator==(const OverlapIntersection&, const OverlapIntersection&) = default;
};

using SegmentIntersection = std::variant<NoIntersection, PointIntersection, OverlapIntersection>;

inline bool intersects(const SegmentIntersection& s) {
  return !std::holds_alternative<NoIntersection>(s);
}

/// Meet of the closed segments p1p2 and q1q2. Degenerate segments are points.
inline SegmentIntersection segment_intersection(Point p1, Point p2, Point q1, Point q2) {
  if (p1 == p2 && q1 == q2) {
    if (p1 == q1) return PointIntersection{RationalPoint(p1)};
    return NoIntersection{};
  }
  if (p1 == p2) {
    if (on_segment(p1, q1, q2)) return PointIntersection{RationalPoint(p1)};
    return NoIntersection{};
  }
  if (q1 == q2) {
    if (on_segment(q1, p1, p2)) return PointIntersection{RationalPoint(q1)};
    return NoIntersection{};
  }

  const Point r = p2 - p1;
  const Point s = q2 - q1;
  const Point w = q1 - p1;
  Coord denom = cross(r, s);

  if (denom == 0) {
    if (cross(w, r) != 0) return NoIntersection{};
    // Collinear: compare positions along r.
    const Coord len = squared_length(r);
    struct Mark {
      Coord t;
      Point p;
    };
    Mark a{dot(q1 - p1, r), q1};
    Mark b{dot(q2 - p1, r), q2};
    if (a.t > b.t) std::swap(a, b);
    const Mark lo = a.t > 0 ? a : Mark{0, p1};
    const Mark hi = b.t < len ? b : Mark{len, p2};
    if (lo.t > hi.t) return NoIntersection{};
    if (lo.t == hi.t) return PointIntersection{RationalPoint(lo.p)};
    return OverlapIntersection{std::min(lo.p, hi.p), std::max(lo.p, hi.p)};
  }

  Coord t_num = cross(w, s);
  Coord u_num = cross(w, r);
  if (denom < 0) {
    denom = -denom;
    t_num = -t_num;
    u_num = -u_num;
  }
  if (t_num < 0 || t_num > denom || u_num < 0 || u_num > denom) return NoIntersection{};
  const __int128 d = denom;
  const __int128 xn = static_cast<__int128>(p1.x) * d + static_cast<__int128>(t_num) * r.x;
  const __int128 yn = static_cast<__int128>(p1.y) * d + static_cast<__int128>(t_num) * r.y;
  return PointIntersection{RationalPoint::make(xn, d, yn, d)};
}

// ---------------------------------------------------------------------------
// Tangents
// ---------------------------------------------------------------------------

enum class Side { Left, Right };

inline const char* to_string(Side s) { return s == Side::Left ? "Left" : "Right"; }

/// Where a tangent line touches a hull: a single vertex (first == last) or a
/// whole edge, endpoints in lexicographic order.
struct Contact {
  Point first;
  Point last;

  bool is_vertex() const { return first == last; }
  bool contains(Point p) const { return on_segment(p, first, last); }

  friend bool operator==(const Contact&, const Contact&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Contact& c) {
    os << c.first;
    if (!c.is_vertex()) os << "-" << c.last;
    return os;
  }
};

namespace detail {

/// All vertices of h lying on line(p, q), as a lexicographic range.
inline Contact contact_on_line(Point p, Point q, const std::vector<Point>& h) {
  bool seen = false;
  Contact c{};
  for (const Point& v : h) {
    if (orientation_determinant(p, q, v) != 0) continue;
    if (!seen) {
      c = {v, v};
      seen = true;
    } else {
      c.first = std::min(c.first, v);
      c.last = std::max(c.last, v);
    }
  }
  return c;
}

}  // namespace detail

/// The left (right) tangent from x to h: the line through x touching h with
/// every point of h off the line on the clockwise (counterclockwise) side of
/// the ray from x through the contact. When h lies entirely on a line through
/// x both sides return the whole of h.
inline Contact tangent_from_point(Point x, const ConvexPolygon& h, Side side) {
  if (h.empty()) throw precondition_error("tangent_from_point: empty hull");
  if (point_in_hull(x, h)) {
    throw precondition_error("tangent_from_point: " + to_string(x) + " lies in the hull");
  }
  const auto& v = h.vertices();
  for (const Point& contact : v) {
    const bool ok = std::all_of(v.begin(), v.end(), [&](Point w) {
      const Coord d = orientation_determinant(x, contact, w);
      return side == Side::Left ? d <= 0 : d >= 0;
    });
    if (ok) return detail::contact_on_line(x, contact, v);
  }
  throw internal_error("tangent_from_point: no tangent found");
}

struct CommonTangent {
  Contact first;   ///< contact with the first hull
  Contact second;  ///< contact with the second hull

  friend bool operator==(const CommonTangent&, const CommonTangent&) = default;
};

/// The left (right) inner common tangent of two disjoint hulls: the separating
/// line through u in h1 and w in h2 that is the left (right) tangent from u to
/// h2 and from w to h1. For Left, h1 lies on the counterclockwise side of the
/// ray u->w and h2 on the clockwise side; Right mirrors this.
inline CommonTangent inner_common_tangent(const ConvexPolygon& h1, const ConvexPolygon& h2,
                                          Side side) {
  if (h1.empty() || h2.empty()) throw precondition_error("inner_common_tangent: empty hull");
  if (!hulls_disjoint(h1, h2)) throw precondition_error("inner_common_tangent: hulls intersect");
  const auto& p = h1.vertices();
  const auto& q = h2.vertices();
  const Coord sign = side == Side::Left ? 1 : -1;
  for (const Point& u : p) {
    for (const Point& w : q) {
      const bool first_ok = std::all_of(p.begin(), p.end(), [&](Point z) {
        return sign * orientation_determinant(u, w, z) >= 0;
      });
      if (!first_ok) continue;
      const bool second_ok = std::all_of(q.begin(), q.end(), [&](Point z) {
        return sign * orientation_determinant(u, w, z) <= 0;
      });
      if (!second_ok) continue;
      return {detail::contact_on_line(u, w, p), detail::contact_on_line(u, w, q)};
    }
  }
  throw internal_error("inner_common_tangent: no tangent found");
}

}  // namespace tgrid
