#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "tgrid/error.hpp"
#include "tgrid/geometry.hpp"

namespace tgrid {

/// The rectangular grid {0..m-1} x {0..n-1}.
struct GridDim {
  Coord m = 1;
  Coord n = 1;

  GridDim() = default;
  GridDim(Coord m_, Coord n_) : m(m_), n(n_) {
    if (m < 1 || n < 1) {
      throw precondition_error("grid dimensions must be positive, got " + std::to_string(m) + "x" +
                               std::to_string(n));
    }
  }

  std::size_t size() const { return static_cast<std::size_t>(m * n); }
  bool contains(Point p) const { return 0 <= p.x && p.x < m && 0 <= p.y && p.y < n; }
  bool on_boundary(Point p) const {
    return contains(p) && (p.x == 0 || p.x == m - 1 || p.y == 0 || p.y == n - 1);
  }
  std::size_t index(Point p) const { return static_cast<std::size_t>(p.y * m + p.x); }
  Point point(std::size_t i) const {
    return {static_cast<Coord>(i) % m, static_cast<Coord>(i) / m};
  }

  friend auto operator<=>(const GridDim&, const GridDim&) = default;
};

inline std::string to_string(GridDim d) { return std::to_string(d.m) + "x" + std::to_string(d.n); }

/// All grid points in index order (row y = 0 first).
inline std::vector<Point> grid_points(GridDim dim) {
  std::vector<Point> pts;
  pts.reserve(dim.size());
  for (std::size_t i = 0; i < dim.size(); ++i) pts.push_back(dim.point(i));
  return pts;
}

inline void require_in_grid(GridDim dim, Point p, const char* what) {
  if (!dim.contains(p)) {
    throw precondition_error(std::string(what) + ": point " + to_string(p) + " outside grid " +
                             to_string(dim));
  }
}

/// A {0,1}-valued function on a grid, stored as a bit vector with bit
/// y*m + x holding f(x, y). Unused high bits of the last word stay zero.
class GridFunction {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  GridFunction() = default;
  explicit GridFunction(GridDim dim, bool value = false)
      : dim_(dim), words_((dim.size() + kWordBits - 1) / kWordBits, value ? ~Word{0} : Word{0}) {
    trim();
  }

  static GridFunction from_true_points(GridDim dim, std::span<const Point> pts) {
    GridFunction f(dim);
    for (const Point& p : pts) {
      require_in_grid(dim, p, "GridFunction");
      f.set(p, true);
    }
    return f;
  }
  static GridFunction from_true_points(GridDim dim, std::initializer_list<Point> pts) {
    return from_true_points(dim, std::span<const Point>(pts.begin(), pts.size()));
  }

  /// Bit i of `mask` becomes f at grid index i; only for grids of at most 64 points.
  static GridFunction from_mask(GridDim dim, Word mask) {
    if (dim.size() > kWordBits) throw precondition_error("from_mask: grid larger than 64 points");
    GridFunction f(dim);
    f.words_[0] = mask;
    f.trim();
    return f;
  }

  GridDim dim() const { return dim_; }
  std::size_t size() const { return dim_.size(); }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  bool operator()(Point p) const { return get(dim_.index(p)); }
  bool at(Point p) const {
    require_in_grid(dim_, p, "GridFunction::at");
    return (*this)(p);
  }

  void set(std::size_t i, bool v) {
    const Word bit = Word{1} << (i % kWordBits);
    if (v)
      words_[i / kWordBits] |= bit;
    else
      words_[i / kWordBits] &= ~bit;
  }
  void set(Point p, bool v) { set(dim_.index(p), v); }

  GridFunction flipped(Point p) const {
    require_in_grid(dim_, p, "GridFunction::flipped");
    GridFunction g = *this;
    g.set(p, !(*this)(p));
    return g;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool is_constant_zero() const { return count() == 0; }
  bool is_constant_one() const { return count() == size(); }
  bool is_constant() const { return is_constant_zero() || is_constant_one(); }

  /// True iff every true point of `other` is a true point of *this.
  bool covers(const GridFunction& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((other.words_[i] & ~words_[i]) != 0) return false;
    return true;
  }

  /// M_1(f) in index order.
  std::vector<Point> true_points() const { return points_with(true); }
  /// M_0(f) in index order.
  std::vector<Point> false_points() const { return points_with(false); }

  const std::vector<Word>& words() const { return words_; }

  GridFunction& operator&=(const GridFunction& o) {
    check_same_dim(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  friend GridFunction operator&(GridFunction a, const GridFunction& b) { return a &= b; }

  GridFunction operator~() const {
    GridFunction g = *this;
    for (Word& w : g.words_) w = ~w;
    g.trim();
    return g;
  }

  friend bool operator==(const GridFunction&, const GridFunction&) = default;
  friend auto operator<=>(const GridFunction&, const GridFunction&) = default;

private:
  void trim() {
    const std::size_t rem = dim_.size() % kWordBits;
    if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
  }

  void check_same_dim(const GridFunction& o) const {
    if (o.dim_ != dim_) throw precondition_error("grid functions on different grids");
  }

  std::vector<Point> points_with(bool value) const {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < size(); ++i)
      if (get(i) == value) pts.push_back(dim_.point(i));
    return pts;
  }

  GridDim dim_;
  std::vector<Word> words_ = std::vector<Word>(1, 0);
};

struct GridFunctionHash {
  std::size_t operator()(const GridFunction& f) const noexcept {
    std::size_t h = std::hash<Coord>{}(f.dim().m) * 31 + std::hash<Coord>{}(f.dim().n);
    for (auto w : f.words()) h = h * 1000003u ^ std::hash<GridFunction::Word>{}(w);
    return h;
  }
};

}  // namespace tgrid
