#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "tgrid/oracle.hpp"
#include "tgrid/threshold.hpp"

using namespace tgrid;

namespace {

std::vector<Point> sorted(std::vector<Point> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(SegmentFunction, Fig4TruthTable) {
  const GridDim dim(4, 4);
  const auto f = function_from_segment(OrientedSegment({1, 1}, {2, 2}), dim);
  EXPECT_EQ(sorted(f.true_points()),
            sorted({{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(f, oracle::naive_function_from_segment({1, 1}, {2, 2}, dim));
}

TEST(SegmentFunction, SmallGridExamples) {
  const auto f = function_from_segment(OrientedSegment({0, 1}, {0, 0}), GridDim(2, 2));
  EXPECT_EQ(sorted(f.true_points()), sorted({{0, 1}, {1, 0}, {1, 1}}));

  const auto g = function_from_segment(OrientedSegment({0, 1}, {0, 2}), GridDim(3, 3));
  EXPECT_EQ(sorted(g.true_points()), sorted({{0, 0}, {0, 1}}));
  EXPECT_EQ(g, oracle::naive_function_from_segment({0, 1}, {0, 2}, GridDim(3, 3)));
}

TEST(SegmentFunction, RejectsOutsideGrid) {
  EXPECT_THROW(function_from_segment(OrientedSegment({3, 3}, {4, 4}), GridDim(4, 4)), precondition_error);
}

TEST(SeparatingInequality, SpecExamples) {
  const auto a = separating_inequality(OrientedSegment({1, 1}, {2, 2}), GridDim(4, 4));
  EXPECT_EQ(a, (SeparatingInequality{-18, 16, -2}));
  const auto b = separating_inequality(OrientedSegment({0, 1}, {0, 0}), GridDim(2, 2));
  EXPECT_EQ(b, (SeparatingInequality{5, 1, 1}));
  EXPECT_FALSE(b.holds({0, 0}));
}

TEST(SeparatingInequality, ReproducesFunctionOnRandomGrids) {
  std::mt19937 rng(23);
  for (int t = 0; t < 30; ++t) {
    const GridDim dim(1 + static_cast<Coord>(rng() % 9), 1 + static_cast<Coord>(rng() % 9));
    const auto segs = prime_segments(dim);
    if (segs.empty()) continue;
    const auto& seg = segs[rng() % segs.size()];
    const auto f = function_from_segment(seg, dim);
    const auto ineq = separating_inequality(seg, dim);
    for (Point p : grid_points(dim)) EXPECT_EQ(ineq.holds(p), f(p)) << seg << " " << p;
  }
}

TEST(IsThreshold, SpecExamples) {
  EXPECT_TRUE(is_threshold(GridFunction(GridDim(3, 3), true)));
  EXPECT_FALSE(is_threshold(GridFunction::from_true_points(GridDim(2, 2), {{0, 0}, {1, 1}})));
  // The Fig. 7 block: its zeros surround it, so the hulls meet.
  EXPECT_FALSE(is_threshold(GridFunction::from_true_points(GridDim(4, 4), {{1, 2}, {1, 3}, {2, 2}, {2, 3}})));
}

TEST(SegmentFromFunction, SpecExamples) {
  const GridDim g4(4, 4);
  EXPECT_EQ(segment_from_function(function_from_segment(OrientedSegment({1, 1}, {2, 2}), g4)),
            OrientedSegment({1, 1}, {2, 2}));

  GridFunction f(GridDim(2, 2), true);
  f.set(Point{0, 0}, false);
  EXPECT_EQ(segment_from_function(f), OrientedSegment({0, 1}, {0, 0}));
}

TEST(SegmentFromFunction, LeftColumnMatchesOracleSearch) {
  const GridDim dim(3, 3);
  const auto f = GridFunction::from_true_points(dim, {{0, 0}, {0, 1}, {0, 2}});
  std::vector<OrientedSegment> hits;
  for (const auto& seg : prime_segments(dim))
    if (oracle::naive_function_from_segment(seg, dim) == f) hits.push_back(seg);
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(segment_from_function(f), hits.front());
}

TEST(SegmentFromFunction, RejectsConstantsAndNonThreshold) {
  EXPECT_THROW(segment_from_function(GridFunction(GridDim(3, 3))), precondition_error);
  EXPECT_THROW(segment_from_function(GridFunction::from_true_points(GridDim(2, 2), {{0, 0}, {1, 1}})),
               precondition_error);
}

TEST(SegmentFromFunction, RoundTripOnRectangularGrids) {
  for (Coord m = 1; m <= 5; ++m)
    for (Coord n = 1; n <= 5; ++n) {
      const GridDim dim(m, n);
      for (const auto& seg : prime_segments(dim))
        EXPECT_EQ(segment_from_function(function_from_segment(seg, dim)), seg) << to_string(dim);
    }
}

TEST(EnumerateThreshold, Counts) {
  EXPECT_EQ(enumerate_threshold(GridDim(2, 2)).size(), 12u);
  EXPECT_EQ(enumerate_threshold(GridDim(3, 3)).size(), 56u);
  EXPECT_EQ(enumerate_threshold(GridDim(1, 1)).size(), 0u);
  EXPECT_EQ(enumerate_threshold(GridDim(4, 4)).size(), oracle::naive_threshold_table(GridDim(4, 4)).size());
}

TEST(EnumerateThreshold, FunctionsAreDistinct) {
  const auto entries = enumerate_threshold(GridDim(4, 3));
  std::set<GridFunction> fns;
  for (const auto& e : entries) fns.insert(e.function);
  EXPECT_EQ(fns.size(), entries.size());
}

TEST(EnumerateThreshold, GuardIsHard) {
  EXPECT_THROW(enumerate_threshold(GridDim(100, 100)), guard_exceeded);
}

TEST(EssentialThreshold, SpecExamples) {
  const GridDim dim(2, 2);
  EXPECT_EQ(essential_points_threshold(GridFunction(dim, true)), sorted({{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  const auto ess = essential_points_threshold(GridFunction::from_true_points(dim, {{0, 0}}));
  EXPECT_TRUE(std::binary_search(ess.begin(), ess.end(), Point{0, 0}));
  EXPECT_THROW(essential_points_threshold(GridFunction::from_true_points(dim, {{0, 0}, {1, 1}})),
               precondition_error);
}

TEST(EssentialThreshold, ContainsSegmentEndpointsRandom) {
  std::mt19937 rng(29);
  for (int t = 0; t < 40; ++t) {
    const GridDim dim(2 + static_cast<Coord>(rng() % 5), 2 + static_cast<Coord>(rng() % 5));
    const auto segs = prime_segments(dim);
    const auto& seg = segs[rng() % segs.size()];
    const auto ess = essential_points_threshold(function_from_segment(seg, dim));
    EXPECT_TRUE(std::binary_search(ess.begin(), ess.end(), seg.a())) << seg;
    EXPECT_TRUE(std::binary_search(ess.begin(), ess.end(), seg.b())) << seg;
  }
}
