#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "tgrid/grid_function.hpp"

using namespace tgrid;

TEST(GridDim, RejectsNonPositive) {
  EXPECT_THROW(GridDim(0, 3), precondition_error);
  EXPECT_THROW(GridDim(3, -1), precondition_error);
  EXPECT_NO_THROW(GridDim(1, 1));
}

TEST(GridDim, IndexRoundTrip) {
  const GridDim dim(5, 3);
  for (std::size_t i = 0; i < dim.size(); ++i) EXPECT_EQ(dim.index(dim.point(i)), i);
  EXPECT_EQ(dim.index({2, 1}), 7u);
  EXPECT_TRUE(dim.on_boundary({0, 1}));
  EXPECT_FALSE(dim.on_boundary({2, 1}));
  EXPECT_FALSE(dim.on_boundary({5, 1}));
}

TEST(GridFunction, TruePointsAndCount) {
  const GridDim dim(3, 2);
  const auto f = GridFunction::from_true_points(dim, {{0, 0}, {2, 1}});
  EXPECT_EQ(f.count(), 2u);
  EXPECT_EQ(f.true_points(), (std::vector<Point>{{0, 0}, {2, 1}}));
  EXPECT_EQ(f.false_points().size(), 4u);
  EXPECT_TRUE(f.at({2, 1}));
  EXPECT_THROW(f.at({3, 0}), precondition_error);
  EXPECT_THROW(GridFunction::from_true_points(dim, {{0, 2}}), precondition_error);
}

TEST(GridFunction, ConstantsAndComplement) {
  const GridDim dim(7, 11);  // 77 points, two words
  const GridFunction zero(dim), one(dim, true);
  EXPECT_TRUE(zero.is_constant_zero());
  EXPECT_TRUE(one.is_constant_one());
  EXPECT_EQ(one.count(), 77u);
  EXPECT_EQ(~zero, one);
  EXPECT_EQ(~one, zero);
}

TEST(GridFunction, FromMaskMatchesBits) {
  const GridDim dim(2, 2);
  const auto f = GridFunction::from_mask(dim, 0b1001);
  EXPECT_EQ(f.true_points(), (std::vector<Point>{{0, 0}, {1, 1}}));
  EXPECT_EQ(GridFunction::from_mask(dim, 0xFF).count(), 4u);
  EXPECT_THROW(GridFunction::from_mask(GridDim(9, 9), 1), precondition_error);
}

TEST(GridFunction, AndCoversFlipRandom) {
  std::mt19937 rng(3);
  const GridDim dim(9, 8);
  for (int t = 0; t < 200; ++t) {
    GridFunction f(dim), g(dim);
    for (std::size_t i = 0; i < dim.size(); ++i) {
      f.set(i, rng() & 1u);
      g.set(i, rng() & 1u);
    }
    const GridFunction h = f & g;
    EXPECT_TRUE(f.covers(h));
    EXPECT_TRUE(g.covers(h));
    for (std::size_t i = 0; i < dim.size(); ++i) EXPECT_EQ(h.get(i), f.get(i) && g.get(i));
    const Point p = dim.point(rng() % dim.size());
    EXPECT_NE(f.flipped(p)(p), f(p));
    EXPECT_EQ(f.flipped(p).flipped(p), f);
    EXPECT_EQ(f.true_points().size() + f.false_points().size(), dim.size());
  }
}

TEST(GridFunction, DifferentGridsRejected) {
  GridFunction f(GridDim(2, 2));
  EXPECT_THROW(f &= GridFunction(GridDim(2, 3)), precondition_error);
}
