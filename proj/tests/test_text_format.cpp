#include <random>
#include <string>

#include <gtest/gtest.h>

#include "tgrid/text_format.hpp"

using namespace tgrid;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    parse_grid(text);
  } catch (const parse_error& e) {
    return e.line();
  }
  return 9999;
}

}  // namespace

TEST(ParseGrid, Examples) {
  const auto f = parse_grid("2 2\n01\n10\n");
  EXPECT_EQ(f.true_points(), (std::vector<Point>{{0, 0}, {1, 1}}));
  EXPECT_TRUE(parse_grid("1 1\n1\n").is_constant_one());
}

TEST(RenderGrid, Examples) {
  EXPECT_EQ(render_grid(GridFunction::from_true_points(GridDim(2, 2), {{0, 0}, {1, 1}})), "2 2\n01\n10\n");
  EXPECT_EQ(render_grid(GridFunction(GridDim(3, 2))), "3 2\n000\n000\n");
  const auto fig4 = GridFunction::from_true_points(
      GridDim(4, 4), {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(render_grid(fig4), "4 4\n1110\n1100\n1100\n1000\n");
}

TEST(ParseGrid, Diagnostics) {
  EXPECT_EQ(error_line("2 x\n01\n10\n"), 1u);
  EXPECT_EQ(error_line("2  2\n01\n10\n"), 1u);
  EXPECT_EQ(error_line("0 2\n\n\n"), 1u);
  EXPECT_EQ(error_line("2 2\n01\n1\n"), 3u);
  EXPECT_EQ(error_line("2 2\n01\n1x\n"), 3u);
  EXPECT_EQ(error_line("2 2\n01\n"), 3u);
  EXPECT_EQ(error_line("2 2\n01\n10\n11\n"), 4u);
  EXPECT_EQ(error_line("2 2\n01\n10"), 0u);
  EXPECT_EQ(error_line("2 2\n01\n10\n\n"), 4u);
  EXPECT_EQ(error_line("2 2\r\n01\n10\n"), 1u);
  EXPECT_EQ(error_line(""), 1u);
}

TEST(ParseGrid, DistinctMessages) {
  auto message = [](const std::string& t) {
    try {
      parse_grid(t);
    } catch (const parse_error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  const auto header = message("x 2\n01\n10\n");
  const auto length = message("2 2\n011\n10\n");
  const auto character = message("2 2\n02\n10\n");
  EXPECT_NE(header, length);
  EXPECT_NE(length, character);
  EXPECT_NE(header, character);
}

TEST(GridText, RoundTripRandom) {
  std::mt19937 rng(37);
  for (int t = 0; t < 200; ++t) {
    const GridDim dim(1 + static_cast<Coord>(rng() % 12), 1 + static_cast<Coord>(rng() % 12));
    GridFunction f(dim);
    for (std::size_t i = 0; i < dim.size(); ++i) f.set(i, rng() & 1u);
    const std::string text = render_grid(f);
    EXPECT_EQ(parse_grid(text), f);
    EXPECT_EQ(render_grid(parse_grid(text)), text);
  }
}

TEST(PairDocument, RenderAndParse) {
  const PairDocument doc{GridDim(3, 3), {ProperPair(OrientedSegment({0, 1}, {0, 0}), OrientedSegment({0, 1}, {0, 2}))}};
  const std::string text = render_pairs(doc);
  EXPECT_EQ(text,
            "{\n  \"m\": 3,\n  \"n\": 3,\n  \"pairs\": [\n    {\n      \"A\": [\n        0,\n        1\n      ],\n"
            "      \"B\": [\n        0,\n        0\n      ],\n      \"C\": [\n        0,\n        1\n      ],\n"
            "      \"D\": [\n        0,\n        2\n      ]\n    }\n  ]\n}\n");
  EXPECT_EQ(parse_pairs(text), doc);
}

TEST(PairDocument, Validation) {
  EXPECT_THROW(parse_pairs("{"), parse_error);
  EXPECT_THROW(parse_pairs(R"({"m": 3, "n": 3})"), parse_error);
  EXPECT_THROW(parse_pairs(R"({"m": 3, "n": 3, "pairs": [{"A": [0,1], "B": [0,0], "C": [0,1]}]})"), parse_error);
  EXPECT_THROW(parse_pairs(R"({"m": 3, "n": 3, "pairs": [{"A": [0,1], "B": [0,0], "C": [0,1], "D": [0,3]}]})"),
               parse_error);
  EXPECT_THROW(parse_pairs(R"({"m": 3, "n": 3, "pairs": [{"A": [0,0], "B": [2,2], "C": [0,1], "D": [0,2]}]})"),
               parse_error);
  EXPECT_THROW(parse_pairs(R"({"m": 3, "n": 3, "pairs": [{"A": [0,1], "B": [0,0], "C": [0,1], "D": [1,1]}]})"),
               parse_error);
}
