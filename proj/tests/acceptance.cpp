// Acceptance run: one PASS/FAIL line per criterion, each with a wall-clock limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tgrid/tgrid.hpp"

using namespace tgrid;

namespace {

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<void(std::vector<std::string>&)> body;
};

template <class... Args>
void expect(std::vector<std::string>& problems, bool ok, const Args&... args) {
  if (ok) return;
  std::ostringstream os;
  (os << ... << args);
  problems.push_back(os.str());
}

void expect_property(std::vector<std::string>& problems, const char* id, GridDim dim) {
  const PropertyReport r = check_property(id, dim);
  expect(problems, r.passed(), id, " on ", to_string(dim), ": ", r.failures.size(), " counterexamples",
         r.failures.empty() ? "" : ", first: " + r.failures.front());
  expect(problems, r.cases_checked > 0, id, " on ", to_string(dim), " checked no cases");
}

std::size_t adjacency_count(GridDim dim) {
  std::size_t count = 0;
  for (Point a : grid_points(dim))
    for (Point b : grid_points(dim))
      if (oracle::detail::adjacent_in_grid(a, b, dim)) ++count;
  return count;
}

void bijection_counts(std::vector<std::string>& p) {
  for (auto [dim, expected] : {std::pair{GridDim(2, 2), std::size_t{12}}, std::pair{GridDim(3, 3), std::size_t{56}}}) {
    const auto entries = enumerate_threshold(dim);
    std::set<GridFunction> distinct;
    for (const auto& e : entries) distinct.insert(e.function);
    expect(p, entries.size() == expected, to_string(dim), ": ", entries.size(), " entries");
    expect(p, distinct.size() == entries.size(), to_string(dim), ": functions not distinct");
    expect(p, prime_segments(dim).size() == entries.size(), to_string(dim), ": segment count differs");
  }
  for (GridDim dim : {GridDim(2, 2), GridDim(3, 2)}) {
    const auto table = oracle::naive_threshold_table(dim);
    std::set<GridFunction> naive;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim.size()); ++mask) {
      const auto f = GridFunction::from_mask(dim, mask);
      if (!f.is_constant() && oracle::naive_is_threshold(f, table)) naive.insert(f);
    }
    std::set<GridFunction> fast;
    for (const auto& e : enumerate_threshold(dim)) fast.insert(e.function);
    expect(p, naive == fast, to_string(dim), ": enumeration differs from the naive census");
  }
}

void round_trip(std::vector<std::string>& p) {
  const GridDim dim(4, 4);
  const auto segs = prime_segments(dim);
  expect(p, segs.size() == adjacency_count(dim), "segment count ", segs.size(), " differs from adjacency scan");
  expect(p, segs.size() == 172, "expected 172 oriented prime segments, got ", segs.size());
  for (const auto& seg : segs)
    expect(p, segment_from_function(function_from_segment(seg, dim)) == seg, "round trip fails for ", seg);
}

void classification_iff(std::vector<std::string>& p) {
  const GridDim dim(4, 4);
  const PropertyReport r = check_property("thm4_iff", dim);
  expect(p, r.passed(), r.failures.size(), " disagreements");
  const std::size_t n = adjacency_count(dim);
  expect(p, r.cases_checked == n * n, "checked ", r.cases_checked, " ordered pairs, expected ", n * n);
}

void paper_examples(std::vector<std::string>& p) {
  const GridDim g4(4, 4);
  const auto fig4 = function_from_segment(OrientedSegment({1, 1}, {2, 2}), g4);
  expect(p, render_grid(fig4) == "4 4\n1110\n1100\n1100\n1000\n", "Fig. 4 truth table:\n", render_grid(fig4));
  expect(p, fig4 == oracle::naive_function_from_segment({1, 1}, {2, 2}, g4), "Fig. 4 differs from oracle");

  const auto fig7a = function_from_pair(OrientedSegment({2, 2}, {3, 3}), OrientedSegment({1, 2}, {2, 0}), g4);
  expect(p, render_grid(fig7a) == "4 4\n0110\n0110\n0000\n0000\n", "Fig. 7(a) truth table:\n", render_grid(fig7a));
  expect(p, classify_function(fig7a) == FunctionClass::Proper2Threshold, "Fig. 7(a) class ",
         to_string(classify_function(fig7a)));

  const auto fig7b = fig7a.flipped({2, 0});
  expect(p, classify_function(fig7b) == FunctionClass::NotTwoThreshold, "Fig. 7(b) class ",
         to_string(classify_function(fig7b)));
  expect(p, !oracle::naive_is_two_threshold(fig7b), "oracle calls Fig. 7(b) 2-threshold");
  const auto ess = essential_points_2threshold(fig7a);
  expect(p, !std::binary_search(ess.begin(), ess.end(), Point{2, 0}), "D=(2,0) is essential for Fig. 7(a)");

  const GridDim g3(3, 3);
  const ProperPair fig9(OrientedSegment({0, 1}, {0, 0}), OrientedSegment({0, 1}, {0, 2}));
  const auto single = GridFunction::from_true_points(g3, {{0, 1}});
  const auto all = find_all_proper_pairs(single);
  expect(p, all.size() == 1 && all.front() == fig9, "Fig. 9 singleton has ", all.size(), " pairs");
  expect(p, construct_proper_pair(single) == fig9, "Fig. 9 construction differs");
}

struct CensusResult {
  std::size_t proper = 0;
  std::size_t boundary = 0;
  std::vector<std::string> existence;
  std::vector<std::string> uniqueness;
};

// Criteria 5 and 6 share one pass over the census.
CensusResult run_census() {
  CensusResult out;
  const GridDim dim(4, 4);
  const ThresholdCatalog catalog(dim);
  for (const auto& f : enumerate_two_threshold(dim)) {
    if (classify_function(f, catalog) != FunctionClass::Proper2Threshold) continue;
    ++out.proper;
    const auto all = find_all_proper_pairs(f, catalog);
    std::ostringstream who;
    who << "function " << render_grid(f);
    try {
      const ProperPair built = construct_proper_pair(f, catalog);
      expect(out.existence, !all.empty(), who.str(), " has no proper pair");
      expect(out.existence, std::binary_search(all.begin(), all.end(), built), who.str(), " construction not found");
      expect(out.existence, function_from_pair(built, dim) == f, who.str(), " construction defines another function");
    } catch (const std::exception& e) {
      out.existence.push_back(who.str() + ": " + e.what());
    }
    const auto ones = f.true_points();
    if (std::any_of(ones.begin(), ones.end(), [&](Point q) { return dim.on_boundary(q); })) {
      ++out.boundary;
      expect(out.uniqueness, all.size() == 1, who.str(), " has ", all.size(), " proper pairs");
    }
  }
  return out;
}

void essentiality(std::vector<std::string>& p) {
  expect_property(p, "thm3_essential", GridDim(4, 4));
  expect_property(p, "thm4_essential", GridDim(4, 4));
}

void singleton_counting(std::vector<std::string>& p) {
  const std::pair<GridDim, Point> cases[] = {{GridDim(9, 7), Point{4, 3}}, {GridDim(3, 3), Point{1, 1}}};
  const std::size_t expected[] = {20, 4};
  for (std::size_t i = 0; i < 2; ++i) {
    const auto [dim, a] = cases[i];
    const std::size_t counted = count_singleton_proper_pairs(dim, a);
    const std::size_t found = find_all_proper_pairs(GridFunction::from_true_points(dim, {a})).size();
    expect(p, counted == expected[i], to_string(dim), " ", a, ": counted ", counted);
    expect(p, found == counted, to_string(dim), " ", a, ": exhaustive search found ", found);
  }
}

void oracle_equivalence(std::vector<std::string>& p) {
  expect_property(p, "oracle_segment_equivalence", GridDim(5, 5));
  expect_property(p, "oracle_threshold_equivalence", GridDim(3, 3));
  expect_property(p, "oracle_two_threshold_equivalence", GridDim(3, 3));
}

void geometry_claims(std::vector<std::string>& p) {
  expect_property(p, "claim_same_orient", GridDim(5, 5));
  expect_property(p, "claim_collinear_segments_and_point", GridDim(7, 7));
  expect_property(p, "claim_clockwise_triangles", GridDim(5, 5));
  expect_property(p, "claim_convex_rectangle", GridDim(5, 5));
  expect_property(p, "claim_tangent_on_line", GridDim(4, 4));
  expect_property(p, "claim_points_on_line", GridDim(5, 5));
  expect_property(p, "claim_segments_zeros_ones", GridDim(4, 4));
  expect_property(p, "cor_all_ones_on_line", GridDim(4, 4));
  expect_property(p, "cor_superb_intersect", GridDim(4, 4));
  expect_property(p, "claim_zeros_ones_intersection", GridDim(4, 4));
}

}  // namespace

int main() {
  CensusResult census;
  bool census_done = false;
  auto census_once = [&]() -> const CensusResult& {
    if (!census_done) {
      census = run_census();
      census_done = true;
    }
    return census;
  };

  const std::vector<Criterion> criteria = {
      {1, "bijection counts", 1.0, bijection_counts},
      {2, "round trip on G_4x4", 5.0, round_trip},
      {3, "classification iff on G_4x4", 30.0, classification_iff},
      {4, "paper examples", 1.0, paper_examples},
      {5, "existence and construction on G_4x4", 300.0,
       [&](std::vector<std::string>& p) {
         const auto& c = census_once();
         p = c.existence;
         expect(p, c.proper > 0, "no proper 2-threshold functions found");
       }},
      {6, "boundary uniqueness on G_4x4", 300.0,
       [&](std::vector<std::string>& p) {
         const auto& c = census_once();
         p = c.uniqueness;
         expect(p, c.boundary > 0, "no boundary functions found");
       }},
      {7, "essentiality on G_4x4", 300.0, essentiality},
      {8, "singleton counting", 30.0, singleton_counting},
      {9, "oracle equivalence", 120.0, oracle_equivalence},
      {10, "geometry claim suites", 300.0, geometry_claims},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    std::vector<std::string> problems;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(problems);
    } catch (const std::exception& e) {
      problems.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) {
      problems.push_back("took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    }
    const bool ok = problems.empty();
    if (!ok) ++failed;
    std::printf("%s criterion %d: %s (%.3f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", c.number, c.name.c_str(),
                seconds, c.limit_seconds);
    for (std::size_t i = 0; i < problems.size() && i < 5; ++i) std::printf("    %s\n", problems[i].c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
