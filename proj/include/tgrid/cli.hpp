#pragma once

// The tgrid command line. run() never calls exit(); it returns the process
// exit code and writes only to the two streams it is given.
//
// Exit codes: 0 success, 1 property failures, 2 usage or input format
// errors, 3 precondition violations.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tgrid/error.hpp"
#include "tgrid/geometry.hpp"
#include "tgrid/grid_function.hpp"
#include "tgrid/properties.hpp"
#include "tgrid/text_format.hpp"
#include "tgrid/threshold.hpp"
#include "tgrid/two_threshold.hpp"

namespace tgrid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPrecondition = 3;

/// Bad command line beyond what the argument parser itself checks.
class usage_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline GridDim grid_arg(const std::vector<Coord>& g) { return GridDim(g.at(0), g.at(1)); }

inline OrientedSegment segment_arg(const std::vector<Coord>& s, GridDim dim) {
  if (s.size() != 4) throw usage_error("--seg takes exactly four integers: ax ay bx by");
  const Point a{s[0], s[1]}, b{s[2], s[3]};
  require_in_grid(dim, a, "--seg");
  require_in_grid(dim, b, "--seg");
  return OrientedSegment(a, b);
}

inline std::string segment_line(const OrientedSegment& seg) {
  return "A=" + to_string(seg.a()) + " B=" + to_string(seg.b());
}

inline std::string report_json(const PropertyReport& r) {
  nlohmann::ordered_json j;
  j["property_id"] = r.property_id;
  j["grid"] = nlohmann::ordered_json::array({r.domain.m, r.domain.n});
  j["cases_checked"] = r.cases_checked;
  j["failures"] = r.failures;
  return j.dump(2) + "\n";
}

}  // namespace detail

/// `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Threshold and 2-threshold functions on integer grids", "tgrid"};
  app.require_subcommand(1);

  std::vector<Coord> grid;
  std::string in_path;
  std::string klass;

  auto* eval = app.add_subcommand("eval", "Truth table of f_AB, or of f_AB AND f_CD");
  std::vector<std::vector<Coord>> segs;
  eval->add_option("--grid", grid, "Grid size M N")->expected(2)->required();
  eval->add_option("--seg", segs, "Segment ax ay bx by (give twice for a conjunction)")
      ->expected(4)
      ->required();

  auto* classify = app.add_subcommand("classify", "Print the class of a grid document");
  classify->add_option("--in", in_path, "Grid document ('-' for stdin)")->required();

  auto* segment = app.add_subcommand("segment", "Defining segment of a threshold function");
  segment->add_option("--in", in_path, "Grid document ('-' for stdin)")->required();

  auto* pairs = app.add_subcommand("pairs", "Proper pairs defining a 2-threshold function");
  bool all_pairs = false;
  pairs->add_option("--in", in_path, "Grid document ('-' for stdin)")->required();
  pairs->add_flag("--all", all_pairs, "List every proper pair, not only the first");

  auto* canonical = app.add_subcommand("canonical", "The proper pair built by the constructive proof");
  canonical->add_option("--in", in_path, "Grid document ('-' for stdin)")->required();

  auto* essential = app.add_subcommand("essential", "Essential points, one per line");
  essential->add_option("--in", in_path, "Grid document ('-' for stdin)")->required();
  essential->add_option("--class", klass, "threshold or 2threshold")
      ->required()
      ->check(CLI::IsMember({"threshold", "2threshold"}));

  auto* enumerate = app.add_subcommand("enumerate", "List or count a function class");
  bool count_only = false;
  enumerate->add_option("--grid", grid, "Grid size M N")->expected(2)->required();
  enumerate->add_option("--class", klass, "threshold or 2threshold")
      ->required()
      ->check(CLI::IsMember({"threshold", "2threshold"}));
  enumerate->add_flag("--count-only", count_only, "Print only the count");

  auto* singleton = app.add_subcommand("count-singleton", "Number of proper pairs of a singleton");
  std::vector<Coord> point;
  singleton->add_option("--grid", grid, "Grid size M N")->expected(2)->required();
  singleton->add_option("--point", point, "Interior point X Y")->expected(2)->required();

  auto* verify = app.add_subcommand("verify", "Run a property suite exhaustively");
  std::string property;
  bool list = false;
  verify->add_option("--property", property, "Property id");
  verify->add_option("--grid", grid, "Grid size M N")->expected(2);
  verify->add_flag("--list", list, "List property ids");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eval->parsed()) {
      const GridDim dim = detail::grid_arg(grid);
      if (segs.size() > 2) throw usage_error("--seg may be given at most twice");
      GridFunction f = function_from_segment(detail::segment_arg(segs[0], dim), dim);
      if (segs.size() == 2) f &= function_from_segment(detail::segment_arg(segs[1], dim), dim);
      out << render_grid(f);
    } else if (classify->parsed()) {
      out << to_string(classify_function(parse_grid(detail::read_input(in_path)))) << "\n";
    } else if (segment->parsed()) {
      out << detail::segment_line(segment_from_function(parse_grid(detail::read_input(in_path)))) << "\n";
    } else if (pairs->parsed()) {
      const GridFunction f = parse_grid(detail::read_input(in_path));
      auto found = find_all_proper_pairs(f);
      if (!all_pairs) found.erase(found.begin() + 1, found.end());
      out << render_pairs({f.dim(), found});
    } else if (canonical->parsed()) {
      const GridFunction f = parse_grid(detail::read_input(in_path));
      out << render_pairs({f.dim(), {construct_proper_pair(f)}});
    } else if (essential->parsed()) {
      const GridFunction f = parse_grid(detail::read_input(in_path));
      const auto pts = klass == "threshold" ? essential_points_threshold(f) : essential_points_2threshold(f);
      for (Point p : pts) out << to_string(p) << "\n";
    } else if (enumerate->parsed()) {
      const GridDim dim = detail::grid_arg(grid);
      if (klass == "threshold") {
        const auto entries = enumerate_threshold(dim);
        if (count_only) {
          out << entries.size() << "\n";
        } else {
          for (std::size_t i = 0; i < entries.size(); ++i) {
            if (i != 0) out << "\n";
            out << detail::segment_line(entries[i].segment) << "\n" << render_grid(entries[i].function);
          }
        }
      } else {
        const auto fns = enumerate_two_threshold(dim);
        if (count_only) {
          out << fns.size() << "\n";
        } else {
          for (std::size_t i = 0; i < fns.size(); ++i) {
            if (i != 0) out << "\n";
            out << render_grid(fns[i]);
          }
        }
      }
    } else if (singleton->parsed()) {
      out << count_singleton_proper_pairs(detail::grid_arg(grid), Point{point[0], point[1]}) << "\n";
    } else if (verify->parsed()) {
      if (list) {
        for (const auto& p : property_registry()) out << p.id << "\t" << p.description << "\n";
        return kExitOk;
      }
      if (property.empty() || grid.size() != 2) throw usage_error("verify needs --property ID and --grid M N");
      const PropertyReport report = check_property(property, detail::grid_arg(grid));
      out << detail::report_json(report);
      return report.passed() ? kExitOk : kExitPropertyFailure;
    }
  } catch (const usage_error& e) {
    err << "tgrid: " << e.what() << "\n";
    return kExitUsage;
  } catch (const parse_error& e) {
    err << "tgrid: " << in_path << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const precondition_error& e) {
    err << "tgrid: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const internal_error& e) {
    err << "tgrid: internal error: " << e.what() << "\n";
    return kExitPropertyFailure;
  }
  return kExitOk;
}

}  // namespace tgrid::cli
