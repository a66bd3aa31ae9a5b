#pragma once
// Command-line front end: flag parsing into a RunConfig and run(), which
// returns the exit code and the text to print. main() only forwards argv.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "yolk/decision.hpp"
#include "yolk/io.hpp"
#include "yolk/median_lines.hpp"
#include "yolk/oracle.hpp"
#include "yolk/solver.hpp"

namespace yolk::cli {

enum class Command { Solve, Oracle, Check, Bench, Gen };

enum ExitCode : int { kOk = 0, kBadInput = 1, kBadFlags = 2, kCheckFailed = 3 };

struct RunConfig {
  Command command = Command::Solve;
  std::optional<std::string> input;
  std::optional<io::PointFormat> input_format;  // overrides the extension
  std::optional<std::string> generator;
  std::size_t n = 0;
  std::uint64_t seed = 1;
  Metric metric = Metric::L1;
  std::optional<double> epsilon;
  double tolerance = 1e-6;
  std::string output_format = "json";  // json | csv
  std::optional<std::string> svg;
  std::optional<std::string> output;  // gen only; stdout otherwise
};

struct RunResult {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

/// Parsed configuration, or the exit code and message for a bad command line.
struct ParseOutcome {
  std::optional<RunConfig> config;
  RunResult early;
};

namespace detail {

inline std::string check_config(const RunConfig& c) {
  const bool has_input = c.input.has_value();
  const bool has_gen = c.generator.has_value();
  switch (c.command) {
    case Command::Solve:
    case Command::Oracle:
    case Command::Check:
      if (has_input == has_gen) return "exactly one of --input and --gen is required";
      break;
    case Command::Gen:
      if (!has_gen || has_input) return "gen needs --gen and no --input";
      break;
    case Command::Bench:
      if (has_input) return "bench generates its own inputs; --input is not allowed";
      break;
  }
  if (has_gen && c.command != Command::Bench && c.n == 0) return "--gen needs --n >= 1";
  if (c.metric == Metric::L2Approx && !c.epsilon) return "--metric l2 needs --epsilon";
  if (c.metric != Metric::L2Approx && c.epsilon) return "--epsilon only applies to --metric l2";
  if (c.epsilon && !(*c.epsilon > 0.0 && std::isfinite(*c.epsilon))) return "--epsilon must be positive";
  if (!(c.tolerance > 0.0 && std::isfinite(c.tolerance))) return "--tol must be positive";
  if (c.output_format != "json" && c.output_format != "csv") return "--format must be json or csv";
  if (c.svg && (c.command == Command::Bench || c.command == Command::Gen)) return "--svg applies to solve, oracle and check";
  if (c.output && c.command != Command::Gen) return "--output applies to gen";
  return {};
}

}  // namespace detail

inline ParseOutcome parse(std::vector<std::string> args) {
  CLI::App app{"Yolk of a planar point set in L1, L-infinity or approximately L2"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string metric = "l1";
  std::string input_format;
  std::string gen;
  std::string input;
  double epsilon = 0.0;

  auto add_common = [&](CLI::App* sub, bool input_flags, bool metric_flags) {
    if (input_flags) {
      sub->add_option("--input", input, "point file (CSV or JSON)");
      sub->add_option("--input-format", input_format, "csv or json; default from the file extension")
          ->check(CLI::IsMember({"csv", "json"}));
    }
    sub->add_option("--gen", gen, "generator")->check(CLI::IsMember(io::generator_names()));
    sub->add_option("--n", cfg.n, "number of generated points");
    sub->add_option("--seed", cfg.seed, "generator seed");
    sub->add_option("--format", cfg.output_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    if (metric_flags) {
      sub->add_option("--metric", metric, "l1, l2 or linf")->check(CLI::IsMember({"l1", "l2", "linf"}));
      sub->add_option("--epsilon", epsilon, "approximation factor for l2");
      sub->add_option("--tol", cfg.tolerance, "search tolerance");
      sub->add_option("--svg", cfg.svg, "write an SVG rendering");
    }
  };
  auto* solve = app.add_subcommand("solve", "compute the yolk");
  auto* oracle = app.add_subcommand("oracle", "exact yolk by brute force (n <= 300)");
  auto* check = app.add_subcommand("check", "compare the solver with the brute-force yolk");
  auto* bench = app.add_subcommand("bench", "time the decision procedure for growing n");
  auto* genc = app.add_subcommand("gen", "write a generated point file");
  for (auto* s : {solve, oracle, check}) add_common(s, true, true);
  add_common(bench, false, false);
  add_common(genc, false, false);
  genc->add_option("--output", cfg.output, "destination file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {std::nullopt, {kOk, app.help(), {}}};
  } catch (const CLI::CallForAllHelp&) {
    return {std::nullopt, {kOk, app.help("", CLI::AppFormatMode::All), {}}};
  } catch (const CLI::ParseError& e) {
    return {std::nullopt, {kBadFlags, {}, std::string("error: ") + e.what() + "\n"}};
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (chosen == solve) cfg.command = Command::Solve;
  if (chosen == oracle) cfg.command = Command::Oracle;
  if (chosen == check) cfg.command = Command::Check;
  if (chosen == bench) cfg.command = Command::Bench;
  if (chosen == genc) cfg.command = Command::Gen;
  auto given = [&](const char* name) {
    auto* opt = chosen->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("--input")) cfg.input = input;
  if (given("--input-format")) cfg.input_format = io::format_from_name(input_format);
  if (given("--gen")) cfg.generator = gen;
  if (given("--epsilon")) cfg.epsilon = epsilon;
  // Point files default to CSV; every other command defaults to JSON.
  if (cfg.command == Command::Gen && !given("--format")) cfg.output_format = "csv";
  cfg.metric = metric == "l2" ? Metric::L2Approx : (metric == "linf" ? Metric::Linf : Metric::L1);

  if (const std::string problem = detail::check_config(cfg); !problem.empty())
    return {std::nullopt, {kBadFlags, {}, "error: " + problem + "\n"}};
  return {cfg, {}};
}

namespace detail {

inline NormTag norm_for(Metric m) {
  switch (m) {
    case Metric::L1: return NormTag::Diamond;
    case Metric::Linf: return NormTag::Square;
    case Metric::L2Approx: return NormTag::Euclidean;
  }
  return NormTag::Euclidean;
}

inline PointSet load(const RunConfig& c) {
  if (c.input) return io::load_points(*c.input, c.input_format);
  return io::make_point_set(io::generate(*c.generator, c.n, c.seed));
}

inline nlohmann::ordered_json solve_json(const YolkResult& y, std::size_t n) {
  nlohmann::ordered_json j;
  j["metric"] = to_string(y.metric);
  j["center"] = {y.center.x, y.center.y};
  j["radius"] = y.radius;
  j["k_used"] = y.k_used;
  j["epsilon"] = y.epsilon ? nlohmann::ordered_json(*y.epsilon) : nlohmann::ordered_json(nullptr);
  j["tolerance"] = y.tolerance;
  j["n"] = n;
  j["decisions_evaluated"] = y.decisions_evaluated;
  return j;
}

// Same fields in the same order as the JSON object, one comma-separated row.
inline std::string csv_row(const nlohmann::ordered_json& j) {
  std::string row;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!row.empty()) row += ',';
    if (it->is_array()) {
      row += (*it)[0].dump() + "," + (*it)[1].dump();
    } else if (it->is_string()) {
      row += it->get<std::string>();
    } else if (it->is_null()) {
      // empty field
    } else {
      row += it->dump();
    }
  }
  return row + "\n";
}

inline std::string emit(const nlohmann::ordered_json& j, const std::string& format) {
  return format == "csv" ? csv_row(j) : j.dump() + "\n";
}

// Yolk of a single point: the point itself with radius 0.
inline LPSolution oracle_solution(const PointSet& V, NormTag norm) {
  if (V.size() == 1) return {V[0], 0.0, {}};
  return yolk_bruteforce(V, norm);
}

inline io::BallShape solver_shape(const YolkResult& y) {
  io::BallShape shape;
  const PolygonParams P{y.k_used, y.circumradius, y.polygon_center.x, y.polygon_center.y};
  for (int i = 0; i < y.k_used; ++i) shape.polygon.push_back(rotate(polygon_vertex(P, i), -y.frame_rotation));
  if (y.metric == Metric::L2Approx) shape.circle = std::make_pair(y.center, y.circumradius);
  return shape;
}

inline io::BallShape oracle_shape(Point c, double r, NormTag norm) {
  io::BallShape shape;
  switch (norm) {
    case NormTag::Euclidean: shape.circle = std::make_pair(c, r); break;
    case NormTag::Diamond:
      shape.polygon = {{c.x, c.y + r}, {c.x + r, c.y}, {c.x, c.y - r}, {c.x - r, c.y}};
      break;
    case NormTag::Square:
      shape.polygon = {{c.x - r, c.y + r}, {c.x + r, c.y + r}, {c.x + r, c.y - r}, {c.x - r, c.y - r}};
      break;
  }
  return shape;
}

inline constexpr std::size_t kSvgLineLimit = 64;

inline void write_svg(const RunConfig& c, const PointSet& V, const io::BallShape& shape) {
  if (!c.svg) return;
  std::vector<Line> lines;
  if (V.size() >= 2 && V.size() <= kSvgLineLimit) lines = limiting_median_lines(V);
  std::ofstream out(*c.svg, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + *c.svg + "'");
  out << io::render_svg(V, lines, shape);
}

// A solver radius passes when it is within 10 tol (relative to 1 + r) of the
// oracle; for l2 the upper end is widened by the (1 + eps) factor.
inline bool check_passes(Metric m, std::optional<double> eps, double tol, double solver, double oracle,
                         double& allowed) {
  allowed = 10.0 * tol * (1.0 + oracle);
  if (m == Metric::L2Approx) return solver >= oracle - allowed && solver <= (1.0 + *eps) * oracle + allowed;
  return std::abs(solver - oracle) <= allowed;
}

inline RunResult run_bench(const RunConfig& c) {
  const std::string gen = c.generator.value_or("uniform");
  const std::size_t top = c.n ? c.n : 100000;
  std::vector<std::size_t> sizes;
  for (std::size_t n = 1000; n < top; n *= 10) sizes.push_back(n);
  sizes.push_back(top);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::string csv = "n,milliseconds\n";
  for (std::size_t n : sizes) {
    const PointSet V(io::generate(gen, n, c.seed));
    double xmin = V[0].x, xmax = V[0].x, ymin = V[0].y, ymax = V[0].y;
    for (const Point& p : V) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
    // A square around the middle that leaves most points outside.
    const PolygonParams P{4, 0.25 * std::max(xmax - xmin, ymax - ymin), 0.5 * (xmin + xmax), 0.5 * (ymin + ymax)};
    std::vector<double> times;
    for (int rep = 0; rep < 3; ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      volatile bool verdict = decide(P, V);
      (void)verdict;
      times.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
    }
    std::sort(times.begin(), times.end());
    rows.push_back({{"n", n}, {"milliseconds", times[1]}});
    csv += std::to_string(n) + "," + io::format_double(times[1]) + "\n";
  }
  return {kOk, c.output_format == "csv" ? csv : rows.dump() + "\n", {}};
}

inline RunResult run_gen(const RunConfig& c) {
  const auto pts = io::generate(*c.generator, c.n, c.seed);
  std::string text;
  if (c.output_format == "json") {
    text = io::write_json(pts);
  } else {
    text = io::write_csv(pts, "# generator=" + *c.generator + " n=" + std::to_string(c.n) +
                                  " seed=" + std::to_string(c.seed) + " prng=" + io::kGeneratorEngine + "\n");
  }
  if (!c.output) return {kOk, text, {}};
  std::ofstream out(*c.output, std::ios::binary);
  if (!out) return {kBadInput, {}, "error: cannot write '" + *c.output + "'\n"};
  out << text;
  return {kOk, {}, {}};
}

}  // namespace detail

inline RunResult run(const RunConfig& c) {
  if (const std::string problem = detail::check_config(c); !problem.empty())
    return {kBadFlags, {}, "error: " + problem + "\n"};
  try {
    if (c.command == Command::Bench) return detail::run_bench(c);
    if (c.command == Command::Gen) return detail::run_gen(c);

    const PointSet V = detail::load(c);
    const NormTag norm = detail::norm_for(c.metric);
    if ((c.command == Command::Oracle || c.command == Command::Check) && V.size() > kOracleMaxPoints)
      return {kBadFlags, {}, "error: the brute-force yolk is limited to " + std::to_string(kOracleMaxPoints) +
                                 " points\n"};

    if (c.command == Command::Solve) {
      const YolkResult y = compute_yolk(V, c.metric, c.epsilon, c.tolerance);
      detail::write_svg(c, V, detail::solver_shape(y));
      return {kOk, detail::emit(detail::solve_json(y, V.size()), c.output_format), {}};
    }

    if (c.command == Command::Oracle) {
      const LPSolution o = detail::oracle_solution(V, norm);
      nlohmann::ordered_json j;
      j["metric"] = to_string(c.metric);
      j["center"] = {o.center.x, o.center.y};
      j["radius"] = o.radius;
      j["n"] = V.size();
      detail::write_svg(c, V, detail::oracle_shape(o.center, o.radius, norm));
      return {kOk, detail::emit(j, c.output_format), {}};
    }

    // check
    const YolkResult y = compute_yolk(V, c.metric, c.epsilon, c.tolerance);
    const LPSolution o = detail::oracle_solution(V, norm);
    double allowed = 0.0;
    const bool pass = detail::check_passes(c.metric, c.epsilon, c.tolerance, y.radius, o.radius, allowed);
    nlohmann::ordered_json j;
    j["metric"] = to_string(c.metric);
    j["solver_radius"] = y.radius;
    j["oracle_radius"] = o.radius;
    j["gap"] = y.radius - o.radius;
    j["allowed"] = allowed;
    j["epsilon"] = c.epsilon ? nlohmann::ordered_json(*c.epsilon) : nlohmann::ordered_json(nullptr);
    j["n"] = V.size();
    j["pass"] = pass;
    detail::write_svg(c, V, detail::solver_shape(y));
    return {pass ? kOk : kCheckFailed, detail::emit(j, c.output_format), {}};
  } catch (const io::InputError& e) {
    return {kBadInput, {}, std::string("error: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {kBadFlags, {}, std::string("error: ") + e.what() + "\n"};
  } catch (const std::runtime_error& e) {
    return {kBadInput, {}, std::string("error: ") + e.what() + "\n"};
  }
}

/// parse + run, for main() and tests.
inline RunResult main_entry(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  ParseOutcome p = parse(std::move(args));
  if (!p.config) return p.early;
  return run(*p.config);
}

}  // namespace yolk::cli
