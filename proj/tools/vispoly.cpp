#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vispoly/corpus.hpp"
#include "vispoly/effective_critical.hpp"
#include "vispoly/errors.hpp"
#include "vispoly/io.hpp"
#include "vispoly/oracle.hpp"
#include "vispoly/visibility.hpp"

using namespace vispoly;

namespace {

using Clock = std::chrono::steady_clock;

struct RunConfig {
  std::string input;
  std::string viewpoint;
  std::string engine = "constrained";
  std::string mode = "strict-paper";
  std::string convention = "reflex-both";
  std::string output;
  std::string svg;
  std::string stats;
  bool strict = false;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw GeometryError(ErrorKind::ParseError, "cannot write '" + path + "'");
  out << text;
}

std::vector<std::pair<Point, Point>> windows_for(const PolygonInput& input, const std::vector<std::size_t>& idx) {
  std::vector<Segment> edges;
  const auto v = input.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) edges.push_back({v[i], v[(i + 1) % v.size()]});
  std::vector<std::pair<Point, Point>> out;
  for (std::size_t i : idx) {
    if (auto s = shadow_point(input.viewpoint(), v[i], edges)) out.emplace_back(v[i], s->point);
  }
  return out;
}

int run(const RunConfig& cfg) {
  const PolygonInput input(read_polygon_file(cfg.input), parse_viewpoint(cfg.viewpoint));
  validate(input, cfg.strict);
  const TurnConvention conv =
      cfg.convention == "paper-literal" ? TurnConvention::PaperLiteral : TurnConvention::ReflexBoth;
  const Mode mode = cfg.mode == "validated" ? Mode::Validated : Mode::StrictPaper;

  std::vector<Point> out;
  std::vector<std::size_t> effective;
  RunStats stats;
  double wall_ms = 0.0;
  const bool oracle = cfg.engine == "oracle";
  const auto t0 = Clock::now();
  if (oracle) {
    out = brute_force_visibility(input);
    wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    effective = visible_critical_indices(input, conv);
    stats.n = input.size();
    stats.c = critical_count(input, conv);
    stats.c_effective = effective.size();
    stats.mode = mode;
  } else {
    out = constrained_visibility(input, {mode, conv}, &stats);
    wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (!cfg.svg.empty()) effective = flagged_indices(input, compute_effective(PolygonView(input), mode, conv));
  }

  if (cfg.output.empty()) {
    write_polygon(std::cout, out);
  } else {
    write_polygon_file(cfg.output, out);
  }
  if (!cfg.svg.empty()) {
    SvgScene scene;
    scene.input = &input;
    scene.visibility = out;
    for (std::size_t i : effective) scene.criticals.push_back(input.vertex(i));
    scene.windows = windows_for(input, effective);
    write_text(cfg.svg, render_svg(scene));
  }
  if (!cfg.stats.empty()) {
    std::string text = stats_json(stats, wall_ms, cfg.engine);
    if (oracle) {
      // The oracle does not run under the workspace model; its meter fields are not applicable.
      auto j = nlohmann::ordered_json::parse(text);
      j["vertex_reads"] = nullptr;
      j["flag_bits"] = nullptr;
      j["scalar_slots_peak"] = nullptr;
      text = j.dump(2) + "\n";
    }
    write_text(cfg.stats, text);
  }
  return 0;
}

struct GenerateConfig {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string family = "random";
  std::size_t teeth = 8;
  std::string output;
};

int generate(const GenerateConfig& cfg) {
  PolygonInput p = cfg.family == "convex" ? random_convex(cfg.n, cfg.seed)
                   : cfg.family == "comb" ? comb(cfg.teeth, cfg.n)
                                          : random_simple_polygon(cfg.n, cfg.seed);
  const std::vector<Point> pts(p.vertices().begin(), p.vertices().end());
  if (cfg.output.empty()) {
    write_polygon(std::cout, pts);
  } else {
    write_polygon_file(cfg.output, pts);
  }
  std::ostringstream vp;
  vp << std::setprecision(17) << p.viewpoint().x << "," << p.viewpoint().y;
  std::cerr << "viewpoint " << vp.str() << "\n";
  return 0;
}

struct BenchConfig {
  std::size_t teeth = 8;
  std::size_t max_n = 100000;
  bool oracle_timing = false;
  std::uint64_t seed = 1;
};

double slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += std::log(x[i]);
    sy += std::log(y[i]);
    sxx += std::log(x[i]) * std::log(x[i]);
    sxy += std::log(x[i]) * std::log(y[i]);
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

int bench(const BenchConfig& cfg) {
  std::printf("%-8s %8s %4s %12s %8s %9s %17s %10s\n", "family", "n", "c", "vertex_reads", "reads/n", "flag_bits",
              "scalar_slots_peak", "wall_ms");
  for (const std::string family : {"comb", "convex"}) {
    std::vector<double> ns, reads;
    for (std::size_t n = 1000; n <= cfg.max_n; n *= 10) {
      const PolygonInput p = family == "comb" ? comb(cfg.teeth, n) : random_convex(n, cfg.seed);
      validate(p, false);
      RunStats s;
      const auto t0 = Clock::now();
      constrained_visibility(p, {}, &s);
      const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
      const std::string label = family == "comb" ? "comb-" + std::to_string(cfg.teeth) : family;
      std::printf("%-8s %8zu %4zu %12llu %8.3f %9zu %17zu %10.2f\n", label.c_str(), n, s.c,
                  static_cast<unsigned long long>(s.meter.vertex_reads),
                  static_cast<double>(s.meter.vertex_reads) / static_cast<double>(n), s.meter.flag_bits,
                  s.meter.scalar_slots_peak, ms);
      ns.push_back(static_cast<double>(n));
      reads.push_back(static_cast<double>(s.meter.vertex_reads));
    }
    if (ns.size() >= 2) std::printf("# %s log-log slope of vertex_reads vs n: %.4f\n", family.c_str(), slope(ns, reads));
  }
  if (cfg.oracle_timing) {
    double ms[2];
    for (int k = 0; k < 2; ++k) {
      const PolygonInput p = random_convex(10000 * static_cast<std::size_t>(k + 1), cfg.seed);
      const auto t0 = Clock::now();
      brute_force_visibility(p);
      ms[k] = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    }
    std::printf("# oracle wall_ms n=10000: %.1f  n=20000: %.1f  ratio: %.2f\n", ms[0], ms[1], ms[1] / ms[0]);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Visibility polygon of an interior viewpoint under a read-only / write-only workspace model"};
  app.require_subcommand(1);

  RunConfig rc;
  auto* run_cmd = app.add_subcommand("run", "Compute the visibility polygon");
  run_cmd->add_option("--input", rc.input, "Polygon file")->required();
  run_cmd->add_option("--viewpoint", rc.viewpoint, "Viewpoint as x,y")->required();
  run_cmd->add_option("--engine", rc.engine)->check(CLI::IsMember({"constrained", "oracle"}));
  run_cmd->add_option("--mode", rc.mode)->check(CLI::IsMember({"strict-paper", "validated"}));
  run_cmd->add_option("--convention", rc.convention)->check(CLI::IsMember({"reflex-both", "paper-literal"}));
  run_cmd->add_option("--output", rc.output, "Output polygon file (default: stdout)");
  run_cmd->add_option("--svg", rc.svg, "Write an SVG plot");
  run_cmd->add_option("--stats", rc.stats, "Write run statistics as JSON");
  run_cmd->add_flag("--strict", rc.strict, "Also check simplicity and general position (quadratic)");

  GenerateConfig gc;
  auto* gen_cmd = app.add_subcommand("generate", "Write a generated polygon; the viewpoint goes to stderr");
  gen_cmd->add_option("--n", gc.n)->required();
  gen_cmd->add_option("--seed", gc.seed)->required();
  gen_cmd->add_option("--family", gc.family)->check(CLI::IsMember({"random", "convex", "comb"}));
  gen_cmd->add_option("--teeth", gc.teeth);
  gen_cmd->add_option("--output", gc.output);

  BenchConfig bc;
  auto* bench_cmd = app.add_subcommand("bench", "Size sweep of the constrained engine");
  bench_cmd->add_option("--teeth", bc.teeth);
  bench_cmd->add_option("--max-n", bc.max_n);
  bench_cmd->add_option("--seed", bc.seed);
  bench_cmd->add_flag("--oracle-timing", bc.oracle_timing, "Time the oracle at n=1e4 and 2e4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*run_cmd) return run(rc);
    if (*gen_cmd) return generate(gc);
    if (*bench_cmd) return bench(bc);
  } catch (const RunError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const GeometryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return 0;
}
