#include "jball/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "jball/acceptance.hpp"
#include "jball/ballgeom.hpp"
#include "jball/gallery.hpp"
#include "jball/io.hpp"
#include "jball/metric.hpp"

namespace jball::cli {
namespace {

std::string fmt12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Point parse_point(const std::string& text) {
  const auto c = parse_coords(text);
  return Point(std::span<const double>(c));
}

std::uint64_t effective_seed(std::uint64_t flag) {
  const char* env = std::getenv("JBALL_SEED");
  if (env == nullptr || *env == '\0') return flag;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0') throw InvalidInput(std::string("JBALL_SEED is not an unsigned integer: ") + env);
  return v;
}

struct Common {
  std::string domain, x, m;
};

void add_ball_flags(CLI::App* sub, Common& c) {
  sub->add_option("--domain", c.domain, "domain spec (JSON file)")->required();
  sub->add_option("--x", c.x, "ball center, e.g. 1,0")->required();
  sub->add_option("--M", c.m, "ball radius")->required();
}

Radius parse_radius(const std::string& text) {
  const auto v = parse_coords(text);
  if (v.size() != 1) throw InvalidInput("radius must be a single number");
  return Radius(v[0]);
}

}  // namespace

std::vector<double> parse_coords(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw InvalidInput("not a number: '" + item + "'");
    }
    if (used != item.size() || !std::isfinite(v)) throw InvalidInput("not a finite number: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty() || (!text.empty() && text.back() == ',')) throw InvalidInput("malformed coordinate list: '" + text + "'");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"j-metric balls: distances, rendering, predicate checks, scenarios"};
  app.require_subcommand(1);

  // dist
  std::string domain_path, metric = "j", xs, ys;
  double grid = 0.0;
  auto* dist = app.add_subcommand("dist", "j or quasihyperbolic distance");
  dist->add_option("--domain", domain_path, "domain spec (JSON file)")->required();
  dist->add_option("--metric", metric, "j or k")->check(CLI::IsMember({"j", "k"}));
  dist->add_option("--x", xs, "first point")->required();
  dist->add_option("--y", ys, "second point")->required();
  dist->add_option("--grid", grid, "grid spacing for k (default: automatic)");

  // render
  Common rc;
  std::string svg_path;
  int res = kDefaultResolution;
  auto* render = app.add_subcommand("render", "trace a j-ball boundary to SVG");
  add_ball_flags(render, rc);
  render->add_option("--out", svg_path, "output SVG file")->required();
  render->add_option("--res", res, "cells across the box")->check(CLI::Range(16, 8192));

  // check
  Common cc;
  std::string predicate, center;
  std::size_t trials = 0;
  std::uint64_t seed = 1;
  double tol = -1.0;
  int check_res = kDefaultResolution;
  auto* check = app.add_subcommand("check", "run a geometric predicate on a j-ball");
  check->add_option("predicate", predicate, "convex | strict-convex | starlike | strict-starlike | topology")
      ->required()
      ->check(CLI::IsMember({"convex", "strict-convex", "starlike", "strict-starlike", "topology"}));
  add_ball_flags(check, cc);
  check->add_option("--center", center, "starlikeness center (default: x)");
  check->add_option("--trials", trials, "chords, rays or samples");
  check->add_option("--seed", seed, "random seed (JBALL_SEED overrides)");
  check->add_option("--tol", tol, "violation tolerance");
  check->add_option("--res", check_res, "grid cells for topology")->check(CLI::Range(16, 8192));

  // gallery
  std::string scenario, gallery_out;
  auto* gallery_cmd = app.add_subcommand("gallery", "run a named scenario");
  gallery_cmd->add_option("name", scenario, "scenario name")->required();
  gallery_cmd->add_option("--out", gallery_out, "write the JSON report here instead of stdout");

  // suite
  std::string report_path;
  std::uint64_t suite_seed = 1;
  auto* suite = app.add_subcommand("suite", "run the acceptance suite");
  suite->add_option("--report", report_path, "write a JSON report");
  suite->add_option("--seed", suite_seed, "random seed (JBALL_SEED overrides)");

  // domain
  std::string normalize_path;
  auto* domain_cmd = app.add_subcommand("domain", "validate a domain spec and print it normalised");
  domain_cmd->add_option("--domain", normalize_path, "domain spec (JSON file)")->required();

  std::vector<std::string> argv_store{"jball"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*dist) {
      const Domain g = io::load_domain(domain_path);
      const Point x = parse_point(xs), y = parse_point(ys);
      const double v = metric == "j" ? j_distance(g, x, y) : qh_distance(g, x, y, grid);
      out << fmt12(v) << "\n";
      return kExitOk;
    }
    if (*render) {
      const Domain g = io::load_domain(rc.domain);
      const Point x = parse_point(rc.x);
      const Radius m = parse_radius(rc.m);
      const Region region = j_ball_region(g, x, m);
      const auto loops = trace_boundary(rasterize(region, res));
      const double reach = 1.05 * annulus_bounds(g.boundary_distance(x), m).outer_radius;
      const Box view{Point(x.x() - reach, x.y() - reach), Point(x.x() + reach, x.y() + reach)};
      std::vector<io::SvgMarker> markers{{x, "x"}};
      if (const auto* ps = std::get_if<PuncturedSpace>(&g.variant())) {
        for (const Point& p : ps->punctures) {
          if (std::abs(p.x() - x.x()) <= reach && std::abs(p.y() - x.y()) <= reach) markers.push_back({p, "puncture"});
        }
      }
      io::write_file(svg_path, io::render_svg(loops, view, markers));
      out << loops.size() << " boundary loop(s) written to " << svg_path << "\n";
      return kExitOk;
    }
    if (*check) {
      const Domain g = io::load_domain(cc.domain);
      const Point x = parse_point(cc.x);
      const Radius m = parse_radius(cc.m);
      const std::uint64_t s = effective_seed(seed);
      const Region region = j_ball_region(g, x, m);
      CheckReport rep;
      if (predicate == "convex" || predicate == "strict-convex") {
        rep = convexity_check(region, predicate == "convex" ? Mode::NonStrict : Mode::Strict,
                              trials ? trials : 10000, tol >= 0.0 ? tol : 1e-9, s);
      } else if (predicate == "starlike" || predicate == "strict-starlike") {
        const Point c = center.empty() ? x : parse_point(center);
        rep = starlikeness_check(region, c, predicate == "starlike" ? Mode::NonStrict : Mode::Strict,
                                 trials ? trials : 4096, tol >= 0.0 ? tol : 1e-10, s);
      } else {
        const RegionGrid rg = rasterize(region, check_res);
        const Topology t = topology_check(rg);
        rep.predicate = "topology";
        rep.passed = t.resolved_components == 1 && t.simply_connected;
        rep.samples_used = rg.cells.size();
        rep.set("components", static_cast<double>(t.resolved_components));
        rep.set("grid_components", static_cast<double>(t.components));
        rep.set("simply_connected", t.simply_connected ? 1.0 : 0.0);
        rep.set("h", rg.h);
      }
      out << io::report_to_json(rep).dump(2) << "\n";
      return rep.passed ? kExitOk : kExitFailed;
    }
    if (*gallery_cmd) {
      const gallery::Scenario s = gallery::by_name(scenario);
      const std::string text = io::scenario_to_json(s).dump(2) + "\n";
      if (gallery_out.empty()) {
        out << text;
      } else {
        io::write_file(gallery_out, text);
        out << s.name << ": " << (s.passed() ? "pass" : "FAIL") << "\n";
      }
      return s.passed() ? kExitOk : kExitFailed;
    }
    if (*suite) {
      const std::uint64_t s = effective_seed(suite_seed);
      const auto results = acceptance::run_all(s, [&](const acceptance::Result& r) {
        out << acceptance::format(r) << std::endl;
      });
      const bool ok = acceptance::all_gated_passed(results);
      out << (ok ? "suite: all gated criteria passed" : "suite: FAILED") << "\n";
      if (!report_path.empty()) io::write_file(report_path, acceptance::to_json(results, s).dump(2) + "\n");
      return ok ? kExitOk : kExitFailed;
    }
    if (*domain_cmd) {
      out << io::write_domain(io::load_domain(normalize_path));
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace jball::cli
