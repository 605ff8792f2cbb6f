#include "jball/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "jball/ballgeom.hpp"
#include "jball/gallery.hpp"
#include "jball/generators.hpp"
#include "jball/geodesics.hpp"
#include "jball/metric.hpp"
#include "jball/punctured.hpp"

namespace jball::acceptance {
namespace {

constexpr double kLn2 = std::numbers::ln2;
const double kStarlike = std::log1p(std::numbers::sqrt2);
const Point kOrigin(0.0, 0.0);
const Point kE1(1.0, 0.0);

// Accumulates a pass flag and a terse detail line.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok) {
      passed_ = false;
      failures_.push_back(what);
    }
  }
  template <typename... Args>
  void note(const char* fmt, Args... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, fmt, args...);
    if (!notes_.empty()) notes_ += "; ";
    notes_ += buf;
  }
  bool passed() const { return passed_; }
  std::string detail() const {
    std::string d = notes_;
    for (const auto& f : failures_) d += (d.empty() ? "FAILED: " : "; FAILED: ") + f;
    return d;
  }

 private:
  bool passed_ = true;
  std::vector<std::string> failures_;
  std::string notes_;
};

Region punctured_ball(double m) { return j_ball_region(Domain::punctured({kOrigin}), kE1, Radius(m)); }

// Criterion 1.
void convexity_threshold(Tally& t, std::uint64_t seed) {
  const Domain g = Domain::punctured({kOrigin});
  for (double m : {0.3, 0.5, kLn2}) {
    const CheckReport r = convexity_check(punctured_ball(m), Mode::NonStrict, 100000, 1e-9, seed);
    t.check(r.passed, "convexity at M=" + std::to_string(m));
  }
  for (double m : {kLn2 + 0.02, 0.8, 1.0}) {
    const CheckReport r = convexity_check(punctured_ball(m), Mode::NonStrict, 100000, 1e-9, seed);
    bool verified = false;
    if (!r.passed && r.witness && r.witness->points.size() == 3) {
      const auto& w = r.witness->points;
      const Radius rad(m);
      verified = in_j_ball(g, kE1, rad, w[0]) && in_j_ball(g, kE1, rad, w[1]) && !in_j_ball(g, kE1, rad, w[2]);
    }
    t.check(verified, "verified chord witness at M=" + std::to_string(m));
  }
  const CheckReport below = convexity_check(punctured_ball(kLn2 - 0.01), Mode::Strict, 100000, 1e-9, seed);
  t.check(below.passed, "strict convexity at log 2 - 0.01");
  const CheckReport at = convexity_check(punctured_ball(kLn2), Mode::Strict, 100000, 1e-9, seed);
  bool flat = false;
  if (!at.passed && at.witness && at.witness->kind == "flat_chord") {
    const auto& w = at.witness->points;
    flat = std::abs(w[0].x() - 0.5) < 1e-6 && std::abs(w[1].x() - 0.5) < 1e-6;
    t.note("flat chord x=%.9f,%.9f", w[0].x(), w[1].x());
  }
  t.check(flat, "strict convexity fails at log 2 on Re z = 1/2");
}

// Criterion 2.
void starlike_threshold(Tally& t, std::uint64_t seed) {
  const CheckReport at = starlikeness_check(punctured_ball(kStarlike), kE1, Mode::Strict, 4096, 1e-10, seed);
  t.check(at.passed, "strict starlikeness at log(1+sqrt 2)");
  const CheckReport above =
      starlikeness_check(punctured_ball(kStarlike + 0.02), kE1, Mode::Strict, 4096, 1e-10, seed);
  bool reentry = false;
  if (!above.passed && above.witness && above.witness->kind == "ray_reentry") {
    const Domain g = Domain::punctured({kOrigin});
    const Radius m(kStarlike + 0.02);
    const auto& w = above.witness->points;
    reentry = !in_j_ball(g, kE1, m, w[1]) && in_j_ball(g, kE1, m, w[2]) && distance(w[0], w[2]) > distance(w[0], w[1]);
  }
  t.check(reentry, "re-entering ray above the threshold");
  const double tang = punctured::tangency_residual(Radius(kStarlike));
  const double perp = punctured::perpendicularity_residual(Radius(kStarlike));
  t.note("tangency residual %.3g, perpendicularity residual %.3g", tang, perp);
  t.check(std::abs(tang) <= 1e-12, "tangency residual");
  t.check(std::abs(perp) <= 1e-10, "perpendicularity residual");
}

// Criterion 3.
void decomposition_exactness(Tally& t, std::uint64_t seed) {
  gen::Rng rng(seed);
  const Domain g = Domain::punctured({kOrigin});
  std::size_t disagreements = 0, skipped = 0, total = 0;
  for (int i = 0; i < 30; ++i) {
    const double m = 0.05 * std::pow(1.5 / 0.05, i / 29.0);
    const Radius rad(m);
    const punctured::DiskDecomposition dd = punctured::disk_decomposition(rad);
    const double reach = 1.2 * (std::exp(m) - 1.0);
    for (int k = 0; k < 10000; ++k) {
      const Point z(1.0 + gen::uniform(rng, -reach, reach), gen::uniform(rng, -reach, reach));
      ++total;
      if (dd.boundary_margin(z) < 1e-12) {
        ++skipped;
        continue;
      }
      if (dd.contains(z) != in_j_ball(g, kE1, rad, z)) ++disagreements;
    }
  }
  t.note("%zu points, %zu disagreements, %zu within 1e-12 of a circle", total, disagreements, skipped);
  t.check(disagreements == 0, "decomposition disagrees with the definition");
}

// Criterion 4.
void euclidean_sandwich(Tally& t, std::uint64_t seed) {
  gen::Rng rng(seed);
  std::size_t violations = 0, members = 0;
  constexpr double kSlack = 1e-12;
  for (int dom = 0; dom < 1000; ++dom) {
    const Domain g = gen::random_domain(rng);
    for (int k = 0; k < 100; ++k) {
      const Point x = gen::sample_interior(g, rng);
      const double dx = g.boundary_distance(x);
      const Radius m(gen::uniform(rng, 0.05, 3.0));
      const AnnulusBounds ab = annulus_bounds(dx, m);
      Point dir = Point::zeros(g.dim());
      std::normal_distribution<double> gauss;
      for (std::size_t i = 0; i < g.dim(); ++i) dir[i] = gauss(rng);
      dir = dir / norm(dir);
      const double r = gen::uniform(rng, 0.0, 1.1 * ab.outer_radius);
      const Point y = x + dir * r;
      const bool in = in_j_ball(g, x, m, y);
      if (r < ab.inner_radius * (1.0 - kSlack) && !in) ++violations;
      if (in) {
        ++members;
        const double dy = g.boundary_distance(y);
        if (r >= ab.outer_radius * (1.0 + kSlack)) ++violations;
        if (dy < ab.depth_min * (1.0 - kSlack) || dy > ab.depth_max * (1.0 + kSlack)) ++violations;
      }
    }
  }
  t.note("100000 samples, %zu members, %zu violations", members, violations);
  t.check(violations == 0, "sandwich violated");
}

// Criterion 5.
void intersection_identity(Tally& t, std::uint64_t seed) {
  gen::Rng rng(seed);
  std::size_t mismatches = 0;
  for (int dom = 0; dom < 10; ++dom) {
    const std::size_t dim = dom % 2 ? 3 : 2;
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const Domain g = gen::random_punctured(rng, dim, m);
    const auto& pts = std::get<PuncturedSpace>(g.variant()).punctures;
    for (int k = 0; k < 100; ++k) {
      const Point x = gen::sample_interior(g, rng);
      const CheckReport r = gallery::finite_puncture_intersection(pts, x, Radius(gen::uniform(rng, 0.05, 2.0)), 100,
                                                                  rng());
      mismatches += static_cast<std::size_t>(*r.get("mismatches"));
    }
  }
  t.note("10 domains x 10000 samples, %zu mismatches", mismatches);
  t.check(mismatches == 0, "intersection identity");
}

// Criterion 6.
void triangle_equality(Tally& t, std::uint64_t seed) {
  gen::Rng rng(seed);
  double worst_collinear = 0.0, worst_perturbed = std::numeric_limits<double>::infinity();
  std::size_t uncertified = 0, no_geodesic = 0;
  for (int k = 0; k < 100; ++k) {
    const Point p(gen::uniform(rng, -1.0, 1.0), gen::uniform(rng, -1.0, 1.0));
    const double a = gen::uniform(rng, 0.0, 2.0 * std::numbers::pi);
    const Point u(std::cos(a), std::sin(a));
    const double ra = gen::uniform(rng, 0.1, 1.0), rb = ra + gen::uniform(rng, 0.1, 2.0);
    std::vector<Point> punctures{p};
    // A second puncture behind p leaves p nearest along the whole segment.
    if (k % 2) punctures.push_back(p - u * gen::uniform(rng, 0.5, 3.0));
    const Domain g = Domain::punctured(punctures);
    const Point x = p + u * ra, z = p + u * rb;
    const auto scan = geodesics::equality_witnesses(g, x, z, 1e-12);
    uncertified += scan.uncertified.size() + (scan.samples - scan.witnesses.size() - scan.uncertified.size());
    for (int i = 1; i <= geodesics::kSegmentSamples; ++i) {
      const Point y = lerp(x, z, static_cast<double>(i) / (geodesics::kSegmentSamples + 1));
      worst_collinear = std::max(worst_collinear, geodesics::triangle_defect(g, x, y, z));
    }
    if (!geodesics::geodesic_exists(g, x, z).exists) ++no_geodesic;

    // y turned about the puncture: x, y and u no longer collinear.
    const double th = std::pow(10.0, gen::uniform(rng, -3.0, 0.0)) * (k % 3 ? 1.0 : -1.0);
    for (int i = 1; i < 16; ++i) {
      const Point v = lerp(x, z, i / 16.0) - p;
      const Point y = p + Point(std::cos(th) * v.x() - std::sin(th) * v.y(), std::sin(th) * v.x() + std::cos(th) * v.y());
      if (g.contains(y)) worst_perturbed = std::min(worst_perturbed, geodesics::triangle_defect(g, x, y, z));
    }
  }
  t.note("collinear max defect %.3g, perturbed min defect %.3g", worst_collinear, worst_perturbed);
  t.check(worst_collinear < 1e-12, "collinear defect");
  t.check(uncertified == 0, "uncertified equality points");
  t.check(no_geodesic == 0, "collinear segment not recognised as geodesic");
  t.check(worst_perturbed > 1e-8, "perturbed defect");
  const std::vector<std::pair<const char*, Domain>> domains{
      {"punctured plane", Domain::punctured({kOrigin})},
      {"two punctures", Domain::punctured({kOrigin, Point(10.0, 0.0)})},
      {"half-plane", Domain::half_space(Point(0.0, -1.0), 0.0)}};
  for (const auto& [name, g] : domains) {
    try {
      const auto pair = geodesics::no_geodesic_pair(g, seed);
      t.check(pair.min_defect > 0.0, std::string("no_geodesic_pair defect on ") + name);
    } catch (const ResolutionError&) {
      t.check(false, std::string("no_geodesic_pair on ") + name);
    }
  }
}

// Criterion 7.
void qh_comparison(Tally& t, std::uint64_t seed) {
  gen::Rng rng(seed);
  const Domain g = Domain::punctured({kOrigin});
  auto random_pair = [&](double max_sep) {
    for (;;) {
      const double a = gen::uniform(rng, 0.0, 2.0 * std::numbers::pi), r = gen::uniform(rng, 0.5, 2.0);
      const Point x(r * std::cos(a), r * std::sin(a));
      const double b = gen::uniform(rng, 0.0, 2.0 * std::numbers::pi), s = gen::uniform(rng, 0.02, max_sep) * r;
      const Point y = x + Point(s * std::cos(b), s * std::sin(b));
      if (g.contains(y)) return std::pair{x, y};
    }
  };
  // Minorant: graph distances on 1000 pairs, refined distances on a subset.
  double worst_graph = -std::numeric_limits<double>::infinity(), worst_refined = worst_graph;
  for (int k = 0; k < 1000; ++k) {
    const auto [x, y] = random_pair(1.5);
    QhOptions o;
    o.refine = k % 20 == 0;
    const QhResult q = qh_path(g, x, y, o);
    const double j = j_distance(g, x, y);
    worst_graph = std::max(worst_graph, j - q.graph_distance);
    if (o.refine) worst_refined = std::max(worst_refined, j - q.distance);
  }
  t.note("max j-k: graph %.3g, refined %.3g", worst_graph, worst_refined);
  t.check(worst_graph <= 1e-6 && worst_refined <= 1e-6, "minorant j <= k");

  double worst_bound = -std::numeric_limits<double>::infinity();
  for (double s : {0.2, 0.5, 0.8}) {
    for (int k = 0; k < 15; ++k) {
      Point x = kOrigin, y = kOrigin;
      do {
        std::tie(x, y) = random_pair(s);
      } while (!(distance(x, y) < s * g.boundary_distance(x)));
      const CheckReport r = comparison_check(g, x, y, s);
      worst_bound = std::max(worst_bound, *r.get("k") - *r.get("bound"));
      t.check(r.passed, "comparison_check at s=" + std::to_string(s));
    }
  }
  t.note("max k - j/(1-s) %.3g", worst_bound);

  double err_h = 0.0, err_h2 = 0.0;
  for (int k = 0; k < 8; ++k) {
    const auto [x, y] = random_pair(1.5);
    const double exact = qh_punctured_closed_form(kOrigin, x, y);
    const QhResult coarse = qh_path(g, x, y);
    QhOptions half;
    half.h = coarse.h / 2.0;
    const QhResult fine = qh_path(g, x, y, half);
    err_h = std::max(err_h, std::abs(coarse.distance - exact) / exact);
    err_h2 = std::max(err_h2, std::abs(fine.distance - exact) / exact);
  }
  t.note("closed-form relative error %.3g at h, %.3g at h/2", err_h, err_h2);
  t.check(err_h < 0.01, "closed form within 1%");
  t.check(err_h2 < err_h, "error improves under h/2");
}

void scenario(Tally& t, const gallery::Scenario& s, const char* label) {
  for (const auto& e : s.expectations) {
    if (e.gated) t.check(e.pass, std::string(label) + " " + e.predicate);
  }
}

// Criterion 8.
void sharpness(Tally& t) {
  const double above = kStarlike + 0.1;
  const auto a = gallery::two_puncture_sharpness(above, 1024);
  const auto b = gallery::two_puncture_sharpness(above, 2048);
  const auto c = gallery::two_puncture_sharpness(kStarlike, 1024);
  scenario(t, a, "1024^2");
  scenario(t, b, "2048^2");
  scenario(t, c, "threshold");
  t.note("components %g (1024^2), %g (2048^2), %g at threshold", std::get<double>(a.find("components")->actual),
         std::get<double>(b.find("components")->actual), std::get<double>(c.find("components")->actual));
}

// Criterion 9.
void sphere_closure(Tally& t) {
  const auto s = gallery::sphere_vs_closure();
  scenario(t, s, "sphere_vs_closure");
  const Point* iso = s.point("isolated");
  t.note("sphere components %g, isolated point %s", std::get<double>(s.find("sphere_components")->actual),
         iso ? iso->to_string().c_str() : "none");
}

// Criterion 10.
void simply_connected(Tally& t) {
  const auto thin = gallery::simply_connected_counterexample(0.25);
  scenario(t, thin, "h=1/4");
  const auto wide = gallery::simply_connected_counterexample(0.5);
  scenario(t, wide, "h=1/2");
  const double comps = std::get<double>(wide.find("components")->actual);
  t.check(comps == 1.0, "h=1/2 single component");
  t.note("h=1/2 components %g", comps);
}

// Criterion 11.
void qh_nonintersection(Tally& t) {
  const auto s = gallery::qh_nonintersection_demo();
  scenario(t, s, "qh demo");
  t.note("k(x,y)=%.9f, |y|=%.5f, |z|=%.5f, witness w=%.6f e1, k(x,w)=%.6f", std::get<double>(s.find("k(x,y)")->actual),
         std::get<double>(s.find("|y|")->actual), std::get<double>(s.find("|z|")->actual), s.point("w")->x(),
         std::get<double>(s.find("k(x,w)")->actual));
}

// Criterion 12.
void convex_and_starlike_domains(Tally& t, std::uint64_t seed) {
  gen::Rng rng(seed);
  std::vector<Domain> convex{gen::random_half_plane(rng)};
  for (int k = 0; k < 5; ++k) convex.push_back(gen::random_convex_polygon(rng, 3 + k));
  std::size_t checks = 0;
  for (const Domain& g : convex) {
    const Point x = gen::sample_interior(g, rng);
    for (double m : {1.0, 2.0, 3.0}) {
      const CheckReport r = convexity_check(j_ball_region(g, x, Radius(m)), Mode::NonStrict, 10000, 1e-9, seed);
      ++checks;
      t.check(r.passed, g.type_name() + " convexity at M=" + std::to_string(m));
    }
  }
  for (int k = 0; k < 3; ++k) {
    const Domain g = gen::random_star_polygon(rng, 7 + 2 * k, kOrigin);
    for (double m : {1.0, 2.0, 3.0}) {
      const CheckReport r =
          starlikeness_check(j_ball_region(g, kOrigin, Radius(m)), kOrigin, Mode::NonStrict, 10000, 1e-9, seed);
      ++checks;
      t.check(r.passed, "star polygon starlikeness at M=" + std::to_string(m));
    }
  }
  t.note("%zu checks", checks);
}

// Criterion 13.
void qh_thresholds(Tally& t, std::uint64_t seed) {
  auto ball = [](double m) { return qh_punctured_region(kOrigin, kE1, Radius(m)); };
  const bool c1 = convexity_check(ball(1.0), Mode::NonStrict, 10000, 1e-9, seed).passed;
  const CheckReport c11 = convexity_check(ball(1.1), Mode::NonStrict, 10000, 1e-9, seed);
  const bool s28 = starlikeness_check(ball(2.8), kE1, Mode::Strict, 4096, 1e-10, seed).passed;
  const bool s29 = starlikeness_check(ball(2.9), kE1, Mode::Strict, 4096, 1e-10, seed).passed;
  t.check(c1, "qh convexity at M=1");
  t.check(!c11.passed, "qh convexity fails at M=1.1");
  t.check(s28, "qh starlikeness at M=2.8");
  t.check(!s29, "qh starlikeness fails at M=2.9");
  t.note("convex: M=1 %s, M=1.1 %s (max excess %.3g); starlike: M=2.8 %s, M=2.9 %s", c1 ? "pass" : "fail",
         c11.passed ? "pass" : "fail", c11.get("max_chord_excess").value_or(0.0), s28 ? "pass" : "fail",
         s29 ? "pass" : "fail");
}

const char* title(int id) {
  static const char* titles[] = {"",
                                 "punctured-plane convexity threshold",
                                 "strict starlikeness threshold",
                                 "decomposition exactness",
                                 "Euclidean sandwich",
                                 "intersection identity",
                                 "triangle equality and geodesics",
                                 "quasihyperbolic minorant and upper bound",
                                 "two-puncture sharpness",
                                 "isolated sphere point",
                                 "disconnected ball in a union of disks",
                                 "quasihyperbolic non-intersection",
                                 "convex and starlike domains",
                                 "quasihyperbolic thresholds (optional)"};
  return titles[id];
}

}  // namespace

Result run(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriteria) throw InvalidInput("acceptance criterion out of range: " + std::to_string(id));
  const auto t0 = std::chrono::steady_clock::now();
  Tally t;
  try {
    switch (id) {
      case 1: convexity_threshold(t, seed); break;
      case 2: starlike_threshold(t, seed); break;
      case 3: decomposition_exactness(t, seed); break;
      case 4: euclidean_sandwich(t, seed); break;
      case 5: intersection_identity(t, seed); break;
      case 6: triangle_equality(t, seed); break;
      case 7: qh_comparison(t, seed); break;
      case 8: sharpness(t); break;
      case 9: sphere_closure(t); break;
      case 10: simply_connected(t); break;
      case 11: qh_nonintersection(t); break;
      case 12: convex_and_starlike_domains(t, seed); break;
      default: qh_thresholds(t, seed); break;
    }
  } catch (const std::exception& e) {
    t.check(false, std::string("exception: ") + e.what());
  }
  Result r;
  r.id = id;
  r.title = title(id);
  r.passed = t.passed();
  r.gated = id != 13;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.detail = t.detail();
  return r;
}

std::vector<Result> run_all(std::uint64_t seed, const std::function<void(const Result&)>& each) {
  std::vector<Result> out;
  for (int id = 1; id <= kCriteria; ++id) {
    out.push_back(run(id, seed));
    if (each) each(out.back());
  }
  return out;
}

bool all_gated_passed(const std::vector<Result>& results) {
  return std::all_of(results.begin(), results.end(), [](const Result& r) { return r.passed || !r.gated; });
}

std::string format(const Result& r) {
  char head[160];
  std::snprintf(head, sizeof head, "[%s] %2d %-44s %7.2f s%s  ", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(),
                r.seconds, r.gated ? "" : " (not gated)");
  return head + r.detail;
}

io::Json to_json(const std::vector<Result>& results, std::uint64_t seed) {
  io::Json j;
  j["schema"] = io::kSchemaVersion;
  j["seed"] = seed;
  j["passed"] = all_gated_passed(results);
  io::Json list = io::Json::array();
  for (const auto& r : results) {
    list.push_back(io::Json{{"id", r.id},
                            {"title", r.title},
                            {"passed", r.passed},
                            {"gated", r.gated},
                            {"detail", r.detail}});
  }
  j["criteria"] = list;
  return j;
}

}  // namespace jball::acceptance
