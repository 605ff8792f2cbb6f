#include "jball/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "jball/punctured.hpp"

namespace jball::gallery {
namespace {

const Point kOrigin(0.0, 0.0);
const Point kE1(1.0, 0.0);

Expectation numeric(std::string predicate, double expected, double actual, double tol, bool gated = true) {
  const bool pass = std::abs(actual - expected) <= tol;
  return {std::move(predicate), expected, actual, tol, pass, gated};
}

Expectation flag(std::string predicate, bool expected, bool actual, bool gated = true) {
  return {std::move(predicate), expected, actual, 0.0, expected == actual, gated};
}

// Orthogonal reflection across the line through a with unit direction u.
Point reflect(const Point& p, const Point& a, const Point& u) {
  const Point foot = a + u * dot(p - a, u);
  return foot * 2.0 - p;
}

double line_distance(const Point& p, const Point& a, const Point& u) { return std::abs(cross(u, p - a)); }

std::size_t components_at(const Region& region, int resolution) {
  return topology_check(rasterize(region, resolution)).resolved_components;
}

}  // namespace

bool Scenario::passed() const {
  return std::all_of(expectations.begin(), expectations.end(),
                     [](const Expectation& e) { return e.pass || !e.gated; });
}

const Expectation* Scenario::find(const std::string& predicate) const {
  for (const auto& e : expectations) {
    if (e.predicate == predicate) return &e;
  }
  return nullptr;
}

const Point* Scenario::point(const std::string& name) const {
  for (const auto& [k, p] : points) {
    if (k == name) return &p;
  }
  return nullptr;
}

Scenario two_puncture_sharpness(double M, int resolution) {
  const double threshold = std::log1p(std::numbers::sqrt2);
  if (!(M >= threshold - 1e-12)) {
    throw InvalidInput("two_puncture_sharpness: M must be at least log(1+sqrt 2)");
  }
  const Radius m(M);
  const double em = std::exp(M);
  const double c = 1.0 / (em * (2.0 - em));
  const double r2 = (em - 1.0) / (em * (em - 2.0));
  const Point center(c, 0.0);

  // Upper tangency point of the line from e_1 to circle(c, r2).
  const double L = 1.0 - c;
  const double t = std::sqrt(std::max(0.0, L * L - r2 * r2));
  const Point y = kE1 + Point(-t / L, r2 / L) * t;
  const Point u = (y - kE1) / distance(y, kE1);
  const Point z = reflect(kOrigin, kE1, u);
  const Domain g = Domain::punctured({kOrigin, z});

  std::vector<Expectation> ex;
  ex.push_back(numeric("tangency_length", (em - 1.0) / std::sqrt(em * (em - 2.0)), distance(y, kE1), 1e-12));
  ex.push_back(numeric("tangent_perpendicular_to_radius", 0.0, dot(y - center, u), 1e-12));
  const bool above = M > threshold + 1e-12;
  ex.push_back(flag("tangency_inside_outer_disk", true, distance(y, kE1) < em - 1.0, above));
  ex.push_back(numeric("reflection_equidistant", line_distance(kOrigin, kE1, u), line_distance(z, kE1, u), 1e-12));

  // The ball in R^2 \ {z} is the mirror image of the ball in R^2 \ {0}.
  const Domain g0 = Domain::punctured({kOrigin});
  const Domain gz = Domain::punctured({z});
  const double reach = 1.05 * (em - 1.0);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coord(-reach, reach);
  double mismatches = 0.0;
  for (int k = 0; k < 4000; ++k) {
    const Point p = kE1 + Point(coord(rng), coord(rng));
    const Point q = reflect(p, kE1, u);
    if (!g0.contains(p) || !gz.contains(q)) continue;
    const double a = j_distance(g0, kE1, p), b = j_distance(gz, kE1, q);
    if (std::abs(a - b) > 1e-12 * std::max(1.0, a)) mismatches += 1.0;
  }
  ex.push_back(numeric("mirror_mismatches", 0.0, mismatches, 0.0));

  const Topology topo = topology_check(rasterize(j_ball_region(g, kE1, m), resolution));
  ex.push_back(numeric("components", above ? 2.0 : 1.0, static_cast<double>(topo.resolved_components), 0.0));
  ex.push_back(numeric("grid_fragments", static_cast<double>(topo.components - topo.resolved_components),
                       static_cast<double>(topo.components - topo.resolved_components), 0.0, false));

  return Scenario{"two_puncture_sharpness",
                  "R^2 minus 0 and the reflection of 0 across the tangent line from e_1 to the hole circle",
                  g,
                  kE1,
                  m,
                  std::move(ex),
                  {{"c", center}, {"y", y}, {"z", z}}};
}

Scenario sphere_vs_closure(int resolution) {
  const Domain g = Domain::ball_union({Disk{kOrigin, 1.0}, Disk{kE1, 0.25}, Disk{Point(2.0, 0.0), 1.0}});
  const Radius m(std::log(3.0));
  const Point two(2.0, 0.0);
  std::vector<Expectation> ex;
  ex.push_back(numeric("j(0,e1)", std::log(5.0), j_distance(g, kOrigin, kE1), 1e-12));
  ex.push_back(numeric("j(0,2e1)", std::log(3.0), j_distance(g, kOrigin, two), 1e-12));

  const Region region = j_ball_region(g, kOrigin, m);
  const RegionGrid grid = rasterize(region, resolution);
  ex.push_back(numeric("ball_components", 1.0, static_cast<double>(topology_check(grid).resolved_components), 0.0));
  bool inside_unit = true;
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      if (grid.at(i, j) && norm(grid.cell_center(i, j)) >= 1.0) inside_unit = false;
    }
  }
  ex.push_back(flag("ball_inside_unit_disk", true, inside_unit));

  const SphereComponents sphere = sphere_components(region, default_sphere_band(region, grid.h), grid.h);
  ex.push_back(numeric("sphere_components", 2.0, static_cast<double>(sphere.components), 0.0));
  double nearest = std::numeric_limits<double>::infinity();
  for (const Point& p : sphere.isolated_points) nearest = std::min(nearest, distance(p, two));
  ex.push_back(flag("isolated_point_near_2e1", true, nearest <= 2.0 * grid.h));
  ex.push_back(flag("closure_equals_closed_ball", false, sphere.closure_equals_closed_ball));

  std::vector<std::pair<std::string, Point>> pts;
  for (const Point& p : sphere.isolated_points) pts.emplace_back("isolated", p);
  return Scenario{"sphere_vs_closure",
                  "union of B(0,1), B(e_1,1/4), B(2e_1,1); ball about 0 of radius log 3",
                  g,
                  kOrigin,
                  m,
                  std::move(ex),
                  std::move(pts)};
}

Scenario simply_connected_counterexample(double h, int resolution) {
  if (!(h > 0.0 && h < 1.0)) throw InvalidInput("simply_connected_counterexample: h must lie in (0, 1)");
  const Domain g = Domain::ball_union({Disk{kOrigin, 1.0}, Disk{kE1, h}, Disk{Point(2.0, 0.0), 1.0}});
  const Radius m(std::log(4.0));
  const Point two(2.0, 0.0);
  std::vector<Expectation> ex;
  ex.push_back(numeric("j(0,2e1)", std::log(3.0), j_distance(g, kOrigin, two), 1e-12));
  ex.push_back(flag("2e1_in_ball", true, in_j_ball(g, kOrigin, m, two)));
  ex.push_back(numeric("j(0,e1)", std::log1p(1.0 / h), j_distance(g, kOrigin, kE1), 1e-12));
  const bool thin = h < 1.0 / 3.0;
  ex.push_back(flag("e1_in_ball", !thin, in_j_ball(g, kOrigin, m, kE1)));

  const Region region = j_ball_region(g, kOrigin, m);
  const Topology fine_topo = topology_check(rasterize(region, resolution));
  const auto fine = static_cast<double>(fine_topo.resolved_components);
  const auto coarse = static_cast<double>(components_at(region, resolution / 2));
  ex.push_back(flag("simply_connected", fine_topo.simply_connected, fine_topo.simply_connected, false));
  if (thin) {
    bool line_clear = true;
    for (int k = 0; k <= 2000; ++k) {
      const Point p(1.0, h * (2.0 * k / 2000.0 - 1.0));
      if (in_j_ball(g, kOrigin, m, p)) line_clear = false;
    }
    ex.push_back(flag("line_re_1_outside_ball", true, line_clear));
    ex.push_back(flag("disconnected", true, fine >= 2.0));
    ex.push_back(flag("disconnected_half_resolution", true, coarse >= 2.0));
  } else {
    ex.push_back(numeric("components", 1.0, fine, 0.0, false));
    ex.push_back(numeric("components_half_resolution", 1.0, coarse, 0.0, false));
  }
  return Scenario{"simply_connected_counterexample",
                  "union of B(0,1), B(e_1,h), B(2e_1,1); ball about 0 of radius log 4",
                  g,
                  kOrigin,
                  m,
                  std::move(ex),
                  {}};
}

Scenario qh_nonintersection_demo(double h_grid) {
  const Domain g = Domain::punctured({kOrigin, kE1});
  const Point x(0.25, 0.0);
  const Radius m(1.0);
  const double e = std::numbers::e;
  const Point y(1.0 - 1.0 / e, 0.0);
  const Point z(1.0 - 3.0 / (4.0 * e), 0.0);
  // Strictly inside both once-punctured balls, beyond y on the axis.
  const Point w((y.x() + std::min(e / 4.0, z.x())) / 2.0, 0.0);

  std::vector<Expectation> ex;
  ex.push_back(numeric("k(x,y)_two_leg", 1.0, std::log(0.5 / 0.25) + std::log(0.5 / (1.0 - y.x())), 1e-12));
  const double ky = qh_distance(g, x, y, h_grid);
  ex.push_back(numeric("k(x,y)", 1.0, ky, 0.01));
  ex.push_back(numeric("|y|", 0.632, norm(y), 5e-4));
  ex.push_back(numeric("|z|", 0.724, norm(z), 5e-4));
  ex.push_back(numeric("k_minus_e1(x,z)", 1.0, qh_punctured_closed_form(kE1, x, z), 1e-12));
  // z sits outside the ball of R^2 \ {0}: log(|z| / |x|) > 1.
  ex.push_back(flag("z_in_D_minus_0", true, qh_punctured_closed_form(kOrigin, x, z) < 1.0, false));
  const double kz = qh_distance(g, x, z, h_grid);
  ex.push_back(flag("z_outside_D_G", true, kz > 1.0));

  ex.push_back(flag("w_in_D_minus_0", true, qh_punctured_closed_form(kOrigin, x, w) < 1.0));
  ex.push_back(flag("w_in_D_minus_e1", true, qh_punctured_closed_form(kE1, x, w) < 1.0));
  const double kw = qh_distance(g, x, w, h_grid);
  const double err = std::abs(ky - 1.0);
  ex.push_back(numeric("k(x,w)", kw, kw, 0.0, false));
  ex.push_back(flag("w_outside_D_G", true, kw - 1.0 > 5.0 * err));
  return Scenario{"qh_nonintersection_demo",
                  "R^2 minus 0 and e_1; quasihyperbolic balls about e_1/4 of radius 1",
                  g,
                  x,
                  m,
                  std::move(ex),
                  {{"y", y}, {"z", z}, {"w", w}}};
}

Scenario offcenter_starlikeness(double M, double eps, End end, std::size_t rays) {
  if (!(M > std::numbers::ln2)) throw InvalidInput("offcenter_starlikeness: M must exceed log 2");
  if (!(eps > 0.0)) throw InvalidInput("offcenter_starlikeness: eps must be positive");
  const Domain g = Domain::punctured({kOrigin});
  const Radius m(M);
  const Point z = end == End::Inner ? Point(std::exp(-M) + eps, 0.0) : Point(std::exp(M) - eps, 0.0);
  if (!in_j_ball(g, kE1, m, z)) throw InvalidInput("offcenter_starlikeness: eps too large, center outside the ball");
  const CheckReport rep = starlikeness_check(j_ball_region(g, kE1, m), z, Mode::Strict, rays, 1e-10, 1);
  std::vector<Expectation> ex;
  if (end == End::Inner) {
    ex.push_back(flag("starlike_about_center", false, rep.passed));
  } else {
    const double conjectured = std::log((3.0 + std::sqrt(5.0)) / 2.0);
    ex.push_back(flag("starlike_about_center", M < conjectured, rep.passed, false));
  }
  std::vector<std::pair<std::string, Point>> pts{{"center", z}};
  if (rep.witness) {
    for (const Point& p : rep.witness->points) pts.emplace_back("witness", p);
  }
  return Scenario{end == End::Inner ? "offcenter_starlikeness_inner" : "offcenter_starlikeness_outer",
                  "punctured plane, ball about e_1, starlikeness about a point near an end of the real diameter",
                  g,
                  kE1,
                  m,
                  std::move(ex),
                  std::move(pts)};
}

CheckReport finite_puncture_intersection(const std::vector<Point>& punctures, const Point& x, Radius m,
                                         std::size_t trials, std::uint64_t seed) {
  const Domain g = Domain::punctured(punctures);
  std::vector<Domain> singles;
  singles.reserve(punctures.size());
  for (const Point& p : punctures) singles.push_back(Domain::punctured({p}));
  const double reach = 1.5 * (std::exp(m.value()) - 1.0) * g.boundary_distance(x);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-reach, reach);
  CheckReport rep;
  rep.predicate = "finite_puncture_intersection";
  std::size_t mismatches = 0, inside = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Point y = x;
    for (std::size_t i = 0; i < y.dim(); ++i) y[i] += coord(rng);
    const bool lhs = in_j_ball(g, x, m, y);
    bool rhs = true;
    for (const Domain& s : singles) rhs = rhs && in_j_ball(s, x, m, y);
    inside += lhs ? 1 : 0;
    if (lhs != rhs) {
      ++mismatches;
      if (!rep.witness) rep.witness = Witness{"point", {x, y}, "membership differs from the intersection"};
    }
  }
  rep.passed = mismatches == 0;
  rep.samples_used = trials;
  rep.set("mismatches", static_cast<double>(mismatches));
  rep.set("inside", static_cast<double>(inside));
  return rep;
}

std::vector<std::string> names() {
  return {"two_puncture_sharpness",       "sphere_vs_closure",           "simply_connected_counterexample",
          "qh_nonintersection_demo",      "offcenter_starlikeness_inner", "offcenter_starlikeness_outer"};
}

Scenario by_name(const std::string& name) {
  if (name == "two_puncture_sharpness") return two_puncture_sharpness(std::log1p(std::numbers::sqrt2) + 0.1);
  if (name == "sphere_vs_closure") return sphere_vs_closure();
  if (name == "simply_connected_counterexample") return simply_connected_counterexample(0.25);
  if (name == "qh_nonintersection_demo") return qh_nonintersection_demo();
  if (name == "offcenter_starlikeness_inner") return offcenter_starlikeness(0.8, 1e-3, End::Inner);
  if (name == "offcenter_starlikeness_outer") return offcenter_starlikeness(0.9, 1e-2, End::Outer);
  throw InvalidInput("unknown scenario: " + name);
}

}  // namespace jball::gallery
