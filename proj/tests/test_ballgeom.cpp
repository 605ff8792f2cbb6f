#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "jball/ballgeom.hpp"
#include "jball/generators.hpp"
#include "jball/punctured.hpp"

using namespace jball;

namespace {

const Point O(0.0, 0.0);
const Point E1(1.0, 0.0);
const double kLn2 = std::numbers::ln2;
const double kStar = std::log1p(std::numbers::sqrt2);

Domain plane() { return Domain::punctured({O}); }
Domain three_disks() { return Domain::ball_union({Disk{O, 1.0}, Disk{E1, 0.25}, Disk{Point(2.0, 0.0), 1.0}}); }

// Area of the intersection of two disks at center distance d.
double lens_area(double r1, double r2, double d) {
  if (d >= r1 + r2) return 0.0;
  if (d <= std::abs(r1 - r2)) return std::numbers::pi * std::min(r1, r2) * std::min(r1, r2);
  const double a1 = std::acos((d * d + r1 * r1 - r2 * r2) / (2.0 * d * r1));
  const double a2 = std::acos((d * d + r2 * r2 - r1 * r1) / (2.0 * d * r2));
  return r1 * r1 * (a1 - std::sin(2.0 * a1) / 2.0) + r2 * r2 * (a2 - std::sin(2.0 * a2) / 2.0);
}

void expect_sound(const Region& r, const CheckReport& rep) {
  ASSERT_FALSE(rep.passed);
  ASSERT_TRUE(rep.witness.has_value());
  const Witness& w = *rep.witness;
  ASSERT_EQ(w.points.size(), 3u);
  if (w.kind == "chord" || w.kind == "segment" || w.kind == "ray_reentry") {
    EXPECT_TRUE(r.contains(w.points[0]));
    if (w.kind == "ray_reentry") {
      EXPECT_FALSE(r.contains(w.points[1]));
      EXPECT_TRUE(r.contains(w.points[2]));
      // The outside point lies between center and the re-entry point.
      EXPECT_LT(distance(w.points[0], w.points[1]), distance(w.points[0], w.points[2]));
    } else {
      EXPECT_TRUE(r.contains(w.points[1]));
      EXPECT_FALSE(r.contains(w.points[2]));
    }
  } else {
    EXPECT_EQ(w.kind, "flat_chord");
    EXPECT_FALSE(r.contains(w.points[2]));
  }
}

}  // namespace

TEST(ExtractRegion, AreaMatchesAnalyticLens) {
  const auto d = punctured::disk_decomposition(Radius(0.5));
  const double h = d.outer.radius / 512.0;
  const RegionGrid g = extract_region(plane(), E1, Radius(0.5), h);
  const double area = static_cast<double>(g.count()) * h * h;
  const double exact = lens_area(d.outer.radius, d.s, std::abs(d.c - 1.0));
  EXPECT_NEAR(area / exact, 1.0, 0.01);
}

TEST(ExtractRegion, CellsMatchMembership) {
  const Domain dom = plane();
  const RegionGrid g = extract_region(dom, E1, Radius(1.3), 0.02);
  for (int j = 0; j < g.ny; j += 3) {
    for (int i = 0; i < g.nx; i += 3) {
      ASSERT_EQ(g.at(i, j), in_j_ball(dom, E1, Radius(1.3), g.cell_center(i, j)));
    }
  }
  // The outer Euclidean bound fits in the box.
  const double outer = std::exp(1.3) - 1.0;
  EXPECT_LE(g.bbox.lo.x(), 1.0 - outer);
  EXPECT_GE(g.bbox.hi.y(), outer);
}

TEST(ExtractRegion, TinyBallIsDisk) {
  gen::Rng rng(61);
  for (int k = 0; k < 5; ++k) {
    const Domain dom = gen::random_domain(rng);
    if (dom.dim() != 2) continue;
    const Point x = gen::sample_interior(dom, rng);
    const double dx = dom.boundary_distance(x);
    const Radius m(0.01);
    const auto bounds = annulus_bounds(dx, m);
    const RegionGrid g = extract_region(dom, x, m, bounds.outer_radius / 128.0);
    EXPECT_EQ(topology_check(g).components, 1u);
    for (int j = 0; j < g.ny; ++j) {
      for (int i = 0; i < g.nx; ++i) {
        const double r = distance(g.cell_center(i, j), x);
        if (g.at(i, j)) EXPECT_LT(r, bounds.outer_radius);
        if (r < bounds.inner_radius) EXPECT_TRUE(g.at(i, j));
      }
    }
  }
}

TEST(ExtractRegion, ThreeDiskStaysInUnitDisk) {
  const Domain dom = three_disks();
  const RegionGrid g = extract_region(dom, O, Radius(std::log(3.0) - 0.01), 1.0 / 256.0);
  std::size_t inside = 0;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      if (!g.at(i, j)) continue;
      ++inside;
      EXPECT_LT(norm(g.cell_center(i, j)), 1.0);
    }
  }
  EXPECT_GT(inside, 0u);
}

TEST(ExtractRegion, Errors) {
  EXPECT_THROW(extract_region(plane(), E1, Radius(0.5), 0.1), ResolutionError);
  EXPECT_THROW(extract_region(plane(), O, Radius(0.5), 0.001), OutsideDomain);
}

TEST(TraceBoundary, LoopCounts) {
  const RegionGrid a = extract_region(plane(), E1, Radius(0.5), 0.65 / 256.0);
  EXPECT_EQ(trace_boundary(a).size(), 1u);
  const double mb = std::log(3.0) + 0.2;
  const RegionGrid b = extract_region(plane(), E1, Radius(mb), (std::exp(mb) - 1.0) / 256.0);
  EXPECT_EQ(trace_boundary(b).size(), 2u);
  const RegionGrid c = extract_region(plane(), E1, Radius(0.01), (std::exp(0.01) - 1.0) / 128.0);
  const auto loops = trace_boundary(c);
  ASSERT_EQ(loops.size(), 1u);
  const double rin = 1.0 - std::exp(-0.01), rout = std::exp(0.01) - 1.0;
  for (const Point& v : loops[0]) {
    EXPECT_GT(distance(v, E1), rin - 2.0 * c.h);
    EXPECT_LT(distance(v, E1), rout + 2.0 * c.h);
  }
}

TEST(TraceBoundary, VerticesNearLevelSet) {
  const Domain dom = plane();
  for (double m : {0.3, 0.8, 1.5}) {
    const Region r = j_ball_region(dom, E1, Radius(m));
    const RegionGrid g = rasterize(r, 512);
    // |grad j| <= e^M / d over the band where d >= e^-M.
    const double grad = std::exp(2.0 * m) * 2.0;
    double worst = 0.0;
    for (const auto& loop : trace_boundary(g)) {
      for (const Point& v : loop) worst = std::max(worst, std::abs(j_distance(dom, E1, v) - m));
    }
    EXPECT_LT(worst / g.h, 4.0 * grad) << m;
  }
}

TEST(TraceBoundary, EmptyRegionThrows) {
  Region r{[](const Point&) { return 1.0; }, 0.0, O, Box{Point(-1.0, -1.0), Point(1.0, 1.0)}};
  EXPECT_THROW(trace_boundary(rasterize(r, 64)), InvalidInput);
}

TEST(Convexity, WorkedExamples) {
  const Domain dom = plane();
  const Region at = j_ball_region(dom, E1, Radius(kLn2));
  EXPECT_TRUE(convexity_check(at, Mode::NonStrict, 100000, 1e-9, 1).passed);
  const Region above = j_ball_region(dom, E1, Radius(kLn2 + 0.05));
  const CheckReport fail = convexity_check(above, Mode::NonStrict, 100000, 1e-9, 1);
  expect_sound(above, fail);
  const CheckReport strict = convexity_check(at, Mode::Strict, 20000, 1e-9, 1);
  expect_sound(at, strict);
  EXPECT_TRUE(convexity_check(j_ball_region(dom, E1, Radius(kLn2 - 0.01)), Mode::Strict, 20000, 1e-9, 1).passed);
}

TEST(Starlikeness, WorkedExamples) {
  const Domain dom = plane();
  const Region at = j_ball_region(dom, E1, Radius(kStar));
  EXPECT_TRUE(starlikeness_check(at, E1, Mode::Strict, 4096, 0.0, 1).passed);
  const Region above = j_ball_region(dom, E1, Radius(kStar + 0.05));
  const CheckReport fail = starlikeness_check(above, E1, Mode::Strict, 4096, 0.0, 1);
  expect_sound(above, fail);
  // Re-entry near the tangent direction, at angle about ± arccos(e^-M) from the axis.
  const double theta = std::remainder(*fail.get("reentry_angle"), 2.0 * std::numbers::pi);
  EXPECT_GT(std::abs(theta), std::numbers::pi / 2.0);

  const double m = kLn2 + 0.1;
  const Region r = j_ball_region(dom, E1, Radius(m));
  const Point z(std::exp(-m) + 0.001, 0.0);
  expect_sound(r, starlikeness_check(r, z, Mode::Strict, 4096, 0.0, 1));
  EXPECT_THROW(starlikeness_check(r, Point(5.0, 0.0), Mode::Strict, 16, 0.0, 1), InvalidInput);
}

TEST(Topology, WorkedExamples) {
  const Topology a = topology_check(rasterize(j_ball_region(plane(), E1, Radius(0.5)), 512));
  EXPECT_EQ(a.components, 1u);
  EXPECT_TRUE(a.simply_connected);
  const Topology b = topology_check(rasterize(j_ball_region(plane(), E1, Radius(std::log(3.0) + 0.2)), 512));
  EXPECT_EQ(b.components, 1u);
  EXPECT_FALSE(b.simply_connected);
}

TEST(Topology, StableUnderRefinement) {
  for (double m : {0.5, 0.8, 1.0, 1.3, 2.0}) {
    const Region r = j_ball_region(plane(), E1, Radius(m));
    const Topology a = topology_check(rasterize(r, 512));
    const Topology b = topology_check(rasterize(r, 1024));
    EXPECT_EQ(a.resolved_components, b.resolved_components) << m;
    EXPECT_EQ(a.simply_connected, b.simply_connected) << m;
    EXPECT_EQ(a.simply_connected, m <= std::log(3.0)) << m;
  }
}

TEST(Sphere, WorkedExamples) {
  const Domain u = three_disks();
  const double h = 1.0 / 256.0;
  const Region ru = j_ball_region(u, O, Radius(std::log(3.0)));
  const SphereComponents s = sphere_components(ru, default_sphere_band(ru, h), h);
  EXPECT_EQ(s.components, 2u);
  ASSERT_EQ(s.isolated_points.size(), 1u);
  EXPECT_LT(distance(s.isolated_points[0], Point(2.0, 0.0)), 2.0 / 256.0);
  EXPECT_FALSE(s.closure_equals_closed_ball);

  const Region rp = j_ball_region(plane(), E1, Radius(0.5));
  const SphereComponents p = sphere_components(rp, default_sphere_band(rp, 0.65 / 256.0), 0.65 / 256.0);
  EXPECT_EQ(p.components, 1u);
  EXPECT_TRUE(p.isolated_points.empty());
  EXPECT_TRUE(p.closure_equals_closed_ball);
}

TEST(PredicateSweep, AgreesWithThresholds) {
  const Domain dom = plane();
  for (double m = 0.3; m < 1.6; m += 0.07) {
    const Region r = j_ball_region(dom, E1, Radius(m));
    if (std::abs(m - kLn2) > 1e-3) {
      const CheckReport c = convexity_check(r, Mode::NonStrict, 20000, 1e-9, 7);
      EXPECT_EQ(c.passed, m < kLn2) << m;
      if (!c.passed) expect_sound(r, c);
    }
    if (std::abs(m - kStar) > 1e-3) {
      const CheckReport s = starlikeness_check(r, E1, Mode::Strict, 1024, 0.0, 7);
      EXPECT_EQ(s.passed, m < kStar) << m;
      if (!s.passed) expect_sound(r, s);
    }
  }
}

TEST(PredicateSweep, ConvexDomainsGiveConvexBalls) {
  gen::Rng rng(62);
  for (int k = 0; k < 4; ++k) {
    const Domain dom = gen::random_convex_polygon(rng, 6);
    const Point x = gen::sample_interior(dom, rng);
    const Region r = j_ball_region(dom, x, Radius(gen::uniform(rng, 0.3, 2.5)));
    EXPECT_TRUE(convexity_check(r, Mode::NonStrict, 5000, 1e-9, k).passed);
  }
}
