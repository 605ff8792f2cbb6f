#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "jball/generators.hpp"
#include "jball/punctured.hpp"

using namespace jball;
using namespace jball::punctured;

namespace {

const Point O(0.0, 0.0);
const Point E1(1.0, 0.0);

// Literal membership from the definition of j in R^2 \ {0}.
bool direct(double m, const Point& z) {
  if (norm(z) == 0.0) return false;
  return std::log1p(distance(z, E1) / std::min(1.0, norm(z))) < m;
}

}  // namespace

TEST(Decomposition, HalfLogTwoWorkedExample) {
  const auto d = disk_decomposition(Radius(0.5));
  EXPECT_EQ(d.kind, InnerKind::Cap);
  EXPECT_NEAR(d.outer.radius, 0.64872, 1e-5);
  EXPECT_EQ(d.outer.center, E1);
  EXPECT_NEAR(d.c, 1.72660, 1e-4);
  EXPECT_NEAR(d.s, 1.12008, 1e-4);
  EXPECT_NEAR(d.c, 1.7266364545371, 1e-12);
  EXPECT_NEAR(d.s, 1.1201057948245, 1e-12);
  EXPECT_NEAR(d.c - d.s, std::exp(-0.5), 1e-12);
  EXPECT_NEAR(d.c + d.s, 1.0 / (2.0 - std::exp(0.5)), 1e-12);
  EXPECT_NEAR(d.inner.center.x(), d.c, 0.0);
  EXPECT_NEAR(d.inner.radius, d.s, 0.0);
}

TEST(Decomposition, BranchesByRadius) {
  EXPECT_EQ(disk_decomposition(Radius(std::numbers::ln2)).kind, InnerKind::HalfPlaneCut);
  EXPECT_EQ(disk_decomposition(Radius(std::numbers::ln2 - 1e-6)).kind, InnerKind::Cap);
  EXPECT_EQ(disk_decomposition(Radius(std::numbers::ln2 + 1e-6)).kind, InnerKind::Hole);
  const auto d = disk_decomposition(Radius(std::log(3.0)));
  EXPECT_EQ(d.kind, InnerKind::Hole);
  EXPECT_NEAR(d.c, -1.0 / 3.0, 1e-12);
  EXPECT_NEAR(d.s, 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(d.outer.radius, 2.0, 1e-12);
}

TEST(Decomposition, HalfPlaneCutIsTheLineHalf) {
  const auto d = disk_decomposition(Radius(std::numbers::ln2));
  EXPECT_TRUE(d.contains(Point(0.51, 0.0)));
  EXPECT_FALSE(d.contains(Point(0.49, 0.0)));
  EXPECT_FALSE(d.contains(Point(0.5, 0.3)));
  EXPECT_TRUE(d.contains(Point(1.5, 0.5)));
}

TEST(Decomposition, AgreesWithDefinition) {
  gen::Rng rng(51);
  for (double m : {0.1, 0.5, 0.69, std::numbers::ln2, 0.7, 0.88, 1.0, std::log(3.0), 1.5, 2.5}) {
    const auto d = disk_decomposition(Radius(m));
    const double r = d.outer.radius * 1.2;
    int checked = 0;
    for (int k = 0; k < 20000; ++k) {
      const Point z(1.0 + gen::uniform(rng, -r, r), gen::uniform(rng, -r, r));
      if (d.boundary_margin(z) < 1e-9) continue;
      ++checked;
      ASSERT_EQ(d.contains(z), direct(m, z)) << "M=" << m << " z=" << z.to_string();
    }
    EXPECT_GT(checked, 19000);
  }
}

TEST(Transport, WorkedExamples) {
  const Similarity t = canonical_transport(Point(1.0, 1.0), Point(2.0, 1.0));
  EXPECT_NEAR(distance(t.apply(Point(1.0, 1.0)), O), 0.0, 1e-15);
  EXPECT_NEAR(distance(t.apply(Point(2.0, 1.0)), E1), 0.0, 1e-15);
  EXPECT_NEAR(distance(t.apply(Point(3.0, 1.0)), Point(2.0, 0.0)), 0.0, 1e-15);
  const Similarity u = canonical_transport(O, Point(0.0, 2.0));
  EXPECT_NEAR(distance(u.apply(Point(0.0, 2.0)), E1), 0.0, 1e-15);
  EXPECT_NEAR(distance(u.apply(Point(-2.0, 0.0)), Point(0.0, 1.0)), 0.0, 1e-15);
  EXPECT_NEAR(u.scale(), 0.5, 1e-15);
  EXPECT_NEAR(u.rotation(), -std::numbers::pi / 2.0, 1e-15);
  EXPECT_THROW(canonical_transport(O, O), InvalidInput);
}

TEST(Transport, RoundTripAndCommutation) {
  gen::Rng rng(52);
  for (int k = 0; k < 1000; ++k) {
    const Point p(gen::uniform(rng, -3.0, 3.0), gen::uniform(rng, -3.0, 3.0));
    Point x(gen::uniform(rng, -3.0, 3.0), gen::uniform(rng, -3.0, 3.0));
    if (distance(p, x) < 0.05) continue;
    const Point y(gen::uniform(rng, -4.0, 4.0), gen::uniform(rng, -4.0, 4.0));
    const double m = gen::uniform(rng, 0.05, 2.5);
    const Similarity t(p, x);
    EXPECT_LT(distance(t.invert(t.apply(y)), y), 1e-12 * (1.0 + norm(y)));
    const Domain g = Domain::punctured({p});
    if (y == p) continue;
    // Skip points whose canonical image is within rounding of the boundary.
    if (disk_decomposition(Radius(m)).boundary_margin(t.apply(y)) < 1e-9) continue;
    EXPECT_EQ(decomposition_contains(p, x, Radius(m), y), in_j_ball(g, x, Radius(m), y));
  }
}

TEST(Thresholds, Values) {
  const Thresholds t = thresholds();
  EXPECT_NEAR(t.j_convex, 0.693147, 1e-6);
  EXPECT_EQ(t.j_strictly_convex_sup, t.j_convex);
  EXPECT_NEAR(t.j_starlike, 0.881374, 1e-6);
  EXPECT_NEAR(t.annulus_onset, 1.098612, 1e-6);
  EXPECT_EQ(t.qh_convex, 1.0);
  EXPECT_NEAR(t.qh_starlike, 2.83297, 1e-5);
}

TEST(Thresholds, TangencyResidualSignChange) {
  EXPECT_NEAR(tangency_residual(Radius(std::numbers::ln2)), -1.0, 1e-12);
  EXPECT_NEAR(tangency_residual(Radius(std::log(3.0))), 2.0, 1e-12);
  EXPECT_NEAR(tangency_residual(Radius(thresholds().j_starlike)), 0.0, 1e-12);
  EXPECT_LT(tangency_residual(Radius(thresholds().j_starlike - 1e-6)), 0.0);
  EXPECT_GT(tangency_residual(Radius(thresholds().j_starlike + 1e-6)), 0.0);
  EXPECT_NEAR(perpendicularity_residual(Radius(thresholds().j_starlike)), 0.0, 1e-12);
}

TEST(Thresholds, HoleInsideOuterDiskFromLogThree) {
  for (double m : {std::log(3.0), 1.2, 1.5, 2.0, 3.0, 5.0}) {
    const auto d = disk_decomposition(Radius(m));
    ASSERT_EQ(d.kind, InnerKind::Hole);
    // Inner circle is internally contained in the outer disk.
    EXPECT_LE(distance(d.inner.center, d.outer.center) + d.inner.radius, d.outer.radius + 1e-12) << m;
  }
  const auto below = disk_decomposition(Radius(std::log(3.0) - 0.01));
  EXPECT_GT(distance(below.inner.center, below.outer.center) + below.inner.radius, below.outer.radius);
}
