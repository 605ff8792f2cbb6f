#include <gtest/gtest.h>

#include <cmath>

#include "jball/generators.hpp"
#include "jball/geodesics.hpp"
#include "jball/metric.hpp"

using namespace jball;
using namespace jball::geodesics;

namespace {

const Point O(0.0, 0.0);
const Point E1(1.0, 0.0);
const Point E2(0.0, 1.0);

}  // namespace

TEST(TriangleDefect, WorkedExamples) {
  const Domain g = Domain::punctured({O});
  EXPECT_NEAR(triangle_defect(g, E1, Point(2.0, 0.0), Point(3.0, 0.0)), 0.0, 1e-15);
  // log 2 + log(1 + sqrt 10) - log 3, from the closed-form depths.
  const double expected = std::log1p(std::sqrt(2.0)) + std::log1p(std::sqrt(10.0)) - std::log(3.0);
  EXPECT_NEAR(triangle_defect(g, E1, E2, Point(3.0, 0.0)), expected, 1e-14);
  EXPECT_GT(triangle_defect(g, E1, E2, Point(3.0, 0.0)), 1.0);
  EXPECT_EQ(triangle_defect(g, E1, E1, Point(3.0, 0.0)), 0.0);
  EXPECT_THROW(triangle_defect(g, E1, O, E2), OutsideDomain);
}

TEST(TriangleDefect, NonnegativeOnRandomTriples) {
  gen::Rng rng(71);
  double worst = 0.0;
  for (int dom = 0; dom < 100; ++dom) {
    const Domain g = gen::random_domain(rng);
    for (int k = 0; k < 1000; ++k) {
      const Point x = gen::sample_interior(g, rng), y = gen::sample_interior(g, rng), z = gen::sample_interior(g, rng);
      worst = std::min(worst, triangle_defect(g, x, y, z));
    }
  }
  EXPECT_GE(worst, -1e-12);
}

TEST(EqualityWitnesses, WorkedExamples) {
  const Domain g = Domain::punctured({O});
  const EqualityScan a = equality_witnesses(g, E1, Point(3.0, 0.0), 1e-12);
  EXPECT_EQ(a.witnesses.size(), static_cast<std::size_t>(kSegmentSamples));
  EXPECT_TRUE(a.uncertified.empty());
  for (const auto& [y, c] : a.witnesses) {
    EXPECT_EQ(c.collinear_with, O);
    EXPECT_TRUE(c.segment_ok);
    EXPECT_TRUE(c.depth_ordering);
    EXPECT_LT(c.defect, 1e-12);
  }
  const EqualityScan b = equality_witnesses(g, E1, E1 + E2, 1e-12);
  EXPECT_TRUE(b.witnesses.empty());
  EXPECT_GT(b.min_defect, 0.0);
  const EqualityScan c = equality_witnesses(Domain::punctured({O, Point(4.0, 0.0)}), E1, Point(3.0, 0.0), 1e-12);
  EXPECT_TRUE(c.witnesses.empty());
  EXPECT_GT(c.min_defect, 1e-6);
}

TEST(EqualityWitnesses, ConverseOnCollinearConfigurations) {
  gen::Rng rng(72);
  for (int k = 0; k < 200; ++k) {
    const Point p(gen::uniform(rng, -2.0, 2.0), gen::uniform(rng, -2.0, 2.0));
    const double theta = gen::uniform(rng, 0.0, 6.283185307179586);
    const Point dir(std::cos(theta), std::sin(theta));
    const double r1 = gen::uniform(rng, 0.1, 1.0), r2 = r1 + gen::uniform(rng, 0.1, 2.0);
    // The far endpoint must not get closer to another puncture.
    const Domain g = Domain::punctured({p, p - dir * 50.0});
    const EqualityScan s = equality_witnesses(g, p + dir * r1, p + dir * r2, 1e-12);
    EXPECT_EQ(s.witnesses.size(), static_cast<std::size_t>(kSegmentSamples));
    EXPECT_TRUE(s.uncertified.empty());
  }
}

TEST(EqualityWitnesses, SoundnessOnRandomPairs) {
  gen::Rng rng(73);
  for (int dom = 0; dom < 100; ++dom) {
    const Domain g = gen::random_domain(rng);
    for (int k = 0; k < 20; ++k) {
      const Point x = gen::sample_interior(g, rng), z = gen::sample_interior(g, rng);
      if (x == z) continue;
      const EqualityScan s = equality_witnesses(g, x, z, 1e-12);
      EXPECT_TRUE(s.uncertified.empty());
      for (const auto& [y, c] : s.witnesses) {
        EXPECT_TRUE(c.segment_ok);
        EXPECT_TRUE(c.depth_ordering);
      }
    }
  }
}

TEST(GeodesicExists, WorkedExamples) {
  const GeodesicVerdict a = geodesic_exists(Domain::punctured({O}), E1, Point(3.0, 0.0));
  EXPECT_TRUE(a.exists);
  ASSERT_TRUE(a.u.has_value());
  EXPECT_EQ(*a.u, O);
  EXPECT_FALSE(geodesic_exists(Domain::punctured({O}), E1, E2).exists);
  EXPECT_FALSE(geodesic_exists(Domain::punctured({O, Point(5.0, 0.0)}), E1, Point(4.0, 0.0)).exists);
  // Orientation does not matter.
  EXPECT_TRUE(geodesic_exists(Domain::punctured({O}), Point(3.0, 0.0), E1).exists);
}

TEST(GeodesicExists, UniquenessOffSegment) {
  const Domain g = Domain::punctured({O});
  const Point x = E1, y(3.0, 0.0);
  ASSERT_TRUE(geodesic_exists(g, x, y).exists);
  gen::Rng rng(74);
  for (int k = 0; k < 20000; ++k) {
    const Point w(gen::uniform(rng, -1.0, 5.0), gen::uniform(rng, -3.0, 3.0));
    if (std::abs(w.y()) < 1e-3 || norm(w) == 0.0) continue;
    EXPECT_GT(triangle_defect(g, x, w, y), 1e-9);
  }
}

TEST(NoGeodesicPair, WorkedExamples) {
  const Domain a = Domain::punctured({O});
  const Domain b = Domain::punctured({O, Point(10.0, 0.0)});
  const Domain c = Domain::half_space(Point(0.0, -1.0), 0.0);
  for (const Domain& g : {a, b, c}) {
    const NoGeodesicPair p = no_geodesic_pair(g, 1);
    EXPECT_TRUE(g.contains(p.x));
    EXPECT_TRUE(g.contains(p.y));
    EXPECT_FALSE(geodesic_exists(g, p.x, p.y).exists);
    EXPECT_GT(p.min_defect, 0.0);
    // Midpoint check against the returned floor.
    EXPECT_GE(triangle_defect(g, p.x, lerp(p.x, p.y, 0.5), p.y), p.min_defect - 1e-15);
  }
}

TEST(NoGeodesicPair, Deterministic) {
  const Domain g = Domain::convex_polygon({Point(0.0, 0.0), Point(2.0, 0.0), Point(1.0, 1.5)});
  const NoGeodesicPair a = no_geodesic_pair(g, 9), b = no_geodesic_pair(g, 9);
  EXPECT_EQ(a.x, b.x);
  EXPECT_EQ(a.y, b.y);
  EXPECT_EQ(a.min_defect, b.min_defect);
}
