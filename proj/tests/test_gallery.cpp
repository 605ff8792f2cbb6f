#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <variant>

#include "jball/gallery.hpp"
#include "jball/generators.hpp"

using namespace jball;
using namespace jball::gallery;

namespace {

const double kStar = std::log1p(std::numbers::sqrt2);

bool as_bool(const Value& v) { return std::get<bool>(v); }
double as_double(const Value& v) { return std::get<double>(v); }

void expect_all_gated_pass(const Scenario& s) {
  for (const Expectation& e : s.expectations) {
    if (e.gated) EXPECT_TRUE(e.pass) << s.name << ": " << e.predicate;
  }
  EXPECT_TRUE(s.passed()) << s.name;
}

}  // namespace

TEST(Gallery, EveryNamedScenarioPasses) {
  for (const std::string& name : names()) {
    const Scenario s = by_name(name);
    EXPECT_EQ(s.name, name);
    expect_all_gated_pass(s);
  }
  EXPECT_THROW(by_name("no_such_scenario"), InvalidInput);
}

TEST(Gallery, TwoPunctureConstruction) {
  const double m = kStar + 0.1;
  const Scenario s = two_puncture_sharpness(m, 1024);
  expect_all_gated_pass(s);
  const Point* y = s.point("y");
  const Point* z = s.point("z");
  ASSERT_NE(y, nullptr);
  ASSERT_NE(z, nullptr);
  // Hand computation: the tangent from e1 touches the hole circle where the
  // radius is perpendicular, so |y - e1|² = |e1 - c|² - s².
  const double em = std::exp(m);
  const double c = 1.0 / (em * (2.0 - em)), r = (em - 1.0) / std::abs(em * (2.0 - em));
  EXPECT_NEAR(distance(*y, Point(1.0, 0.0)), std::sqrt((1.0 - c) * (1.0 - c) - r * r), 1e-12);
  EXPECT_NEAR(distance(*y, Point(c, 0.0)), r, 1e-12);
  // z mirrors 0, so both punctures sit at the same distance from y.
  EXPECT_NEAR(norm(*y), distance(*y, *z), 1e-12);
  EXPECT_EQ(as_double(s.find("components")->actual), 2.0);
  EXPECT_THROW(two_puncture_sharpness(kStar - 0.01), InvalidInput);
}

TEST(Gallery, TwoPunctureThresholdStaysConnected) {
  const Scenario s = two_puncture_sharpness(kStar, 1024);
  expect_all_gated_pass(s);
  EXPECT_EQ(as_double(s.find("components")->actual), 1.0);
}

TEST(Gallery, TwoPunctureHalfResolutionAgrees) {
  for (double m : {kStar + 0.1, kStar + 0.4}) {
    const Scenario a = two_puncture_sharpness(m, 1024), b = two_puncture_sharpness(m, 512);
    EXPECT_EQ(as_double(a.find("components")->actual), as_double(b.find("components")->actual)) << m;
  }
}

TEST(Gallery, SphereVsClosure) {
  const Scenario s = sphere_vs_closure(1024);
  expect_all_gated_pass(s);
  EXPECT_NEAR(as_double(s.find("sphere_components")->actual), 2.0, 0.0);
  EXPECT_FALSE(as_bool(s.find("closure_equals_closed_ball")->actual));
  EXPECT_EQ(sphere_vs_closure(512).find("sphere_components")->actual, s.find("sphere_components")->actual);
}

TEST(Gallery, SimplyConnectedCounterexample) {
  const Scenario quarter = simply_connected_counterexample(0.25, 1024);
  expect_all_gated_pass(quarter);
  EXPECT_FALSE(as_bool(quarter.find("e1_in_ball")->actual));
  EXPECT_NEAR(as_double(quarter.find("j(0,e1)")->actual), std::log(5.0), 1e-12);
  const Scenario half = simply_connected_counterexample(0.5, 1024);
  expect_all_gated_pass(half);
  EXPECT_TRUE(as_bool(half.find("e1_in_ball")->actual));
  EXPECT_NEAR(as_double(half.find("j(0,e1)")->actual), std::log(3.0), 1e-12);
}

TEST(Gallery, QhNonintersection) {
  const Scenario s = qh_nonintersection_demo();
  expect_all_gated_pass(s);
  const Point* w = s.point("w");
  ASSERT_NE(w, nullptr);
  // Closed forms in the once-punctured planes, radial path.
  const Point x(0.25, 0.0);
  EXPECT_LT(std::log(norm(*w) / 0.25), 1.0);
  EXPECT_LT(std::log((1.0 - 0.25) / (1.0 - norm(*w))), 1.0);
  EXPECT_NEAR(norm(*s.point("y")), 1.0 - 1.0 / std::numbers::e, 1e-15);
}

TEST(Gallery, OffCenterStarlikeness) {
  const Scenario inner = offcenter_starlikeness(0.8, 1e-3, End::Inner);
  expect_all_gated_pass(inner);
  const Scenario outer = offcenter_starlikeness(0.9, 1e-2, End::Outer);
  expect_all_gated_pass(outer);
  EXPECT_EQ(outer.find("starlike_about_center")->actual, outer.find("starlike_about_center")->expected);
}

TEST(Gallery, FinitePunctureIntersection) {
  gen::Rng rng(81);
  for (std::size_t m : {1u, 2u, 6u}) {
    for (std::size_t dim : {2u, 3u}) {
      const Domain g = gen::random_punctured(rng, dim, m);
      const Point x = gen::sample_interior(g, rng);
      const auto& ps = std::get<PuncturedSpace>(g.variant()).punctures;
      const CheckReport r = finite_puncture_intersection(ps, x, Radius(gen::uniform(rng, 0.2, 2.0)), 10000, m);
      EXPECT_TRUE(r.passed);
      EXPECT_EQ(*r.get("mismatches"), 0.0);
      EXPECT_GT(*r.get("inside"), 0.0);
    }
  }
}
