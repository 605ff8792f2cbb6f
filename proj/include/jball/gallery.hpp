#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "jball/ballgeom.hpp"
#include "jball/domain.hpp"
#include "jball/metric.hpp"
#include "jball/report.hpp"

namespace jball::gallery {

using Value = std::variant<bool, double>;

struct Expectation {
  std::string predicate;
  Value expected;
  Value actual;
  double tolerance = 0.0;
  bool pass = false;
  /// Non-gated expectations are observations: reported, never failing a scenario.
  bool gated = true;
};

/// A named example: domain, center, radius and the outcomes it should produce.
struct Scenario {
  std::string name;
  std::string description;
  Domain domain;
  Point x;
  Radius M;
  std::vector<Expectation> expectations;
  /// Named points of the construction (tangency point, reflected puncture, witnesses).
  std::vector<std::pair<std::string, Point>> points;

  bool passed() const;
  const Expectation* find(const std::string& predicate) const;
  const Point* point(const std::string& name) const;
};

/// R^2 \ {0, z} with z the reflection of 0 across the tangent line from e_1 to
/// the hole circle of B_j(e_1, M) in R^2 \ {0}. Requires M >= log(1+√2); the
/// ball splits into two pieces above the threshold and stays connected at it.
Scenario two_puncture_sharpness(double M, int resolution = kDefaultResolution);

/// B(0,1) ∪ B(e_1,1/4) ∪ B(2e_1,1), x = 0, M = log 3: connected ball whose
/// sphere has an isolated point at 2e_1.
Scenario sphere_vs_closure(int resolution = kDefaultResolution);

/// B(0,1) ∪ B(e_1,h) ∪ B(2e_1,1), x = 0, M = log 4. Disconnected for h < 1/3.
Scenario simply_connected_counterexample(double h, int resolution = kDefaultResolution);

/// R^2 \ {0, e_1}, x = e_1/4, M = 1: the intersection of the quasihyperbolic
/// balls of the two once-punctured planes is not contained in the ball of G.
/// `h_grid` <= 0 picks a default spacing.
Scenario qh_nonintersection_demo(double h_grid = 0.0);

enum class End { Inner, Outer };

/// Punctured plane, x = e_1, ball checked for starlikeness about a point near
/// the inner or outer end of its real diameter.
Scenario offcenter_starlikeness(double M, double eps, End end, std::size_t rays = 4096);

/// Membership in the ball of R^n \ {y_1..y_m} against the conjunction over the
/// once-punctured spaces, for random y. Values reported: mismatches, inside.
CheckReport finite_puncture_intersection(const std::vector<Point>& punctures, const Point& x, Radius m,
                                         std::size_t trials = 10000, std::uint64_t seed = 1);

/// Names accepted by `by_name`.
std::vector<std::string> names();

/// Runs a scenario with its default parameters. Throws InvalidInput on an unknown name.
Scenario by_name(const std::string& name);

}  // namespace jball::gallery
