#pragma once

#include <cstddef>
#include <vector>

#include "jball/domain.hpp"
#include "jball/report.hpp"

namespace jball {

/// Radius M of a j-ball (or quasihyperbolic ball). Positive and finite.
class Radius {
 public:
  explicit Radius(double m);
  double value() const { return m_; }

 private:
  double m_;
};

/// log(1 + |x - y| / min(dx, dy)) from precomputed boundary distances.
double j_from_depths(double separation, double dx, double dy);

/// The distance-ratio metric j_G(x, y). Throws OutsideDomain if either point is outside G.
double j_distance(const Domain& domain, const Point& x, const Point& y);

/// y ∈ B_j(x, M): y ∈ G and j(x, y) < M. Throws OutsideDomain unless x ∈ G.
bool in_j_ball(const Domain& domain, const Point& x, Radius m, const Point& y);

struct AnnulusBounds {
  double inner_radius;  // (1 - e^-M) d(x)
  double outer_radius;  // (e^M - 1) d(x)
  double depth_min;     // e^-M d(x)
  double depth_max;     // e^M d(x)
};

/// Euclidean balls sandwiching B_j(x, M), and the range of d over the ball.
AnnulusBounds annulus_bounds(double dx, Radius m);

/// Radius log(1 + D/s), D = sup |x - z| over ∂G, of a j-ball containing
/// every y with d(y) > s. Bounded domains only; s ∈ (0, d(x)].
Radius exhaustion_radius(const Domain& domain, const Point& x, double s);

// ---------------------------------------------------------------------------
// Quasihyperbolic distance

struct QhOptions {
  /// Grid spacing; <= 0 picks 1/256 of the search window.
  double h = 0.0;
  /// Straighten the graph path into a near-geodesic polyline.
  bool refine = true;
};

struct QhResult {
  double distance = 0.0;        // best path integral found (refined when requested)
  double graph_distance = 0.0;  // shortest path in the grid graph
  double h = 0.0;
  std::size_t nodes = 0;
  std::vector<Point> path;
};

/// Numeric k_G(x, y) for planar domains: Dijkstra over a 16-neighbour grid
/// graph with Simpson edge weights, followed by polyline relaxation. The result
/// is the quasihyperbolic length of an explicit curve, so it bounds k_G from
/// above up to quadrature error. Throws ResolutionError if x and y are not
/// connected at this resolution.
QhResult qh_path(const Domain& domain, const Point& x, const Point& y, QhOptions opts = {});
double qh_distance(const Domain& domain, const Point& x, const Point& y, double h = 0.0);

/// Quasihyperbolic length of a polyline (Simpson rule per segment); +inf if a
/// segment leaves G.
double qh_polyline_length(const Domain& domain, const std::vector<Point>& path);

/// Exact k for R^2 minus one point: sqrt(θ² + log²(|x-p| / |y-p|)).
double qh_punctured_closed_form(const Point& puncture, const Point& x, const Point& y);

/// j ≤ k, and k ≤ j / (1 - s) whenever |x - y| < s d(x). Values reported:
/// j, k, bound, bound_applies, literal_bound_violated.
CheckReport comparison_check(const Domain& domain, const Point& x, const Point& y, double s,
                             double h = 0.0, double minorant_tol = 1e-6, double bound_tol = 0.01);

}  // namespace jball
