#pragma once

#include "jball/metric.hpp"
#include "jball/point.hpp"

namespace jball::punctured {

struct Circle {
  Point center;
  double radius = 0.0;
};

enum class InnerKind {
  Cap,           // M < log 2: the ball is the intersection of two disks
  HalfPlaneCut,  // M = log 2: the inner circle degenerates to the line Re z = 1/2
  Hole,          // M > log 2: a disk is removed from the outer disk
};

/// Exact shape of B_j(e_1, M) in R^2 \ {0}:
/// { |z - 1| < e^M - 1 } ∩ { |z - 1| < (e^M - 1) |z| }, the second set being
/// a disk, a half-plane or the exterior of a disk.
struct DiskDecomposition {
  double M = 0.0;
  Circle outer;
  InnerKind kind = InnerKind::Cap;
  /// Inner circle for Cap and Hole; unused for HalfPlaneCut.
  Circle inner;
  /// Signed real center c = 1 / (e^M (2 - e^M)) and radius s = (e^M - 1) / |e^M (2 - e^M)|.
  double c = 0.0;
  double s = 0.0;

  /// Open-set membership of z in the decomposed ball.
  bool contains(const Point& z) const;
  /// Smallest distance of z to the circles/line making up the boundary; used
  /// to skip points whose membership is numerically undecidable.
  double boundary_margin(const Point& z) const;
};

/// |e^M - 2| below this routes to the HalfPlaneCut branch.
inline constexpr double kDegeneracyGuard = 1e-9;

DiskDecomposition disk_decomposition(Radius m);

/// Orientation-preserving similarity T(z) = (z - p) / (x - p) in complex
/// notation, mapping the puncture p to 0 and x to e_1.
class Similarity {
 public:
  Similarity(const Point& puncture, const Point& x);

  Point apply(const Point& z) const;
  Point invert(const Point& w) const;
  /// Factor by which Euclidean lengths are multiplied.
  double scale() const;
  /// Rotation angle applied, in radians.
  double rotation() const;

 private:
  Point p_;
  double ar_, ai_;  // 1 / (x - p) as a complex number
};

Similarity canonical_transport(const Point& puncture, const Point& x);

/// Membership in B_j(x, M) for G = R^2 \ {puncture}, through the analytic decomposition.
bool decomposition_contains(const Point& puncture, const Point& x, Radius m, const Point& y);

struct Thresholds {
  double j_convex;               // log 2
  double j_strictly_convex_sup;  // log 2, open end
  double j_starlike;             // log(1 + √2)
  double annulus_onset;          // log 3
  double qh_convex;              // 1
  double qh_starlike;            // 2.83297 (reference value)
};

Thresholds thresholds();

/// e^{2M} - 2e^M - 1, zero exactly at M = log(1 + √2).
double tangency_residual(Radius m);

/// |1 - c|² - r² - s²: vanishes when the outer and inner circles meet at right angles.
double perpendicularity_residual(Radius m);

}  // namespace jball::punctured
