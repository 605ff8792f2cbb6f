#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "jball/domain.hpp"

namespace jball::geodesics {

/// Angular tolerance for collinearity of boundary points with a segment.
inline constexpr double kCollinearityTol = 1e-9;
/// Interior samples along a segment.
inline constexpr int kSegmentSamples = 257;

/// j(x, y) + j(y, z) - j(x, z); nonnegative up to rounding.
double triangle_defect(const Domain& domain, const Point& x, const Point& y, const Point& z);

/// Evidence that y is an equality point of the triangle inequality for (x, z):
/// x, z and some u ∈ R_x are collinear, y ∈ (x, z) and d(x) < d(y) < d(z).
struct EqualityCertificate {
  Point collinear_with;
  bool segment_ok = false;
  bool depth_ordering = false;
  double defect = 0.0;
};

struct EqualityScan {
  std::vector<std::pair<Point, EqualityCertificate>> witnesses;
  /// Points with defect below tol for which no certificate could be built.
  std::vector<Point> uncertified;
  double min_defect = 0.0;
  std::size_t samples = 0;
};

/// Scans y along (x, z) and certifies every y with defect < tol. The
/// endpoints are ordered so that d(x) <= d(z).
EqualityScan equality_witnesses(const Domain& domain, const Point& x, const Point& z, double tol);

struct GeodesicVerdict {
  bool exists = false;
  std::optional<Point> u;
};

/// Whether the segment [x, y] is a j-geodesic: some u ∈ R_x lies on the line
/// through x and y behind the shallower endpoint, and u ∈ R_s along the whole
/// segment (each within tol, relative).
GeodesicVerdict geodesic_exists(const Domain& domain, const Point& x, const Point& y, double tol = 1e-9);

struct NoGeodesicPair {
  Point x;
  Point y;
  /// Smallest triangle defect over sampled intermediate points away from the endpoints.
  double min_defect = 0.0;
};

/// Finds x, y ∈ G joined by no geodesic, certified by geodesic_exists and a
/// positive defect floor. Deterministic for a fixed seed. Throws
/// ResolutionError if the bounded search fails.
NoGeodesicPair no_geodesic_pair(const Domain& domain, std::uint64_t seed = 1);

}  // namespace jball::geodesics
