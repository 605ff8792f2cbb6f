#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "jball/domain.hpp"
#include "jball/metric.hpp"
#include "jball/report.hpp"

namespace jball {

/// A bounded open sublevel set { y : value(y) < level } in the plane, with the
/// point it is built around and a box known to contain it.
struct Region {
  std::function<double(const Point&)> value;  // +inf where undefined (outside G)
  double level = 0.0;
  Point center;
  Box bbox;
  /// Upper bound of |∇value| near the level set; 0 when unknown.
  double gradient_bound = 0.0;

  bool contains(const Point& y) const { return value(y) < level; }
};

/// B_j(x, M) as a Region. The box is the outer Euclidean bound padded by 5%,
/// cut down to the domain's box when G is bounded.
Region j_ball_region(const Domain& domain, const Point& x, Radius m);

/// Quasihyperbolic ball D(x, M) in R^2 \ {puncture}, through the closed form.
Region qh_punctured_region(const Point& puncture, const Point& x, Radius m);

/// Cell-center raster of a Region.
struct RegionGrid {
  Point origin;  // center of cell (0, 0)
  double h = 0.0;
  int nx = 0;
  int ny = 0;
  std::vector<std::uint8_t> cells;  // 1 inside
  std::vector<double> field;        // value - level, clamped to ±1e6
  Box bbox;

  bool at(int i, int j) const { return cells[static_cast<std::size_t>(j) * nx + i] != 0; }
  Point cell_center(int i, int j) const { return Point(origin.x() + i * h, origin.y() + j * h); }
  std::size_t count() const;
};

/// Rasters B_j(x, M) at spacing h. Throws ResolutionError if h exceeds 1/64 of
/// the outer Euclidean radius.
RegionGrid extract_region(const Domain& domain, const Point& x, Radius m, double h);

/// Rasters a Region with `resolution` cells across the longer side of its box.
RegionGrid rasterize(const Region& region, int resolution);
RegionGrid rasterize(const Region& region, double h);

inline constexpr int kDefaultResolution = 1024;

/// Closed polylines separating inside from outside cells (marching squares,
/// saddles resolved so inside cells are 4-connected). Throws InvalidInput
/// for an empty region.
std::vector<std::vector<Point>> trace_boundary(const RegionGrid& grid);

enum class Mode { Strict, NonStrict };

/// Chord test of convexity; strict mode also requires midpoints of boundary
/// pairs to lie at positive depth. `tol` is in units of the region value.
CheckReport convexity_check(const Region& region, Mode mode, std::size_t trials, double tol,
                            std::uint64_t seed);

/// Strict mode marches `rays` rays from `center` and fails on any re-entry;
/// non-strict mode checks segments [center, y] for `rays` sampled y.
/// Throws InvalidInput if `center` is not in the region.
CheckReport starlikeness_check(const Region& region, const Point& center, Mode mode, std::size_t rays,
                               double tol, std::uint64_t seed);

struct Topology {
  std::size_t components = 0;
  /// Components holding at least one cell whose 8 neighbours are inside;
  /// slivers thinner than the grid break into unresolved fragments.
  std::size_t resolved_components = 0;
  bool simply_connected = false;
};

/// Components of inside cells (4-connected); simply connected iff every
/// outside cell is 8-connected to the frame.
Topology topology_check(const RegionGrid& grid);

struct SphereComponents {
  std::size_t components = 0;
  /// Points of { value = level } not approached by the open ball.
  std::vector<Point> isolated_points;
  /// False when an isolated sphere point exists, i.e. the closure of the open
  /// ball misses part of the closed ball.
  bool closure_equals_closed_ball = true;
  double band = 0.0;
};

/// Components of the band { |value - level| < band } restricted to G.
SphereComponents sphere_components(const Region& region, double band, double h);
SphereComponents sphere_components(const Domain& domain, const Point& x, Radius m, double band, double h);

/// Band half-width max(1e-3, 2 h |∇j|) with |∇j| <= 3 e^M / d(x).
double default_sphere_band(const Region& region, double h);

}  // namespace jball
