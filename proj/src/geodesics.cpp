#include "jball/geodesics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <variant>

#include "jball/metric.hpp"

namespace jball::geodesics {
namespace {

// Angle between directions a and b in [0, π].
double angle_between(const Point& a, const Point& b) {
  if (a.dim() == 2) return std::abs(std::atan2(cross(a, b), dot(a, b)));
  const double c = dot(a, b) / (norm(a) * norm(b));
  return std::acos(std::clamp(c, -1.0, 1.0));
}

// u lies on the line through x and z, on the far side of x.
bool behind(const Point& u, const Point& x, const Point& z) {
  return angle_between(x - u, z - x) <= kCollinearityTol;
}

bool in_nearest_set(const Domain& g, const Point& s, const Point& u, double tol) {
  const double ds = g.boundary_distance(s);
  return distance(s, u) <= ds + tol * std::max(1.0, ds);
}

Point reference_point(const Domain& g) {
  const auto& v = g.variant();
  if (const auto* p = std::get_if<PuncturedSpace>(&v)) {
    double sep = 1.0;
    if (p->punctures.size() > 1) {
      sep = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < p->punctures.size(); ++i) {
        for (std::size_t j = i + 1; j < p->punctures.size(); ++j) {
          sep = std::min(sep, distance(p->punctures[i], p->punctures[j]));
        }
      }
    }
    // Off every puncture, and off the lines through pairs of punctures.
    Point x = p->punctures.front();
    x[0] += 0.31 * sep;
    x[1] += 0.17 * sep;
    return x;
  }
  if (const auto* h = std::get_if<HalfSpace>(&v)) return h->normal * (h->offset - 1.0);
  if (const auto* u = std::get_if<BallUnion>(&v)) return u->disks.front().center;
  // Polygons: deepest point of a coarse sample of the bounding box.
  const Box b = *g.bounding_box();
  Point best = b.lo;
  double best_d = -1.0;
  for (int j = 1; j < 64; ++j) {
    for (int i = 1; i < 64; ++i) {
      const Point p(b.lo.x() + (b.hi.x() - b.lo.x()) * i / 64.0, b.lo.y() + (b.hi.y() - b.lo.y()) * j / 64.0);
      const auto d = g.depth(p);
      if (d && *d > best_d) {
        best_d = *d;
        best = p;
      }
    }
  }
  return best;
}

}  // namespace

double triangle_defect(const Domain& domain, const Point& x, const Point& y, const Point& z) {
  return j_distance(domain, x, y) + j_distance(domain, y, z) - j_distance(domain, x, z);
}

EqualityScan equality_witnesses(const Domain& domain, const Point& x0, const Point& z0, double tol) {
  if (x0 == z0) throw InvalidInput("equality_witnesses: x and z must differ");
  const bool swap = domain.boundary_distance(x0) > domain.boundary_distance(z0);
  const Point& x = swap ? z0 : x0;
  const Point& z = swap ? x0 : z0;
  const double dx = domain.boundary_distance(x);
  const double dz = domain.boundary_distance(z);
  const NearestBoundarySet rx = domain.nearest_boundary(x);
  std::optional<Point> u;
  for (const Point& cand : rx.points) {
    if (behind(cand, x, z)) {
      u = cand;
      break;
    }
  }
  EqualityScan scan;
  scan.min_defect = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= kSegmentSamples; ++k) {
    const Point y = lerp(x, z, static_cast<double>(k) / (kSegmentSamples + 1));
    const auto dy = domain.depth(y);
    if (!dy) continue;
    ++scan.samples;
    const double defect = triangle_defect(domain, x, y, z);
    scan.min_defect = std::min(scan.min_defect, defect);
    if (!(defect < tol)) continue;
    const bool ordering = dx < *dy && *dy < dz;
    if (!u || !ordering) {
      scan.uncertified.push_back(y);
      continue;
    }
    scan.witnesses.emplace_back(y, EqualityCertificate{*u, true, ordering, defect});
  }
  return scan;
}

GeodesicVerdict geodesic_exists(const Domain& domain, const Point& x0, const Point& y0, double tol) {
  if (x0 == y0) throw InvalidInput("geodesic_exists: endpoints must differ");
  const bool swap = domain.boundary_distance(x0) > domain.boundary_distance(y0);
  const Point& x = swap ? y0 : x0;
  const Point& y = swap ? x0 : y0;
  for (const Point& u : domain.nearest_boundary(x).points) {
    if (!behind(u, x, y)) continue;
    bool ok = true;
    // Samples plus subinterval midpoints, where a switch of nearest point would show.
    for (int k = 0; k <= 2 * (kSegmentSamples + 1) && ok; ++k) {
      const Point s = lerp(x, y, static_cast<double>(k) / (2 * (kSegmentSamples + 1)));
      if (!domain.contains(s) || !in_nearest_set(domain, s, u, tol)) ok = false;
    }
    if (ok) return {true, u};
  }
  return {false, std::nullopt};
}

NoGeodesicPair no_geodesic_pair(const Domain& domain, std::uint64_t seed) {
  const Point x = reference_point(domain);
  const double dx = domain.boundary_distance(x);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> radius(0.25 * dx, 0.9 * dx);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Point y = x;
    const double th = angle(rng), r = radius(rng);
    y[0] += r * std::cos(th);
    y[1] += r * std::sin(th);
    if (!domain.contains(y)) continue;
    // Robustly noncollinear with every nearest boundary point of either end.
    bool collinear = false;
    for (const Point* end : {&x, static_cast<const Point*>(&y)}) {
      for (const Point& u : domain.nearest_boundary(*end).points) {
        const double a = angle_between(*end - u, y - x);
        if (a < 1e-3 || std::numbers::pi - a < 1e-3) collinear = true;
      }
    }
    if (collinear || geodesic_exists(domain, x, y).exists) continue;
    // Defect floor over intermediate points kept away from both endpoints.
    const double len = distance(x, y);
    const Point dir = (y - x) / len;
    Point normal = Point::zeros(x.dim());
    normal[0] = -dir[1];
    normal[1] = dir[0];
    double floor = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 16; ++k) {
      const Point base = lerp(x, y, k / 16.0);
      for (int o = -4; o <= 4; ++o) {
        const Point p = base + normal * (len * o / 16.0);
        if (!domain.contains(p)) continue;
        if (std::min(distance(p, x), distance(p, y)) < len / 16.0) continue;
        floor = std::min(floor, triangle_defect(domain, x, p, y));
      }
    }
    if (floor > 0.0 && std::isfinite(floor)) return {x, y, floor};
  }
  throw ResolutionError("no_geodesic_pair: search exhausted without a certified pair");
}

}  // namespace jball::geodesics
