#include "jball/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <variant>

namespace jball::gen {

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

Domain random_punctured(Rng& rng, std::size_t dim, std::size_t m) {
  std::vector<Point> pts;
  while (pts.size() < m) {
    Point p = Point::zeros(dim);
    for (std::size_t i = 0; i < dim; ++i) p[i] = uniform(rng, -2.0, 2.0);
    const bool far = std::all_of(pts.begin(), pts.end(), [&](const Point& q) { return distance(p, q) >= 0.1; });
    if (far) pts.push_back(p);
  }
  return Domain::punctured(std::move(pts));
}

Domain random_half_plane(Rng& rng) {
  const double a = uniform(rng, 0.0, 2.0 * std::numbers::pi);
  return Domain::half_space(Point(std::cos(a), std::sin(a)), uniform(rng, -1.0, 1.0));
}

Domain random_convex_polygon(Rng& rng, std::size_t n) {
  std::vector<double> angles;
  for (;;) {
    angles.clear();
    for (std::size_t i = 0; i < n; ++i) angles.push_back(uniform(rng, 0.0, 2.0 * std::numbers::pi));
    std::sort(angles.begin(), angles.end());
    double gap = angles.front() + 2.0 * std::numbers::pi - angles.back();
    bool distinct = true;
    for (std::size_t i = 1; i < n; ++i) {
      gap = std::max(gap, angles[i] - angles[i - 1]);
      distinct = distinct && angles[i] - angles[i - 1] > 1e-3;
    }
    if (distinct && gap < 0.9 * std::numbers::pi) break;
  }
  const Point c(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
  const double r = uniform(rng, 0.5, 2.0);
  std::vector<Point> v;
  for (double a : angles) v.push_back(c + Point(std::cos(a), std::sin(a)) * r);
  return Domain::convex_polygon(std::move(v));
}

Domain random_star_polygon(Rng& rng, std::size_t n, const Point& center) {
  std::vector<Point> v;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = 2.0 * std::numbers::pi * (static_cast<double>(i) + uniform(rng, -0.3, 0.3)) / static_cast<double>(n);
    const double r = uniform(rng, 0.4, 1.4);
    v.push_back(center + Point(std::cos(a), std::sin(a)) * r);
  }
  return Domain::simple_polygon(std::move(v));
}

Domain random_ball_union(Rng& rng, std::size_t k) {
  std::vector<Disk> disks{Disk{Point(0.0, 0.0), uniform(rng, 0.5, 1.5)}};
  while (disks.size() < k) {
    const Disk& last = disks.back();
    const double r = uniform(rng, 0.2, 1.5);
    const double a = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    const double sep = uniform(rng, 0.3, 0.95) * (last.radius + r);
    disks.push_back(Disk{last.center + Point(std::cos(a), std::sin(a)) * sep, r});
  }
  return Domain::ball_union(std::move(disks));
}

Point sample_interior(const Domain& domain, Rng& rng) {
  if (const auto box = domain.bounding_box()) {
    for (;;) {
      const Point p(uniform(rng, box->lo.x(), box->hi.x()), uniform(rng, box->lo.y(), box->hi.y()));
      if (domain.contains(p)) return p;
    }
  }
  if (const auto* ps = std::get_if<PuncturedSpace>(&domain.variant())) {
    std::normal_distribution<double> g(0.0, 0.5);
    for (;;) {
      const auto i = std::uniform_int_distribution<std::size_t>(0, ps->punctures.size() - 1)(rng);
      Point p = ps->punctures[i];
      for (std::size_t k = 0; k < p.dim(); ++k) p[k] += g(rng);
      if (domain.contains(p)) return p;
    }
  }
  const auto& hs = std::get<HalfSpace>(domain.variant());
  const Point foot = hs.normal * hs.offset;
  const Point tangent(-hs.normal[1], hs.normal[0]);
  // Depth spread over three decades.
  const double depth = std::pow(10.0, uniform(rng, -2.0, 1.0));
  return foot + tangent * uniform(rng, -3.0, 3.0) - hs.normal * depth;
}

Domain random_domain(Rng& rng) {
  switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
    case 0: {
      const std::size_t dim = std::uniform_int_distribution<int>(0, 1)(rng) ? 3 : 2;
      return random_punctured(rng, dim, std::uniform_int_distribution<std::size_t>(1, 6)(rng));
    }
    case 1: return random_half_plane(rng);
    case 2: return random_convex_polygon(rng, std::uniform_int_distribution<std::size_t>(3, 9)(rng));
    case 3: return random_star_polygon(rng, std::uniform_int_distribution<std::size_t>(5, 12)(rng), Point(0.0, 0.0));
    default: return random_ball_union(rng, std::uniform_int_distribution<std::size_t>(1, 4)(rng));
  }
}

}  // namespace jball::gen
