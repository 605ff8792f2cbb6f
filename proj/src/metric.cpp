#include "jball/metric.hpp"

#include <cmath>
#include <string>

namespace jball {

Radius::Radius(double m) : m_(m) {
  if (!(m > 0.0) || !std::isfinite(m)) throw InvalidInput("radius M must be positive and finite");
}

double j_from_depths(double separation, double dx, double dy) {
  return std::log1p(separation / std::min(dx, dy));
}

double j_distance(const Domain& domain, const Point& x, const Point& y) {
  require_same_dim(x, y, "j_distance");
  const double dx = domain.boundary_distance(x);
  const double dy = domain.boundary_distance(y);
  return j_from_depths(distance(x, y), dx, dy);
}

bool in_j_ball(const Domain& domain, const Point& x, Radius m, const Point& y) {
  require_same_dim(x, y, "in_j_ball");
  const double dx = domain.boundary_distance(x);
  const auto dy = domain.depth(y);
  if (!dy) return false;
  return j_from_depths(distance(x, y), dx, *dy) < m.value();
}

AnnulusBounds annulus_bounds(double dx, Radius m) {
  if (!(dx > 0.0) || !std::isfinite(dx)) throw InvalidInput("annulus_bounds: d(x) must be positive");
  const double M = m.value();
  return {-std::expm1(-M) * dx, std::expm1(M) * dx, std::exp(-M) * dx, std::exp(M) * dx};
}

Radius exhaustion_radius(const Domain& domain, const Point& x, double s) {
  if (!domain.bounded()) throw Unsupported("exhaustion_radius needs a bounded domain");
  const double dx = domain.boundary_distance(x);
  if (!(s > 0.0) || s > dx) throw InvalidInput("exhaustion_radius: s must lie in (0, d(x)]");
  return Radius(std::log1p(domain.farthest_boundary_distance(x) / s));
}

double qh_punctured_closed_form(const Point& puncture, const Point& x, const Point& y) {
  if (puncture.dim() != 2 || x.dim() != 2 || y.dim() != 2) {
    throw DimensionMismatch("qh_punctured_closed_form is planar");
  }
  const Point a = x - puncture;
  const Point b = y - puncture;
  const double ra = norm(a), rb = norm(b);
  if (!(ra > 0.0) || !(rb > 0.0)) throw OutsideDomain("qh_punctured_closed_form: point at the puncture");
  const double theta = std::abs(std::atan2(cross(a, b), dot(a, b)));
  return std::hypot(theta, std::log(ra / rb));
}

CheckReport comparison_check(const Domain& domain, const Point& x, const Point& y, double s, double h,
                             double minorant_tol, double bound_tol) {
  if (!(s > 0.0 && s < 1.0)) throw InvalidInput("comparison_check: s must lie in (0, 1)");
  CheckReport r;
  r.predicate = "j_k_comparison";
  r.tol = minorant_tol;
  const double j = j_distance(domain, x, y);
  const double k = x == y ? 0.0 : qh_distance(domain, x, y, h);
  const double dx = domain.boundary_distance(x);
  const double sep = distance(x, y);
  const double bound = j / (1.0 - s);
  const bool applies = sep < s * dx;
  const bool minorant_ok = j <= k + minorant_tol;
  const bool bound_ok = !applies || k <= bound + bound_tol;
  r.passed = minorant_ok && bound_ok;
  r.samples_used = 1;
  r.set("j", j);
  r.set("k", k);
  r.set("bound", bound);
  r.set("bound_applies", applies ? 1.0 : 0.0);
  // Reading the hypothesis literally (only |x - y| < d(x)) and logging, never gating.
  r.set("literal_bound_violated", (sep < dx && k > bound + bound_tol) ? 1.0 : 0.0);
  if (!r.passed) {
    r.witness = Witness{minorant_ok ? "bound_violation" : "minorant_violation", {x, y}, ""};
  }
  return r;
}

}  // namespace jball
