#include "jball/punctured.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace jball::punctured {

bool DiskDecomposition::contains(const Point& z) const {
  if (!(distance(z, outer.center) < outer.radius)) return false;
  switch (kind) {
    case InnerKind::Cap:
      return distance(z, inner.center) < inner.radius;
    case InnerKind::HalfPlaneCut:
      return z.x() > 0.5;
    case InnerKind::Hole:
      return distance(z, inner.center) > inner.radius;
  }
  return false;
}

double DiskDecomposition::boundary_margin(const Point& z) const {
  const double a = std::abs(distance(z, outer.center) - outer.radius);
  const double b = kind == InnerKind::HalfPlaneCut ? std::abs(z.x() - 0.5)
                                                   : std::abs(distance(z, inner.center) - inner.radius);
  return std::min(a, b);
}

DiskDecomposition disk_decomposition(Radius m) {
  const double M = m.value();
  const double em = std::exp(M);
  DiskDecomposition d;
  d.M = M;
  d.outer = {Point(1.0, 0.0), std::expm1(M)};
  if (std::abs(em - 2.0) < kDegeneracyGuard) {
    d.kind = InnerKind::HalfPlaneCut;
    d.c = std::numeric_limits<double>::infinity();
    d.s = std::numeric_limits<double>::infinity();
    return d;
  }
  const double denom = em * (2.0 - em);
  d.c = 1.0 / denom;
  d.s = std::expm1(M) / std::abs(denom);
  d.inner = {Point(d.c, 0.0), d.s};
  d.kind = em < 2.0 ? InnerKind::Cap : InnerKind::Hole;
  return d;
}

Similarity::Similarity(const Point& puncture, const Point& x) : p_(puncture) {
  if (puncture.dim() != 2 || x.dim() != 2) throw DimensionMismatch("canonical_transport is planar");
  const double wr = x.x() - puncture.x();
  const double wi = x.y() - puncture.y();
  const double n2 = wr * wr + wi * wi;
  if (!(n2 > 0.0)) throw InvalidInput("canonical_transport: x coincides with the puncture");
  ar_ = wr / n2;
  ai_ = -wi / n2;
}

Point Similarity::apply(const Point& z) const {
  const double zr = z.x() - p_.x(), zi = z.y() - p_.y();
  return Point(zr * ar_ - zi * ai_, zr * ai_ + zi * ar_);
}

Point Similarity::invert(const Point& w) const {
  // w / a = w * conj(a) / |a|²
  const double n2 = ar_ * ar_ + ai_ * ai_;
  const double br = ar_ / n2, bi = -ai_ / n2;
  return Point(p_.x() + w.x() * br - w.y() * bi, p_.y() + w.x() * bi + w.y() * br);
}

double Similarity::scale() const { return std::hypot(ar_, ai_); }

double Similarity::rotation() const { return std::atan2(ai_, ar_); }

Similarity canonical_transport(const Point& puncture, const Point& x) { return Similarity(puncture, x); }

bool decomposition_contains(const Point& puncture, const Point& x, Radius m, const Point& y) {
  if (y == puncture) return false;
  return disk_decomposition(m).contains(Similarity(puncture, x).apply(y));
}

Thresholds thresholds() {
  return {std::numbers::ln2,
          std::numbers::ln2,
          std::log1p(std::numbers::sqrt2),
          std::log(3.0),
          1.0,
          2.83297};
}

double tangency_residual(Radius m) {
  const double em = std::exp(m.value());
  return em * em - 2.0 * em - 1.0;
}

double perpendicularity_residual(Radius m) {
  const DiskDecomposition d = disk_decomposition(m);
  if (d.kind == InnerKind::HalfPlaneCut) return std::numeric_limits<double>::infinity();
  const double cc = 1.0 - d.c;
  return cc * cc - d.outer.radius * d.outer.radius - d.s * d.s;
}

}  // namespace jball::punctured
