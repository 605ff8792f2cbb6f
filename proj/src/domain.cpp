#include "jball/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace jball {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_finite(const Point& p, const char* what) {
  if (!p.is_finite()) throw InvalidInput(std::string(what) + ": non-finite coordinate");
}

void require_planar(const std::vector<Point>& pts, const char* what) {
  for (const Point& p : pts) {
    if (p.dim() != 2) throw InvalidInput(std::string(what) + ": vertices must be 2D");
    require_finite(p, what);
  }
}

// Angle wrapped into [0, 2π).
double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0) a += kTwoPi;
  return a;
}

bool angle_in_arc(double angle, const BoundaryArc& arc) {
  if (arc.length >= kTwoPi) return true;
  return wrap_angle(angle - arc.start) <= arc.length;
}

Point arc_point(const Disk& d, double angle) {
  return Point(d.center.x() + d.radius * std::cos(angle), d.center.y() + d.radius * std::sin(angle));
}

// Uncovered arcs of every circle in the union.
std::vector<BoundaryArc> clip_arcs(const std::vector<Disk>& disks) {
  std::vector<BoundaryArc> arcs;
  for (std::size_t i = 0; i < disks.size(); ++i) {
    const Disk& di = disks[i];
    std::vector<std::pair<double, double>> covered;  // [lo, hi] within [0, 2π]
    bool fully_covered = false;
    for (std::size_t j = 0; j < disks.size() && !fully_covered; ++j) {
      if (j == i) continue;
      const Disk& dj = disks[j];
      const double dx = dj.center.x() - di.center.x();
      const double dy = dj.center.y() - di.center.y();
      const double dist = std::hypot(dx, dy);
      if (dist == 0.0) {
        if (di.radius < dj.radius) fully_covered = true;
        continue;
      }
      // |c_i + r_i u(θ) - c_j| < r_j  <=>  cos(θ - φ) > kappa
      const double kappa = (di.radius * di.radius + dist * dist - dj.radius * dj.radius) /
                           (2.0 * di.radius * dist);
      if (kappa >= 1.0) continue;
      if (kappa < -1.0) {
        fully_covered = true;
        continue;
      }
      const double phi = std::atan2(dy, dx);
      const double half = std::acos(kappa);
      const double lo = wrap_angle(phi - half);
      const double hi = lo + 2.0 * half;
      if (hi <= kTwoPi) {
        covered.emplace_back(lo, hi);
      } else {
        covered.emplace_back(lo, kTwoPi);
        covered.emplace_back(0.0, hi - kTwoPi);
      }
    }
    if (fully_covered) continue;
    if (covered.empty()) {
      arcs.push_back({i, 0.0, kTwoPi});
      continue;
    }
    std::sort(covered.begin(), covered.end());
    std::vector<std::pair<double, double>> merged;
    for (const auto& iv : covered) {
      if (!merged.empty() && iv.first < merged.back().second) {
        merged.back().second = std::max(merged.back().second, iv.second);
      } else {
        merged.push_back(iv);
      }
    }
    // Gaps between consecutive covered intervals, cyclically.
    for (std::size_t k = 0; k < merged.size(); ++k) {
      const double gap_start = merged[k].second;
      const double next_lo = k + 1 < merged.size() ? merged[k + 1].first : merged[0].first + kTwoPi;
      const double len = next_lo - gap_start;
      if (len > 0.0) {
        arcs.push_back({i, wrap_angle(gap_start), len});
      }
    }
  }
  return arcs;
}

struct ArcQuery {
  double distance;
  Point nearest;
};

// Distance from p to a boundary arc, and the closest point on it. When p is the
// circle center every arc point is equidistant and the arc start is returned.
ArcQuery arc_distance(const Point& p, const Disk& disk, const BoundaryArc& arc) {
  const double vx = p.x() - disk.center.x();
  const double vy = p.y() - disk.center.y();
  const double rho = std::hypot(vx, vy);
  if (rho == 0.0) return {disk.radius, arc_point(disk, arc.start)};
  const double psi = std::atan2(vy, vx);
  if (angle_in_arc(psi, arc)) return {std::abs(rho - disk.radius), arc_point(disk, psi)};
  const Point a = arc_point(disk, arc.start);
  const Point b = arc_point(disk, arc.start + arc.length);
  const double da = distance(p, a);
  const double db = distance(p, b);
  return da <= db ? ArcQuery{da, a} : ArcQuery{db, b};
}

double polygon_edge_distance(const std::vector<Point>& v, const Point& p) {
  double best = kInf;
  for (std::size_t i = 0; i < v.size(); ++i) {
    best = std::min(best, segment_distance(p, v[i], v[(i + 1) % v.size()]));
  }
  return best;
}

// Crossing-number test; the boundary itself is handled by the caller.
bool polygon_encloses(const std::vector<Point>& v, const Point& p) {
  bool inside = false;
  for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
    const double yi = v[i].y(), yj = v[j].y();
    if ((yi > p.y()) != (yj > p.y())) {
      const double xc = v[j].x() + (p.y() - yj) / (yi - yj) * (v[i].x() - v[j].x());
      if (p.x() < xc) inside = !inside;
    }
  }
  return inside;
}

double signed_area(const std::vector<Point>& v) {
  double a = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) a += cross(v[i], v[(i + 1) % v.size()]);
  return 0.5 * a;
}

int orient(const Point& a, const Point& b, const Point& c) {
  const double o = cross(b - a, c - a);
  return (o > 0) - (o < 0);
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  return std::min(a.x(), b.x()) <= p.x() && p.x() <= std::max(a.x(), b.x()) &&
         std::min(a.y(), b.y()) <= p.y() && p.y() <= std::max(a.y(), b.y());
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

void polygon_feet(const std::vector<Point>& v, const Point& x, double cutoff,
                  std::vector<Point>& out) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    Point foot;
    if (segment_distance(x, v[i], v[(i + 1) % v.size()], &foot) <= cutoff) out.push_back(foot);
  }
}

void dedupe(std::vector<Point>& pts, double tol) {
  std::vector<Point> unique;
  for (const Point& p : pts) {
    const bool seen = std::any_of(unique.begin(), unique.end(),
                                  [&](const Point& q) { return distance(p, q) <= tol; });
    if (!seen) unique.push_back(p);
  }
  pts = std::move(unique);
}

std::vector<Point> sample_polygon(const std::vector<Point>& v, std::size_t count) {
  double perimeter = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) perimeter += distance(v[i], v[(i + 1) % v.size()]);
  std::vector<Point> out;
  out.reserve(count);
  std::size_t edge = 0;
  double edge_start = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    const double s = perimeter * (static_cast<double>(k) + 0.5) / static_cast<double>(count);
    double len = distance(v[edge], v[(edge + 1) % v.size()]);
    while (s > edge_start + len && edge + 1 < v.size()) {
      edge_start += len;
      ++edge;
      len = distance(v[edge], v[(edge + 1) % v.size()]);
    }
    out.push_back(lerp(v[edge], v[(edge + 1) % v.size()], std::clamp((s - edge_start) / len, 0.0, 1.0)));
  }
  return out;
}

}  // namespace

double segment_distance(const Point& p, const Point& a, const Point& b, Point* foot) {
  const double vx = b.x() - a.x(), vy = b.y() - a.y();
  const double ux = p.x() - a.x(), uy = p.y() - a.y();
  const double len2 = vx * vx + vy * vy;
  double t = len2 > 0.0 ? (vx * ux + vy * uy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const double fx = a.x() + t * vx, fy = a.y() + t * vy;
  if (foot) *foot = Point(fx, fy);
  return std::hypot(p.x() - fx, p.y() - fy);
}

Domain Domain::punctured(std::vector<Point> punctures) {
  if (punctures.empty()) throw InvalidInput("punctured: at least one puncture required");
  const std::size_t n = punctures.front().dim();
  if (n < 2) throw InvalidInput("punctured: dimension must be at least 2");
  for (const Point& p : punctures) {
    if (p.dim() != n) throw DimensionMismatch("punctured: mixed puncture dimensions");
    require_finite(p, "punctured");
  }
  for (std::size_t i = 0; i < punctures.size(); ++i) {
    for (std::size_t j = i + 1; j < punctures.size(); ++j) {
      if (!(distance(punctures[i], punctures[j]) > 0.0)) {
        throw InvalidInput("punctured: punctures must be pairwise distinct");
      }
    }
  }
  return Domain(PuncturedSpace{std::move(punctures)}, n);
}

Domain Domain::half_space(Point normal, double offset) {
  if (normal.dim() != 2) throw InvalidInput("half_space: normal must be 2D");
  require_finite(normal, "half_space");
  if (!std::isfinite(offset)) throw InvalidInput("half_space: non-finite offset");
  const double len = norm(normal);
  if (!(len > 0.0)) throw InvalidInput("half_space: zero normal");
  if (std::abs(len - 1.0) > 1e-12) {
    normal /= len;
    offset /= len;
  }
  return Domain(HalfSpace{std::move(normal), offset}, 2);
}

Domain Domain::convex_polygon(std::vector<Point> vertices) {
  if (vertices.size() < 3) throw InvalidInput("convex_polygon: at least 3 vertices required");
  require_planar(vertices, "convex_polygon");
  const std::size_t n = vertices.size();
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point e0 = vertices[(i + 1) % n] - vertices[i];
    const Point e1 = vertices[(i + 2) % n] - vertices[(i + 1) % n];
    const double c = cross(e0, e1);
    if (!(c > 0.0)) throw InvalidInput("convex_polygon: vertices must be strictly convex and counterclockwise");
    turning += std::atan2(c, dot(e0, e1));
  }
  if (std::abs(turning - kTwoPi) > 1e-6) throw InvalidInput("convex_polygon: polygon winds more than once");
  return Domain(ConvexPolygon{std::move(vertices)}, 2);
}

Domain Domain::simple_polygon(std::vector<Point> vertices) {
  if (vertices.size() < 3) throw InvalidInput("simple_polygon: at least 3 vertices required");
  require_planar(vertices, "simple_polygon");
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (vertices[i] == vertices[(i + 1) % n]) throw InvalidInput("simple_polygon: repeated vertex");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = vertices[i];
    const Point& b = vertices[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point& c = vertices[j];
      const Point& d = vertices[(j + 1) % n];
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) {
        // Adjacent edges may only share their common vertex.
        const Point& shared = j == i + 1 ? b : a;
        const Point& other_ab = j == i + 1 ? a : b;
        const Point& other_cd = j == i + 1 ? d : c;
        if (orient(other_ab, shared, other_cd) == 0 &&
            dot(other_ab - shared, other_cd - shared) > 0.0) {
          throw InvalidInput("simple_polygon: edges fold back on each other");
        }
        continue;
      }
      if (segments_intersect(a, b, c, d)) throw InvalidInput("simple_polygon: edges intersect");
    }
  }
  if (!(std::abs(signed_area(vertices)) > 0.0)) throw InvalidInput("simple_polygon: zero area");
  return Domain(SimplePolygon{std::move(vertices)}, 2);
}

Domain Domain::ball_union(std::vector<Disk> disks) {
  if (disks.empty()) throw InvalidInput("ball_union: at least one disk required");
  for (const Disk& d : disks) {
    if (d.center.dim() != 2) throw InvalidInput("ball_union: disks must be 2D");
    require_finite(d.center, "ball_union");
    if (!(d.radius > 0.0) || !std::isfinite(d.radius)) throw InvalidInput("ball_union: radius must be positive");
  }
  // Open disks overlap iff |c_i - c_j| < r_i + r_j; the union is connected iff
  // the overlap graph is.
  std::vector<std::size_t> parent(disks.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < disks.size(); ++i) {
    for (std::size_t j = i + 1; j < disks.size(); ++j) {
      if (distance(disks[i].center, disks[j].center) < disks[i].radius + disks[j].radius) {
        parent[find(i)] = find(j);
      }
    }
  }
  for (std::size_t i = 1; i < disks.size(); ++i) {
    if (find(i) != find(0)) throw InvalidInput("ball_union: union of disks is not connected");
  }
  BallUnion u{std::move(disks), {}};
  u.arcs = clip_arcs(u.disks);
  return Domain(std::move(u), 2);
}

bool Domain::bounded() const {
  return std::holds_alternative<ConvexPolygon>(v_) || std::holds_alternative<SimplePolygon>(v_) ||
         std::holds_alternative<BallUnion>(v_);
}

std::string Domain::type_name() const {
  return std::visit(overloaded{[](const PuncturedSpace&) { return "punctured"; },
                               [](const HalfSpace&) { return "half_space"; },
                               [](const ConvexPolygon&) { return "convex_polygon"; },
                               [](const SimplePolygon&) { return "simple_polygon"; },
                               [](const BallUnion&) { return "ball_union"; }},
                    v_);
}

void Domain::check_dim(const Point& x) const {
  if (x.dim() != dim_) {
    throw DimensionMismatch("point of dimension " + std::to_string(x.dim()) +
                            " used with a domain of dimension " + std::to_string(dim_));
  }
}

double Domain::distance_to_boundary(const Point& p) const {
  check_dim(p);
  return std::visit(
      overloaded{
          [&](const PuncturedSpace& s) {
            double best = kInf;
            for (const Point& y : s.punctures) best = std::min(best, distance(p, y));
            return best;
          },
          [&](const HalfSpace& h) { return std::abs(h.offset - dot(h.normal, p)); },
          [&](const ConvexPolygon& c) { return polygon_edge_distance(c.vertices, p); },
          [&](const SimplePolygon& s) { return polygon_edge_distance(s.vertices, p); },
          [&](const BallUnion& u) {
            double best = kInf;
            for (const BoundaryArc& a : u.arcs) {
              best = std::min(best, arc_distance(p, u.disks[a.disk], a).distance);
            }
            return best;
          }},
      v_);
}

std::optional<double> Domain::depth(const Point& x) const {
  check_dim(x);
  return std::visit(
      overloaded{
          [&](const PuncturedSpace& s) -> std::optional<double> {
            double best = kInf;
            for (const Point& y : s.punctures) best = std::min(best, distance(x, y));
            if (!(best > 0.0)) return std::nullopt;
            return best;
          },
          [&](const HalfSpace& h) -> std::optional<double> {
            const double s = h.offset - dot(h.normal, x);
            if (!(s > 0.0)) return std::nullopt;
            return s;
          },
          [&](const ConvexPolygon& c) -> std::optional<double> {
            const auto& v = c.vertices;
            for (std::size_t i = 0; i < v.size(); ++i) {
              if (!(cross(v[(i + 1) % v.size()] - v[i], x - v[i]) > 0.0)) return std::nullopt;
            }
            const double d = polygon_edge_distance(v, x);
            if (!(d > 0.0)) return std::nullopt;
            return d;
          },
          [&](const SimplePolygon& s) -> std::optional<double> {
            if (!polygon_encloses(s.vertices, x)) return std::nullopt;
            const double d = polygon_edge_distance(s.vertices, x);
            if (!(d > 0.0)) return std::nullopt;
            return d;
          },
          [&](const BallUnion& u) -> std::optional<double> {
            const bool inside = std::any_of(u.disks.begin(), u.disks.end(), [&](const Disk& d) {
              return distance(x, d.center) < d.radius;
            });
            if (!inside) return std::nullopt;
            double best = kInf;
            for (const BoundaryArc& a : u.arcs) {
              best = std::min(best, arc_distance(x, u.disks[a.disk], a).distance);
            }
            if (!(best > 0.0)) return std::nullopt;
            return best;
          }},
      v_);
}

bool Domain::contains(const Point& x) const { return depth(x).has_value(); }

double Domain::boundary_distance(const Point& x) const {
  const auto d = depth(x);
  if (!d) throw OutsideDomain("point " + x.to_string() + " is not in the domain");
  return *d;
}

NearestBoundarySet Domain::nearest_boundary(const Point& x, double tol) const {
  const double d = boundary_distance(x);
  if (tol <= 0.0) tol = 1e-9 * d;
  const double cutoff = d + tol;
  std::vector<Point> pts;
  std::visit(overloaded{
                 [&](const PuncturedSpace& s) {
                   for (const Point& y : s.punctures) {
                     if (distance(x, y) <= cutoff) pts.push_back(y);
                   }
                 },
                 [&](const HalfSpace& h) { pts.push_back(x + h.normal * d); },
                 [&](const ConvexPolygon& c) { polygon_feet(c.vertices, x, cutoff, pts); },
                 [&](const SimplePolygon& s) { polygon_feet(s.vertices, x, cutoff, pts); },
                 [&](const BallUnion& u) {
                   for (const BoundaryArc& a : u.arcs) {
                     const Disk& disk = u.disks[a.disk];
                     if (distance(x, disk.center) == 0.0) {
                       // Every point of the arc is nearest; return a finite sample.
                       if (std::abs(disk.radius - d) > tol) continue;
                       constexpr int kSamples = 8;
                       for (int k = 0; k <= kSamples; ++k) {
                         pts.push_back(arc_point(disk, a.start + a.length * k / kSamples));
                       }
                       continue;
                     }
                     const ArcQuery q = arc_distance(x, disk, a);
                     if (q.distance <= cutoff) pts.push_back(q.nearest);
                     // Both endpoints can tie when x sits symmetrically.
                     for (double ang : {a.start, a.start + a.length}) {
                       const Point e = arc_point(disk, ang);
                       if (distance(x, e) <= cutoff) pts.push_back(e);
                     }
                   }
                 }},
             v_);
  dedupe(pts, std::max(tol, 1e-12 * std::max(1.0, d)));
  return {std::move(pts), d};
}

double Domain::farthest_boundary_distance(const Point& x) const {
  check_dim(x);
  return std::visit(
      overloaded{
          [&](const PuncturedSpace&) -> double { throw Unsupported("punctured space is unbounded"); },
          [&](const HalfSpace&) -> double { throw Unsupported("half-space is unbounded"); },
          [&](const ConvexPolygon& c) {
            double best = 0.0;
            for (const Point& v : c.vertices) best = std::max(best, distance(x, v));
            return best;
          },
          [&](const SimplePolygon& s) {
            double best = 0.0;
            for (const Point& v : s.vertices) best = std::max(best, distance(x, v));
            return best;
          },
          [&](const BallUnion& u) {
            double best = 0.0;
            for (const BoundaryArc& a : u.arcs) {
              const Disk& disk = u.disks[a.disk];
              const double vx = x.x() - disk.center.x(), vy = x.y() - disk.center.y();
              const double rho = std::hypot(vx, vy);
              const double far = std::atan2(-vy, -vx);
              if (rho == 0.0 || angle_in_arc(far, a)) {
                best = std::max(best, rho + disk.radius);
              } else {
                best = std::max({best, distance(x, arc_point(disk, a.start)),
                                 distance(x, arc_point(disk, a.start + a.length))});
              }
            }
            return best;
          }},
      v_);
}

std::vector<Point> Domain::boundary_samples(const Point& near, double radius, std::size_t count) const {
  check_dim(near);
  return std::visit(
      overloaded{[&](const PuncturedSpace& s) { return s.punctures; },
                 [&](const HalfSpace& h) {
                   const Point foot = near + h.normal * (h.offset - dot(h.normal, near));
                   const Point tangent(-h.normal.y(), h.normal.x());
                   std::vector<Point> out;
                   for (std::size_t k = 0; k < count; ++k) {
                     const double t = count > 1 ? -1.0 + 2.0 * static_cast<double>(k) / (count - 1) : 0.0;
                     out.push_back(foot + tangent * (t * radius));
                   }
                   return out;
                 },
                 [&](const ConvexPolygon& c) { return sample_polygon(c.vertices, count); },
                 [&](const SimplePolygon& s) { return sample_polygon(s.vertices, count); },
                 [&](const BallUnion& u) {
                   double total = 0.0;
                   for (const BoundaryArc& a : u.arcs) total += a.length * u.disks[a.disk].radius;
                   std::vector<Point> out;
                   for (const BoundaryArc& a : u.arcs) {
                     const Disk& disk = u.disks[a.disk];
                     const double share = a.length * disk.radius / total;
                     const auto k = std::max<std::size_t>(1, static_cast<std::size_t>(share * count));
                     for (std::size_t i = 0; i < k; ++i) {
                       const double t = k > 1 ? static_cast<double>(i) / (k - 1) : 0.5;
                       out.push_back(arc_point(disk, a.start + t * a.length));
                     }
                   }
                   return out;
                 }},
      v_);
}

std::optional<Box> Domain::bounding_box() const {
  auto vertex_box = [](const std::vector<Point>& v) {
    Box b{v.front(), v.front()};
    for (const Point& p : v) {
      b.lo[0] = std::min(b.lo[0], p.x());
      b.lo[1] = std::min(b.lo[1], p.y());
      b.hi[0] = std::max(b.hi[0], p.x());
      b.hi[1] = std::max(b.hi[1], p.y());
    }
    return b;
  };
  return std::visit(overloaded{[](const PuncturedSpace&) -> std::optional<Box> { return std::nullopt; },
                               [](const HalfSpace&) -> std::optional<Box> { return std::nullopt; },
                               [&](const ConvexPolygon& c) -> std::optional<Box> { return vertex_box(c.vertices); },
                               [&](const SimplePolygon& s) -> std::optional<Box> { return vertex_box(s.vertices); },
                               [](const BallUnion& u) -> std::optional<Box> {
                                 Box b{Point(kInf, kInf), Point(-kInf, -kInf)};
                                 for (const Disk& d : u.disks) {
                                   b.lo[0] = std::min(b.lo[0], d.center.x() - d.radius);
                                   b.lo[1] = std::min(b.lo[1], d.center.y() - d.radius);
                                   b.hi[0] = std::max(b.hi[0], d.center.x() + d.radius);
                                   b.hi[1] = std::max(b.hi[1], d.center.y() + d.radius);
                                 }
                                 return b;
                               }},
                    v_);
}

}  // namespace jball
