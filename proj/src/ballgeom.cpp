#include "jball/ballgeom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <unordered_map>

#include "jball/punctured.hpp"

namespace jball {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kFieldClamp = 1e6;
constexpr int kChordSamples = 64;
constexpr std::size_t kStrictPairs = 10000;
constexpr std::size_t kEdgePairs = 2500;

Box square_box(const Point& c, double half) {
  return {Point(c.x() - half, c.y() - half), Point(c.x() + half, c.y() + half)};
}

double box_width(const Box& b) { return std::max(b.hi.x() - b.lo.x(), b.hi.y() - b.lo.y()); }

double region_scale(const Region& r) { return box_width(r.bbox); }

class Sampler {
 public:
  Sampler(const Region& r, std::uint64_t seed)
      : r_(r), rng_(seed), ux_(r.bbox.lo.x(), r.bbox.hi.x()), uy_(r.bbox.lo.y(), r.bbox.hi.y()) {}

  // Uniform point of the region by rejection; nullopt after many misses.
  std::optional<Point> inside() {
    for (int attempt = 0; attempt < 100000; ++attempt) {
      Point p(ux_(rng_), uy_(rng_));
      if (r_.contains(p)) return p;
    }
    return std::nullopt;
  }
  double angle() { return std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng_); }

 private:
  const Region& r_;
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> ux_, uy_;
};

struct ChordProbe {
  double worst_excess = -kInf;  // max of value - level along the open chord
  Point worst;
};

ChordProbe probe_chord(const Region& r, const Point& a, const Point& b) {
  ChordProbe out;
  int best_k = 1;
  for (int k = 1; k <= kChordSamples; ++k) {
    const Point p = lerp(a, b, static_cast<double>(k) / (kChordSamples + 1));
    const double v = r.value(p) - r.level;
    if (v > out.worst_excess) {
      out.worst_excess = v;
      out.worst = p;
      best_k = k;
    }
  }
  // Golden-section refinement around the worst sample: violations near
  // tangency are thin and can fall between samples.
  double lo = static_cast<double>(best_k - 1) / (kChordSamples + 1);
  double hi = static_cast<double>(best_k + 1) / (kChordSamples + 1);
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  auto f = [&](double t) { return r.value(lerp(a, b, t)) - r.level; };
  double t1 = hi - g * (hi - lo), t2 = lo + g * (hi - lo);
  double f1 = f(t1), f2 = f(t2);
  for (int it = 0; it < 48; ++it) {
    if (f1 > f2) {
      hi = t2;
      t2 = t1;
      f2 = f1;
      t1 = hi - g * (hi - lo);
      f1 = f(t1);
    } else {
      lo = t1;
      t1 = t2;
      f1 = f2;
      t2 = lo + g * (hi - lo);
      f2 = f(t2);
    }
  }
  for (const auto& [t, v] : {std::pair{t1, f1}, std::pair{t2, f2}}) {
    if (v > out.worst_excess) {
      out.worst_excess = v;
      out.worst = lerp(a, b, t);
    }
  }
  return out;
}

// Bisects between an inside point and an outside point; returns the pair
// (last inside, first outside) at separation below `eps`.
std::pair<Point, Point> bisect_exit(const Region& r, Point in, Point out, double eps) {
  for (int it = 0; it < 200 && distance(in, out) > eps; ++it) {
    const Point mid = lerp(in, out, 0.5);
    if (r.contains(mid)) {
      in = mid;
    } else {
      out = mid;
    }
  }
  return {in, out};
}

// First exit of the ray from `from` in direction `dir` (unit), marching in
// steps of `step` up to `reach`.
std::optional<std::pair<Point, Point>> first_exit(const Region& r, const Point& from, const Point& dir,
                                                  double step, double reach, double eps) {
  Point prev = from;
  for (double s = step; s <= reach + step; s += step) {
    const Point p = from + dir * s;
    if (!r.contains(p)) return bisect_exit(r, prev, p, eps);
    prev = p;
  }
  return std::nullopt;
}

void flood(const std::vector<std::uint8_t>& mask, int nx, int ny, bool eight, std::vector<int>& label,
           int id, int si, int sj) {
  std::vector<std::pair<int, int>> stack{{si, sj}};
  label[static_cast<std::size_t>(sj) * nx + si] = id;
  while (!stack.empty()) {
    const auto [i, j] = stack.back();
    stack.pop_back();
    for (int dj = -1; dj <= 1; ++dj) {
      for (int di = -1; di <= 1; ++di) {
        if ((di == 0 && dj == 0) || (!eight && di != 0 && dj != 0)) continue;
        const int ni = i + di, nj = j + dj;
        if (ni < 0 || nj < 0 || ni >= nx || nj >= ny) continue;
        const std::size_t k = static_cast<std::size_t>(nj) * nx + ni;
        if (!mask[k] || label[k] >= 0) continue;
        label[k] = id;
        stack.emplace_back(ni, nj);
      }
    }
  }
}

int label_components(const std::vector<std::uint8_t>& mask, int nx, int ny, bool eight, std::vector<int>& label) {
  label.assign(mask.size(), -1);
  int n = 0;
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const std::size_t k = static_cast<std::size_t>(j) * nx + i;
      if (mask[k] && label[k] < 0) flood(mask, nx, ny, eight, label, n++, i, j);
    }
  }
  return n;
}

// Compass search for a local minimum of the region value.
Point local_minimum(const Region& r, Point p, double step) {
  double best = r.value(p);
  const double dirs[8][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  const double floor = 1e-14 * std::max(1.0, norm(p));
  while (step > floor) {
    bool moved = false;
    for (const auto& d : dirs) {
      const Point q(p.x() + d[0] * step, p.y() + d[1] * step);
      const double v = r.value(q);
      if (v < best) {
        best = v;
        p = q;
        moved = true;
      }
    }
    if (!moved) step *= 0.5;
  }
  return p;
}

}  // namespace

std::size_t RegionGrid::count() const {
  return static_cast<std::size_t>(std::count(cells.begin(), cells.end(), std::uint8_t{1}));
}

Region j_ball_region(const Domain& domain, const Point& x, Radius m) {
  if (domain.dim() != 2) throw Unsupported("region analysis is planar");
  const double dx = domain.boundary_distance(x);
  const AnnulusBounds ab = annulus_bounds(dx, m);
  Region r;
  r.level = m.value();
  r.center = x;
  r.bbox = square_box(x, 1.05 * ab.outer_radius);
  if (const auto gb = domain.bounding_box()) {
    r.bbox.lo = Point(std::max(r.bbox.lo.x(), gb->lo.x()), std::max(r.bbox.lo.y(), gb->lo.y()));
    r.bbox.hi = Point(std::min(r.bbox.hi.x(), gb->hi.x()), std::min(r.bbox.hi.y(), gb->hi.y()));
  }
  r.gradient_bound = 3.0 * std::exp(m.value()) / dx;
  r.value = [domain, x, dx](const Point& y) {
    const auto dy = domain.depth(y);
    if (!dy) return kInf;
    return j_from_depths(distance(x, y), dx, *dy);
  };
  return r;
}

Region qh_punctured_region(const Point& puncture, const Point& x, Radius m) {
  const double rx = distance(x, puncture);
  if (!(rx > 0.0)) throw OutsideDomain("qh_punctured_region: center at the puncture");
  Region r;
  r.level = m.value();
  r.center = x;
  // D(x, M) lies in the annulus e^-M |x-p| < |y-p| < e^M |x-p|.
  r.bbox = square_box(puncture, 1.05 * std::exp(m.value()) * rx);
  r.gradient_bound = std::exp(m.value()) / rx;
  r.value = [puncture, x](const Point& y) {
    if (y == puncture) return kInf;
    return qh_punctured_closed_form(puncture, x, y);
  };
  return r;
}

RegionGrid rasterize(const Region& region, double h) {
  if (!(h > 0.0)) throw InvalidInput("rasterize: spacing must be positive");
  RegionGrid g;
  g.h = h;
  g.bbox = region.bbox;
  g.nx = static_cast<int>(std::ceil((region.bbox.hi.x() - region.bbox.lo.x()) / h));
  g.ny = static_cast<int>(std::ceil((region.bbox.hi.y() - region.bbox.lo.y()) / h));
  if (static_cast<double>(g.nx) * g.ny > 6.4e7) throw ResolutionError("rasterize: grid too large");
  // Center the lattice in the box.
  const double ox = 0.5 * (region.bbox.lo.x() + region.bbox.hi.x()) - 0.5 * (g.nx - 1) * h;
  const double oy = 0.5 * (region.bbox.lo.y() + region.bbox.hi.y()) - 0.5 * (g.ny - 1) * h;
  g.origin = Point(ox, oy);
  const std::size_t n = static_cast<std::size_t>(g.nx) * g.ny;
  g.cells.assign(n, 0);
  g.field.assign(n, kFieldClamp);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const double v = region.value(g.cell_center(i, j)) - region.level;
      const std::size_t k = static_cast<std::size_t>(j) * g.nx + i;
      g.field[k] = std::clamp(v, -kFieldClamp, kFieldClamp);
      g.cells[k] = v < 0.0 ? 1 : 0;
    }
  }
  return g;
}

RegionGrid rasterize(const Region& region, int resolution) {
  if (resolution < 8) throw InvalidInput("rasterize: resolution must be at least 8");
  return rasterize(region, box_width(region.bbox) / resolution);
}

RegionGrid extract_region(const Domain& domain, const Point& x, Radius m, double h) {
  const Region region = j_ball_region(domain, x, m);
  const double outer = annulus_bounds(domain.boundary_distance(x), m).outer_radius;
  if (!(h > 0.0) || h > outer / 64.0) {
    throw ResolutionError("extract_region: spacing must not exceed outer radius / 64");
  }
  return rasterize(region, h);
}

std::vector<std::vector<Point>> trace_boundary(const RegionGrid& grid) {
  if (grid.count() == 0) throw InvalidInput("trace_boundary: empty region");
  const int nx = grid.nx, ny = grid.ny;
  // Samples outside the raster count as outside; lattice indices run -1..n.
  auto field = [&](int i, int j) {
    if (i < 0 || j < 0 || i >= nx || j >= ny) return kFieldClamp;
    return grid.field[static_cast<std::size_t>(j) * nx + i];
  };
  auto inside = [&](int i, int j) { return i >= 0 && j >= 0 && i < nx && j < ny && grid.at(i, j); };
  const long long W = nx + 2;
  // Edge ids: horizontal (i,j)-(i+1,j) and vertical (i,j)-(i,j+1), shifted by one.
  auto hid = [&](int i, int j) { return 2 * ((static_cast<long long>(j) + 1) * W + (i + 1)); };
  auto vid = [&](int i, int j) { return 2 * ((static_cast<long long>(j) + 1) * W + (i + 1)) + 1; };
  auto crossing = [&](long long id) {
    const long long base = id / 2;
    const int i = static_cast<int>(base % W) - 1, j = static_cast<int>(base / W) - 1;
    const int i2 = (id % 2 == 0) ? i + 1 : i, j2 = (id % 2 == 0) ? j : j + 1;
    const double f0 = field(i, j), f1 = field(i2, j2);
    const double t = std::clamp(f0 / (f0 - f1), 0.0, 1.0);
    const Point a = grid.cell_center(i, j), b = grid.cell_center(i2, j2);
    return lerp(a, b, t);
  };
  std::unordered_map<long long, std::vector<long long>> adj;
  auto link = [&](long long a, long long b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (int j = -1; j < ny; ++j) {
    for (int i = -1; i < nx; ++i) {
      const bool bl = inside(i, j), br = inside(i + 1, j), tr = inside(i + 1, j + 1), tl = inside(i, j + 1);
      const int config = bl | (br << 1) | (tr << 2) | (tl << 3);
      if (config == 0 || config == 15) continue;
      const long long eb = hid(i, j), er = vid(i + 1, j), et = hid(i, j + 1), el = vid(i, j);
      switch (config) {
        case 1: case 14: link(eb, el); break;
        case 2: case 13: link(eb, er); break;
        case 4: case 11: link(er, et); break;
        case 8: case 7: link(et, el); break;
        case 3: case 12: link(el, er); break;
        case 6: case 9: link(eb, et); break;
        case 5:  // bl and tr inside: keep them separate
          link(eb, el);
          link(er, et);
          break;
        case 10:  // br and tl inside
          link(eb, er);
          link(et, el);
          break;
        default: break;
      }
    }
  }
  std::vector<std::vector<Point>> loops;
  std::map<long long, bool> visited;
  for (const auto& [start, _] : adj) visited[start] = false;
  for (auto& [start, seen] : visited) {
    if (seen) continue;
    std::vector<Point> loop;
    long long prev = -1, cur = start;
    while (!visited[cur]) {
      visited[cur] = true;
      loop.push_back(crossing(cur));
      const auto& nb = adj[cur];
      const long long next = nb[0] != prev ? nb[0] : nb[1];
      prev = cur;
      cur = next;
    }
    loops.push_back(std::move(loop));
  }
  return loops;
}

CheckReport convexity_check(const Region& region, Mode mode, std::size_t trials, double tol,
                            std::uint64_t seed) {
  CheckReport rep;
  rep.predicate = mode == Mode::Strict ? "strict_convexity" : "convexity";
  rep.tol = tol;
  Sampler sampler(region, seed);
  double worst = -kInf;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto a = sampler.inside();
    const auto b = sampler.inside();
    if (!a || !b) break;
    ++rep.samples_used;
    const ChordProbe probe = probe_chord(region, *a, *b);
    worst = std::max(worst, probe.worst_excess);
    if (probe.worst_excess >= tol) {
      rep.passed = false;
      rep.witness = Witness{"chord", {*a, *b, probe.worst}, "chord endpoints inside, third point outside"};
      break;
    }
  }
  const double scale = region_scale(region);
  const double reach = scale * std::numbers::sqrt2;
  const double step = scale / 512.0;
  const double eps = 1e-13 * scale;

  // Chords between points just inside the boundary: shallow dents are missed
  // by chords between uniform samples.
  Sampler edge(region, seed ^ 0x5851f42d4c957f2dULL);
  const std::size_t edge_pairs = rep.passed ? std::min<std::size_t>(trials / 10, kEdgePairs) : 0;
  for (std::size_t t = 0; t < edge_pairs; ++t) {
    const double a1 = edge.angle();
    const double a2 = a1 + 0.05 + (std::numbers::pi - 0.05) * edge.angle() / (2.0 * std::numbers::pi);
    const auto e1 = first_exit(region, region.center, Point(std::cos(a1), std::sin(a1)), step, reach, eps);
    const auto e2 = first_exit(region, region.center, Point(std::cos(a2), std::sin(a2)), step, reach, eps);
    if (!e1 || !e2) continue;
    ++rep.samples_used;
    const ChordProbe probe = probe_chord(region, e1->first, e2->first);
    worst = std::max(worst, probe.worst_excess);
    if (probe.worst_excess >= tol) {
      rep.passed = false;
      rep.witness = Witness{"chord", {e1->first, e2->first, probe.worst}, "chord endpoints inside, third point outside"};
      break;
    }
  }
  rep.set("max_chord_excess", worst);
  if (!rep.passed || mode == Mode::NonStrict) return rep;

  // Boundary pairs: the midpoint of two boundary points must sit strictly inside.
  double min_depth = kInf;
  Sampler angles(region, seed ^ 0x9e3779b97f4a7c15ULL);
  const std::size_t pairs = std::min<std::size_t>(trials, kStrictPairs);
  for (std::size_t t = 0; t < pairs; ++t) {
    const double a1 = angles.angle(), a2 = angles.angle();
    const double sep = std::abs(std::remainder(a1 - a2, 2.0 * std::numbers::pi));
    if (sep < 0.05) continue;
    const auto e1 = first_exit(region, region.center, Point(std::cos(a1), std::sin(a1)), step, reach, eps);
    const auto e2 = first_exit(region, region.center, Point(std::cos(a2), std::sin(a2)), step, reach, eps);
    if (!e1 || !e2) continue;
    ++rep.samples_used;
    const Point p1 = e1->first, p2 = e2->first;
    const Point mid = lerp(p1, p2, 0.5);
    double depth = 0.0;
    Point probe_out = mid;
    if (region.contains(mid) && !(mid == region.center)) {
      const Point dir = (mid - region.center) / distance(mid, region.center);
      if (const auto e = first_exit(region, mid, dir, step, reach, eps)) {
        depth = distance(mid, e->first);
        probe_out = mid + dir * (depth + 2.0 * tol * scale);
      }
    }
    min_depth = std::min(min_depth, depth);
    if (depth < tol * scale && !region.contains(probe_out)) {
      rep.passed = false;
      rep.witness = Witness{"flat_chord", {p1, p2, probe_out},
                            "boundary pair whose midpoint lies within tol of the complement"};
      break;
    }
  }
  rep.set("min_midpoint_depth", min_depth);
  return rep;
}

CheckReport starlikeness_check(const Region& region, const Point& center, Mode mode, std::size_t rays,
                               double tol, std::uint64_t seed) {
  if (!region.contains(center)) throw InvalidInput("starlikeness_check: center is not in the region");
  CheckReport rep;
  rep.predicate = mode == Mode::Strict ? "strict_starlikeness" : "starlikeness";
  rep.tol = tol;
  if (mode == Mode::NonStrict) {
    Sampler sampler(region, seed);
    double worst = -kInf;
    for (std::size_t t = 0; t < rays; ++t) {
      const auto y = sampler.inside();
      if (!y) break;
      ++rep.samples_used;
      const ChordProbe probe = probe_chord(region, center, *y);
      worst = std::max(worst, probe.worst_excess);
      if (probe.worst_excess >= tol) {
        rep.passed = false;
        rep.witness = Witness{"segment", {center, *y, probe.worst}, "segment from center leaves the region"};
        break;
      }
    }
    rep.set("max_segment_excess", worst);
    return rep;
  }

  const Box& b = region.bbox;
  double reach = 0.0;
  for (double cx : {b.lo.x(), b.hi.x()}) {
    for (double cy : {b.lo.y(), b.hi.y()}) reach = std::max(reach, distance(center, Point(cx, cy)));
  }
  constexpr int kSamplesPerRay = 4096;
  const double step = reach / kSamplesPerRay;
  const double eps = 1e-10;
  const double offset = Sampler(region, seed).angle() / static_cast<double>(rays);
  std::size_t max_crossings = 0;
  for (std::size_t k = 0; k < rays; ++k) {
    const double theta = offset + 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(rays);
    const Point dir(std::cos(theta), std::sin(theta));
    ++rep.samples_used;
    bool in = true;
    std::size_t crossings = 0;
    Point prev = center;
    for (int s = 1; s <= kSamplesPerRay; ++s) {
      const Point p = center + dir * (step * s);
      const bool now = region.contains(p);
      if (now != in) {
        ++crossings;
        if (now && !rep.witness) {
          // Re-entry: locate the outside stretch precisely for the witness.
          const Point last_in = bisect_exit(region, p, prev, eps).first;
          rep.passed = false;
          rep.witness = Witness{"ray_reentry", {center, prev, last_in},
                                "ray leaves the region and re-enters it"};
          rep.set("reentry_angle", theta);
        }
      }
      in = now;
      prev = p;
    }
    max_crossings = std::max(max_crossings, crossings);
    if (!rep.passed) break;
  }
  rep.set("max_boundary_crossings", static_cast<double>(max_crossings));
  return rep;
}

Topology topology_check(const RegionGrid& grid) {
  std::vector<int> label;
  Topology t;
  const int n = label_components(grid.cells, grid.nx, grid.ny, false, label);
  t.components = static_cast<std::size_t>(n);
  std::vector<std::uint8_t> has_core(static_cast<std::size_t>(n) + 1, 0);
  for (int j = 1; j + 1 < grid.ny; ++j) {
    for (int i = 1; i + 1 < grid.nx; ++i) {
      bool core = true;
      for (int dj = -1; dj <= 1 && core; ++dj) {
        for (int di = -1; di <= 1 && core; ++di) core = grid.at(i + di, j + dj);
      }
      if (core) has_core[static_cast<std::size_t>(label[static_cast<std::size_t>(j) * grid.nx + i])] = 1;
    }
  }
  t.resolved_components = static_cast<std::size_t>(std::count(has_core.begin(), has_core.end(), 1));
  // Complement with a one-cell outside frame, 8-connected.
  const int nx = grid.nx + 2, ny = grid.ny + 2;
  std::vector<std::uint8_t> comp(static_cast<std::size_t>(nx) * ny, 1);
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      comp[static_cast<std::size_t>(j + 1) * nx + (i + 1)] = grid.at(i, j) ? 0 : 1;
    }
  }
  std::vector<int> clabel;
  const int holes_plus_frame = label_components(comp, nx, ny, true, clabel);
  t.simply_connected = holes_plus_frame == 1;
  return t;
}

double default_sphere_band(const Region& region, double h) {
  return std::max(1e-3, 2.0 * h * region.gradient_bound);
}

SphereComponents sphere_components(const Region& region, double band, double h) {
  if (!(band > 0.0)) throw InvalidInput("sphere_components: band must be positive");
  const RegionGrid grid = rasterize(region, h);
  const int nx = grid.nx, ny = grid.ny;
  std::vector<std::uint8_t> mask(grid.cells.size(), 0);
  for (std::size_t k = 0; k < mask.size(); ++k) {
    mask[k] = std::abs(grid.field[k]) < band && grid.field[k] < kFieldClamp ? 1 : 0;
  }
  std::vector<int> label;
  SphereComponents out;
  out.band = band;
  const int n = label_components(mask, nx, ny, true, label);
  out.components = static_cast<std::size_t>(n);
  // A component is part of ∂B when it touches an open-ball cell.
  std::vector<bool> attached(static_cast<std::size_t>(n), false);
  std::vector<std::size_t> argmin(static_cast<std::size_t>(n), SIZE_MAX);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const std::size_t k = static_cast<std::size_t>(j) * nx + i;
      if (label[k] < 0) continue;
      const auto c = static_cast<std::size_t>(label[k]);
      if (argmin[c] == SIZE_MAX || grid.field[k] < grid.field[argmin[c]]) argmin[c] = k;
      for (int dj = -1; dj <= 1 && !attached[c]; ++dj) {
        for (int di = -1; di <= 1; ++di) {
          const int ni = i + di, nj = j + dj;
          if (ni < 0 || nj < 0 || ni >= nx || nj >= ny) continue;
          if (grid.at(ni, nj)) {
            attached[c] = true;
            break;
          }
        }
      }
    }
  }
  for (int c = 0; c < n; ++c) {
    if (attached[static_cast<std::size_t>(c)]) continue;
    const std::size_t k = argmin[static_cast<std::size_t>(c)];
    const Point start = grid.cell_center(static_cast<int>(k % nx), static_cast<int>(k / nx));
    const Point p = local_minimum(region, start, h);
    if (region.value(p) <= region.level + 1e-9) {
      out.isolated_points.push_back(p);
      out.closure_equals_closed_ball = false;
    }
  }
  return out;
}

SphereComponents sphere_components(const Domain& domain, const Point& x, Radius m, double band, double h) {
  return sphere_components(j_ball_region(domain, x, m), band, h);
}

}  // namespace jball
