#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <utility>

#include <boost/math/tools/minima.hpp>

#include "jball/metric.hpp"

namespace jball {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// 16-neighbour stencil: axis, diagonal and knight moves.
constexpr std::array<std::array<int, 2>, 16> kStencil{{{1, 0},
                                                        {-1, 0},
                                                        {0, 1},
                                                        {0, -1},
                                                        {1, 1},
                                                        {1, -1},
                                                        {-1, 1},
                                                        {-1, -1},
                                                        {1, 2},
                                                        {2, 1},
                                                        {-1, 2},
                                                        {-2, 1},
                                                        {1, -2},
                                                        {2, -1},
                                                        {-1, -2},
                                                        {-2, -1}}};

// Simpson-rule quasihyperbolic length of [a, b] given the endpoint depths.
// The balls B(a, d(a)) and B(b, d(b)) lie in G; if they overlap along the
// segment the whole segment does. Returns +inf otherwise.
double segment_weight(const Domain& g, const Point& a, double da, const Point& b, double db) {
  const double len = distance(a, b);
  if (len == 0.0) return 0.0;
  if (!(da + db > len)) return kInf;
  const auto dm = g.depth(lerp(a, b, 0.5));
  if (!dm) return kInf;
  // Composite rule once the segment is long against the local depth, so a
  // path hugging the boundary cannot profit from quadrature error.
  const double local = std::min({da, db, *dm});
  const int panels = std::min(64, static_cast<int>(std::ceil(len / (0.25 * local))));
  if (panels <= 1) return len / 6.0 * (1.0 / da + 4.0 / *dm + 1.0 / db);
  double sum = 1.0 / da + 1.0 / db;
  for (int k = 1; k < 2 * panels; ++k) {
    const auto d = g.depth(lerp(a, b, static_cast<double>(k) / (2 * panels)));
    if (!d) return kInf;
    sum += (k % 2 ? 4.0 : 2.0) / *d;
  }
  return len / (6.0 * panels) * sum;
}

double segment_weight(const Domain& g, const Point& a, const Point& b) {
  const auto da = g.depth(a);
  const auto db = g.depth(b);
  if (!da || !db) return kInf;
  return segment_weight(g, a, *da, b, *db);
}

struct Grid {
  Point origin;
  double h = 0.0;
  int nx = 0, ny = 0;
  std::vector<double> depth;  // NaN for excluded nodes
  Point node(int i, int j) const { return Point(origin.x() + i * h, origin.y() + j * h); }
};

Grid build_grid(const Domain& g, const Point& x, const Point& y, double h) {
  const double dx = g.boundary_distance(x), dy = g.boundary_distance(y);
  const double margin = std::max(distance(x, y), std::max(dx, dy));
  double lox = std::min(x.x(), y.x()) - margin, hix = std::max(x.x(), y.x()) + margin;
  double loy = std::min(x.y(), y.y()) - margin, hiy = std::max(x.y(), y.y()) + margin;
  if (const auto box = g.bounding_box()) {
    lox = box->lo.x();
    loy = box->lo.y();
    hix = box->hi.x();
    hiy = box->hi.y();
  }
  if (h <= 0.0) h = std::max(hix - lox, hiy - loy) / 256.0;
  Grid grid;
  grid.h = h;
  grid.origin = Point(lox, loy);
  grid.nx = static_cast<int>(std::ceil((hix - lox) / h)) + 1;
  grid.ny = static_cast<int>(std::ceil((hiy - loy) / h)) + 1;
  if (static_cast<double>(grid.nx) * grid.ny > 4.0e7) {
    throw ResolutionError("qh_distance: grid spacing too fine for the search window");
  }
  grid.depth.assign(static_cast<std::size_t>(grid.nx) * grid.ny, std::nan(""));
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const auto d = g.depth(grid.node(i, j));
      if (d && *d >= 0.5 * h) grid.depth[static_cast<std::size_t>(j) * grid.nx + i] = *d;
    }
  }
  return grid;
}

std::vector<Point> graph_path(const Domain& g, const Grid& grid, const Point& x, const Point& y,
                              double* length) {
  const std::size_t n_grid = grid.depth.size();
  const std::size_t src = n_grid, dst = n_grid + 1;
  const double dx = g.boundary_distance(x), dy = g.boundary_distance(y);

  // Endpoint links to nearby grid nodes.
  auto links = [&](const Point& p, double dp) {
    std::vector<std::pair<std::size_t, double>> out;
    const int ci = static_cast<int>(std::round((p.x() - grid.origin.x()) / grid.h));
    const int cj = static_cast<int>(std::round((p.y() - grid.origin.y()) / grid.h));
    for (int j = cj - 3; j <= cj + 3; ++j) {
      for (int i = ci - 3; i <= ci + 3; ++i) {
        if (i < 0 || j < 0 || i >= grid.nx || j >= grid.ny) continue;
        const std::size_t id = static_cast<std::size_t>(j) * grid.nx + i;
        const double dn = grid.depth[id];
        if (std::isnan(dn)) continue;
        const Point q = grid.node(i, j);
        if (distance(p, q) > 2.5 * grid.h) continue;
        const double w = segment_weight(g, p, dp, q, dn);
        if (std::isfinite(w)) out.emplace_back(id, w);
      }
    }
    return out;
  };
  const auto src_links = links(x, dx);
  const auto dst_links = links(y, dy);
  std::vector<double> to_dst(n_grid + 2, kInf);
  for (const auto& [id, w] : dst_links) to_dst[id] = w;
  to_dst[src] = segment_weight(g, x, dx, y, dy);

  std::vector<double> dist(n_grid + 2, kInf);
  std::vector<std::size_t> prev(n_grid + 2, SIZE_MAX);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[src] = 0.0;
  pq.emplace(0.0, src);
  auto relax = [&](std::size_t from, std::size_t to, double w) {
    if (!std::isfinite(w)) return;
    const double nd = dist[from] + w;
    if (nd < dist[to]) {
      dist[to] = nd;
      prev[to] = from;
      pq.emplace(nd, to);
    }
  };
  while (!pq.empty()) {
    const auto [du, u] = pq.top();
    pq.pop();
    if (du > dist[u]) continue;
    if (u == dst) break;
    relax(u, dst, to_dst[u]);
    if (u == src) {
      for (const auto& [id, w] : src_links) relax(src, id, w);
      continue;
    }
    const int i = static_cast<int>(u % grid.nx), j = static_cast<int>(u / grid.nx);
    const Point pu = grid.node(i, j);
    const double d_u = grid.depth[u];
    for (const auto& [oi, oj] : kStencil) {
      const int ni = i + oi, nj = j + oj;
      if (ni < 0 || nj < 0 || ni >= grid.nx || nj >= grid.ny) continue;
      const std::size_t v = static_cast<std::size_t>(nj) * grid.nx + ni;
      const double d_v = grid.depth[v];
      if (std::isnan(d_v) || dist[v] <= du) continue;
      relax(u, v, segment_weight(g, pu, d_u, grid.node(ni, nj), d_v));
    }
  }
  if (!std::isfinite(dist[dst])) {
    throw ResolutionError("qh_distance: endpoints are disconnected at grid spacing " +
                          std::to_string(grid.h));
  }
  *length = dist[dst];
  std::vector<Point> path;
  for (std::size_t v = dst; v != SIZE_MAX; v = prev[v]) {
    if (v == src) {
      path.push_back(x);
    } else if (v == dst) {
      path.push_back(y);
    } else {
      path.push_back(grid.node(static_cast<int>(v % grid.nx), static_cast<int>(v / grid.nx)));
    }
  }
  std::reverse(path.begin(), path.end());
  return path;
}

double polyline_length(const std::vector<Point>& p) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) s += distance(p[i], p[i + 1]);
  return s;
}

std::vector<Point> resample(const std::vector<Point>& p, std::size_t segments) {
  const double total = polyline_length(p);
  std::vector<Point> out{p.front()};
  std::size_t k = 0;
  double walked = 0.0;
  for (std::size_t s = 1; s < segments; ++s) {
    const double target = total * static_cast<double>(s) / static_cast<double>(segments);
    while (k + 1 < p.size() && walked + distance(p[k], p[k + 1]) < target) {
      walked += distance(p[k], p[k + 1]);
      ++k;
    }
    const double len = distance(p[k], p[k + 1]);
    out.push_back(lerp(p[k], p[k + 1], len > 0 ? (target - walked) / len : 0.0));
  }
  out.push_back(p.back());
  return out;
}

std::vector<Point> subdivide(const std::vector<Point>& p, double max_len) {
  std::vector<Point> out{p.front()};
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const auto pieces = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(distance(p[i], p[i + 1]) / max_len)));
    for (std::size_t k = 1; k <= pieces; ++k) out.push_back(lerp(p[i], p[i + 1], static_cast<double>(k) / pieces));
  }
  return out;
}

// Gauss-Seidel relaxation: each interior vertex moves along the normal of its
// neighbour chord to minimise the length of its two incident segments.
void relax(const Domain& g, std::vector<Point>& p, int max_sweeps) {
  if (p.size() < 3) return;
  double energy = qh_polyline_length(g, p);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      const Point& a = p[i - 1];
      const Point& b = p[i + 1];
      const Point chord = b - a;
      const double clen = norm(chord);
      if (clen == 0.0) continue;
      const Point normal(-chord.y() / clen, chord.x() / clen);
      const Point base = p[i];
      const auto dbase = g.depth(base);
      if (!dbase) continue;
      const double reach = std::min(0.5 * *dbase, std::max(distance(a, base), distance(base, b)));
      auto local = [&](double t) {
        const Point q = base + normal * t;
        const double e = segment_weight(g, a, q) + segment_weight(g, q, b);
        return std::isfinite(e) ? e : 1e300;
      };
      const double e0 = local(0.0);
      const auto [t, e] = boost::math::tools::brent_find_minima(local, -reach, reach, 26);
      if (e < e0) p[i] = base + normal * t;
    }
    const double next = qh_polyline_length(g, p);
    const bool converged = energy - next <= 1e-12 * next;
    energy = next;
    if (converged) break;
  }
}

bool admissible(const Domain& g, const std::vector<Point>& p) {
  return std::isfinite(qh_polyline_length(g, p));
}

}  // namespace

double qh_polyline_length(const Domain& domain, const std::vector<Point>& path) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) s += segment_weight(domain, path[i], path[i + 1]);
  return s;
}

QhResult qh_path(const Domain& domain, const Point& x, const Point& y, QhOptions opts) {
  if (domain.dim() != 2) throw Unsupported("qh_distance is implemented for planar domains");
  require_same_dim(x, y, "qh_distance");
  domain.boundary_distance(x);
  domain.boundary_distance(y);
  QhResult r;
  if (x == y) {
    r.path = {x};
    return r;
  }
  const Grid grid = build_grid(domain, x, y, opts.h);
  r.h = grid.h;
  r.nodes = static_cast<std::size_t>(std::count_if(grid.depth.begin(), grid.depth.end(),
                                                   [](double d) { return !std::isnan(d); }));
  std::vector<Point> path = graph_path(domain, grid, x, y, &r.graph_distance);
  r.distance = r.graph_distance;
  r.path = path;
  if (!opts.refine) return r;

  // Coarse-to-fine: relax a short polyline first so low-frequency error is
  // removed cheaply, then subdivide until segments are at most h long.
  const double total = polyline_length(path);
  std::size_t target = std::max<std::size_t>(4, static_cast<std::size_t>(std::ceil(total / grid.h)));
  std::vector<std::size_t> levels{target};
  while (levels.back() >= 8) levels.push_back((levels.back() + 1) / 2);
  std::reverse(levels.begin(), levels.end());
  std::vector<Point> poly = resample(path, levels.front());
  std::size_t level = 0;
  while (!admissible(domain, poly) && level + 1 < levels.size()) poly = resample(path, levels[++level]);
  if (!admissible(domain, poly)) poly = subdivide(path, grid.h);
  relax(domain, poly, 400);
  for (++level; level < levels.size(); ++level) {
    std::vector<Point> finer = resample(poly, levels[level]);
    if (admissible(domain, finer)) poly = std::move(finer);
    relax(domain, poly, 400);
  }
  const double refined = qh_polyline_length(domain, poly);
  if (refined < r.distance) {
    r.distance = refined;
    r.path = std::move(poly);
  }
  return r;
}

double qh_distance(const Domain& domain, const Point& x, const Point& y, double h) {
  QhOptions opts;
  opts.h = h;
  return qh_path(domain, x, y, opts).distance;
}

}  // namespace jball
