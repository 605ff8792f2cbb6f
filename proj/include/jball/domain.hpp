#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "jball/point.hpp"

namespace jball {

/// R^n minus finitely many points. Any n >= 2.
struct PuncturedSpace {
  std::vector<Point> punctures;
  friend bool operator==(const PuncturedSpace&, const PuncturedSpace&) = default;
};

/// { x : <normal, x> < offset } in the plane. `normal` is unit length.
struct HalfSpace {
  Point normal;
  double offset = 0.0;
  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/// Strictly convex polygon, counterclockwise.
struct ConvexPolygon {
  std::vector<Point> vertices;
  friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;
};

/// Simple (non self-intersecting) polygon, either orientation.
struct SimplePolygon {
  std::vector<Point> vertices;
  friend bool operator==(const SimplePolygon&, const SimplePolygon&) = default;
};

struct Disk {
  Point center;
  double radius = 0.0;
  friend bool operator==(const Disk&, const Disk&) = default;
};

/// Closed arc of circle `disk` from angle `start` counterclockwise over `length` radians.
struct BoundaryArc {
  std::size_t disk = 0;
  double start = 0.0;
  double length = 0.0;
};

/// Union of open disks in the plane; the overlap graph must be connected.
struct BallUnion {
  std::vector<Disk> disks;
  /// Parts of the circles not covered by any other open disk. Derived.
  std::vector<BoundaryArc> arcs;
  friend bool operator==(const BallUnion& a, const BallUnion& b) { return a.disks == b.disks; }
};

struct NearestBoundarySet {
  std::vector<Point> points;
  double distance = 0.0;
};

struct Box {
  Point lo;
  Point hi;
};

/// A proper subdomain G of R^n. Immutable once constructed; every factory
/// validates its input and throws InvalidInput on failure.
class Domain {
 public:
  using Variant = std::variant<PuncturedSpace, HalfSpace, ConvexPolygon, SimplePolygon, BallUnion>;

  static Domain punctured(std::vector<Point> punctures);
  static Domain half_space(Point normal, double offset);
  static Domain convex_polygon(std::vector<Point> vertices);
  static Domain simple_polygon(std::vector<Point> vertices);
  static Domain ball_union(std::vector<Disk> disks);

  const Variant& variant() const { return v_; }
  std::size_t dim() const { return dim_; }
  bool bounded() const;
  /// "punctured", "half_space", "convex_polygon", "simple_polygon" or "ball_union".
  std::string type_name() const;

  /// Open-set membership; boundary points are outside.
  bool contains(const Point& x) const;

  /// d(x) = dist(x, ∂G). Throws OutsideDomain unless x ∈ G.
  double boundary_distance(const Point& x) const;

  /// d(x) when x ∈ G, nullopt otherwise. One pass; used on hot paths.
  std::optional<double> depth(const Point& x) const;

  /// Euclidean distance from any point (inside or not) to ∂G.
  double distance_to_boundary(const Point& p) const;

  /// The closest boundary points R_x. tol <= 0 selects 1e-9 * d(x).
  NearestBoundarySet nearest_boundary(const Point& x, double tol = 0.0) const;

  /// sup over ∂G of |x - z|. Throws Unsupported for unbounded domains.
  double farthest_boundary_distance(const Point& x) const;

  /// Up to `count` points of ∂G, concentrated within `radius` of `near`
  /// for unbounded boundaries. Punctures are always returned in full.
  std::vector<Point> boundary_samples(const Point& near, double radius, std::size_t count) const;

  /// Axis-aligned bounding box of G for bounded 2D domains.
  std::optional<Box> bounding_box() const;

  friend bool operator==(const Domain& a, const Domain& b) { return a.v_ == b.v_; }

 private:
  explicit Domain(Variant v, std::size_t dim) : v_(std::move(v)), dim_(dim) {}
  void check_dim(const Point& x) const;

  Variant v_;
  std::size_t dim_;
};

/// Distance from p to the closed segment [a, b] (2D) and the closest point.
double segment_distance(const Point& p, const Point& a, const Point& b, Point* foot = nullptr);

}  // namespace jball
