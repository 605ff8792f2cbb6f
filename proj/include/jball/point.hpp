#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>

#include <boost/container/small_vector.hpp>

#include "jball/errors.hpp"

namespace jball {

/// A point of R^n, n >= 2. Storage is inline up to n = 3.
class Point {
 public:
  Point() = default;
  Point(std::initializer_list<double> coords);
  explicit Point(std::span<const double> coords);
  Point(double x, double y) : c_{x, y} {}

  static Point zeros(std::size_t n);
  /// i-th standard basis vector e_{i+1} of R^n.
  static Point basis(std::size_t n, std::size_t i);

  std::size_t dim() const { return c_.size(); }
  double operator[](std::size_t i) const { return c_[i]; }
  double& operator[](std::size_t i) { return c_[i]; }
  double x() const { return c_[0]; }
  double y() const { return c_[1]; }
  std::span<const double> coords() const { return {c_.data(), c_.size()}; }

  bool is_finite() const;

  Point& operator+=(const Point& o);
  Point& operator-=(const Point& o);
  Point& operator*=(double s);
  Point& operator/=(double s) { return *this *= 1.0 / s; }

  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator-(Point a) { return a *= -1.0; }
  friend Point operator*(Point a, double s) { return a *= s; }
  friend Point operator*(double s, Point a) { return a *= s; }
  friend Point operator/(Point a, double s) { return a /= s; }
  friend bool operator==(const Point& a, const Point& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  boost::container::small_vector<double, 3> c_;
};

double dot(const Point& a, const Point& b);
double norm(const Point& a);
double distance(const Point& a, const Point& b);
/// Point on the segment [a, b] at parameter t in [0, 1].
Point lerp(const Point& a, const Point& b, double t);

/// Throws DimensionMismatch unless a and b have the same dimension.
void require_same_dim(const Point& a, const Point& b, const char* what);

/// 2D cross product (z-component).
inline double cross(const Point& a, const Point& b) { return a.x() * b.y() - a.y() * b.x(); }

}  // namespace jball
