#include "jball/point.hpp"

#include <algorithm>
#include <sstream>

namespace jball {

Point::Point(std::initializer_list<double> coords) : c_(coords.begin(), coords.end()) {}

Point::Point(std::span<const double> coords) : c_(coords.begin(), coords.end()) {}

Point Point::zeros(std::size_t n) {
  Point p;
  p.c_.assign(n, 0.0);
  return p;
}

Point Point::basis(std::size_t n, std::size_t i) {
  Point p = zeros(n);
  p.c_.at(i) = 1.0;
  return p;
}

bool Point::is_finite() const {
  return std::all_of(c_.begin(), c_.end(), [](double v) { return std::isfinite(v); });
}

Point& Point::operator+=(const Point& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Point& Point::operator-=(const Point& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Point& Point::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

std::string Point::to_string() const {
  std::ostringstream os;
  os.precision(12);
  os << '(';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << c_[i];
  os << ')';
  return os.str();
}

double dot(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Point& a) {
  if (a.dim() == 2) return std::hypot(a[0], a[1]);
  return std::sqrt(dot(a, a));
}

double distance(const Point& a, const Point& b) {
  if (a.dim() == 2) return std::hypot(a[0] - b[0], a[1] - b[1]);
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

Point lerp(const Point& a, const Point& b, double t) {
  Point p = a;
  for (std::size_t i = 0; i < a.dim(); ++i) p[i] = a[i] + t * (b[i] - a[i]);
  return p;
}

void require_same_dim(const Point& a, const Point& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(a.dim()) +
                            " vs " + std::to_string(b.dim()));
  }
}

}  // namespace jball
