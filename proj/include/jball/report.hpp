#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jball/point.hpp"

namespace jball {

/// Concrete evidence that a predicate failed: a chord, a ray, or a point set
/// that can be re-checked by direct membership calls.
struct Witness {
  std::string kind;
  std::vector<Point> points;
  std::string note;
};

/// Outcome of a geometric predicate.
struct CheckReport {
  std::string predicate;
  bool passed = true;
  std::optional<Witness> witness;
  std::size_t samples_used = 0;
  double tol = 0.0;
  /// Named diagnostic values, in insertion order.
  std::vector<std::pair<std::string, double>> values;

  void set(std::string name, double v) { values.emplace_back(std::move(name), v); }
  std::optional<double> get(const std::string& name) const {
    for (const auto& [k, v] : values) {
      if (k == name) return v;
    }
    return std::nullopt;
  }
};

}  // namespace jball
