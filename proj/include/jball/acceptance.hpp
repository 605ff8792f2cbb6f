#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "jball/io.hpp"

namespace jball::acceptance {

inline constexpr int kCriteria = 13;

struct Result {
  int id = 0;
  std::string title;
  bool passed = false;
  /// Optional criteria are reported but never fail the suite.
  bool gated = true;
  double seconds = 0.0;
  std::string detail;
};

/// Runs criterion `id` (1..13). Throws InvalidInput for other ids.
Result run(int id, std::uint64_t seed = 1);

/// Runs every criterion in order, calling `each` as results arrive.
std::vector<Result> run_all(std::uint64_t seed = 1, const std::function<void(const Result&)>& each = {});

bool all_gated_passed(const std::vector<Result>& results);

/// One line: status, id, title, time and detail.
std::string format(const Result& r);

io::Json to_json(const std::vector<Result>& results, std::uint64_t seed);

}  // namespace jball::acceptance
