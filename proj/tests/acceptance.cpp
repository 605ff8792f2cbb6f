#include <cstdint>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>

#include "jball/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 1;
  if (const char* env = std::getenv("JBALL_SEED")) seed = std::stoull(env);
  if (argc > 1) seed = std::stoull(argv[1]);
  try {
    const auto results = jball::acceptance::run_all(
        seed, [](const jball::acceptance::Result& r) { std::cout << jball::acceptance::format(r) << std::endl; });
    const bool ok = jball::acceptance::all_gated_passed(results);
    std::cout << (ok ? "acceptance: all gated criteria passed" : "acceptance: FAILED") << std::endl;
    return ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "acceptance: " << e.what() << '\n';
    return 2;
  }
}
