#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jball::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInvalid = 2;

/// Runs the command line `args` (without the program name). Returns 0 on
/// success, 1 when a checked property fails, 2 on invalid input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "a,b[,c...]" to coordinates. Throws InvalidInput.
std::vector<double> parse_coords(const std::string& text);

}  // namespace jball::cli
