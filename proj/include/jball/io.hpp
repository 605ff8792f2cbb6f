#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "jball/domain.hpp"
#include "jball/gallery.hpp"
#include "jball/report.hpp"

namespace jball::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Domain specs:
///   {"type": "punctured", "dim": 2, "points": [[0, 0], ...]}
///   {"type": "half_space", "normal": [0, -1], "offset": 0}
///   {"type": "convex_polygon" | "simple_polygon", "vertices": [[x, y], ...]}
///   {"type": "ball_union", "balls": [{"c": [x, y], "r": r}, ...]}
/// Unknown fields and malformed values throw InvalidInput.
Domain domain_from_json(const Json& j);
Json domain_to_json(const Domain& domain);

Domain parse_domain(const std::string& text);
std::string write_domain(const Domain& domain);
Domain load_domain(const std::string& path);

Json point_to_json(const Point& p);
Point point_from_json(const Json& j);

Json report_to_json(const CheckReport& report);
Json scenario_to_json(const gallery::Scenario& scenario);

/// Writes text to a file, throwing InvalidInput if it cannot be opened.
void write_file(const std::string& path, const std::string& text);

struct SvgMarker {
  Point at;
  std::string label;
};

/// Plain SVG 1.1 with the y axis pointing up. Each loop gets its own colour.
std::string render_svg(const std::vector<std::vector<Point>>& loops, const Box& view,
                       const std::vector<SvgMarker>& markers = {});

}  // namespace jball::io
