#include "jball/io.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace jball::io {
namespace {

void allow_only(const Json& j, std::initializer_list<const char*> keys, const char* what) {
  if (!j.is_object()) throw InvalidInput(std::string(what) + ": expected a JSON object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : j.items()) {
    if (!allowed.contains(k)) throw InvalidInput(std::string(what) + ": unknown field '" + k + "'");
  }
}

const Json& field(const Json& j, const char* key, const char* what) {
  const auto it = j.find(key);
  if (it == j.end()) throw InvalidInput(std::string(what) + ": missing field '" + key + "'");
  return *it;
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw InvalidInput(std::string(what) + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InvalidInput(std::string(what) + ": non-finite number");
  return v;
}

std::vector<Point> point_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + ": expected an array of points");
  std::vector<Point> out;
  for (const auto& p : j) out.push_back(point_from_json(p));
  return out;
}

Json value_json(const gallery::Value& v) {
  if (std::holds_alternative<bool>(v)) return std::get<bool>(v);
  return std::get<double>(v);
}

std::string fmt(double v) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.12g", v);
  return buf.data();
}

}  // namespace

Point point_from_json(const Json& j) {
  if (!j.is_array() || j.size() < 2) throw InvalidInput("point: expected an array of at least 2 numbers");
  std::vector<double> c;
  for (const auto& v : j) c.push_back(number(v, "point"));
  return Point(std::span<const double>(c));
}

Json point_to_json(const Point& p) {
  Json j = Json::array();
  for (double c : p.coords()) j.push_back(c);
  return j;
}

Domain domain_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("domain: expected a JSON object");
  const Json& type = field(j, "type", "domain");
  if (!type.is_string()) throw InvalidInput("domain: 'type' must be a string");
  const std::string t = type.get<std::string>();
  if (t == "punctured") {
    allow_only(j, {"type", "dim", "points"}, "punctured");
    auto pts = point_list(field(j, "points", "punctured"), "punctured");
    if (j.contains("dim")) {
      const Json& d = j["dim"];
      if (!d.is_number_integer()) throw InvalidInput("punctured: 'dim' must be an integer");
      for (const Point& p : pts) {
        if (static_cast<long long>(p.dim()) != d.get<long long>()) {
          throw DimensionMismatch("punctured: point dimension differs from 'dim'");
        }
      }
    }
    return Domain::punctured(std::move(pts));
  }
  if (t == "half_space") {
    allow_only(j, {"type", "normal", "offset"}, "half_space");
    return Domain::half_space(point_from_json(field(j, "normal", "half_space")),
                              number(field(j, "offset", "half_space"), "half_space offset"));
  }
  if (t == "convex_polygon" || t == "simple_polygon") {
    allow_only(j, {"type", "vertices"}, t.c_str());
    auto v = point_list(field(j, "vertices", t.c_str()), t.c_str());
    return t == "convex_polygon" ? Domain::convex_polygon(std::move(v)) : Domain::simple_polygon(std::move(v));
  }
  if (t == "ball_union") {
    allow_only(j, {"type", "balls"}, "ball_union");
    const Json& balls = field(j, "balls", "ball_union");
    if (!balls.is_array()) throw InvalidInput("ball_union: 'balls' must be an array");
    std::vector<Disk> disks;
    for (const auto& b : balls) {
      allow_only(b, {"c", "r"}, "ball");
      disks.push_back(Disk{point_from_json(field(b, "c", "ball")), number(field(b, "r", "ball"), "ball radius")});
    }
    return Domain::ball_union(std::move(disks));
  }
  throw InvalidInput("domain: unknown type '" + t + "'");
}

Json domain_to_json(const Domain& domain) {
  Json j;
  j["type"] = domain.type_name();
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PuncturedSpace>) {
          j["dim"] = domain.dim();
          Json pts = Json::array();
          for (const Point& p : v.punctures) pts.push_back(point_to_json(p));
          j["points"] = pts;
        } else if constexpr (std::is_same_v<T, HalfSpace>) {
          j["normal"] = point_to_json(v.normal);
          j["offset"] = v.offset;
        } else if constexpr (std::is_same_v<T, ConvexPolygon> || std::is_same_v<T, SimplePolygon>) {
          Json pts = Json::array();
          for (const Point& p : v.vertices) pts.push_back(point_to_json(p));
          j["vertices"] = pts;
        } else {
          Json balls = Json::array();
          for (const Disk& d : v.disks) balls.push_back(Json{{"c", point_to_json(d.center)}, {"r", d.radius}});
          j["balls"] = balls;
        }
      },
      domain.variant());
  return j;
}

Domain parse_domain(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("domain: malformed JSON: ") + e.what());
  }
  return domain_from_json(j);
}

std::string write_domain(const Domain& domain) { return domain_to_json(domain).dump(2) + "\n"; }

Domain load_domain(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open domain file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_domain(ss.str());
}

Json report_to_json(const CheckReport& report) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["predicate"] = report.predicate;
  j["passed"] = report.passed;
  j["samples_used"] = report.samples_used;
  j["tol"] = report.tol;
  Json values = Json::object();
  for (const auto& [k, v] : report.values) values[k] = v;
  j["values"] = values;
  if (report.witness) {
    Json pts = Json::array();
    for (const Point& p : report.witness->points) pts.push_back(point_to_json(p));
    j["witness"] = Json{{"kind", report.witness->kind}, {"points", pts}, {"note", report.witness->note}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json scenario_to_json(const gallery::Scenario& s) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["name"] = s.name;
  j["description"] = s.description;
  j["domain"] = domain_to_json(s.domain);
  j["x"] = point_to_json(s.x);
  j["M"] = s.M.value();
  j["passed"] = s.passed();
  Json ex = Json::array();
  for (const auto& e : s.expectations) {
    ex.push_back(Json{{"predicate", e.predicate},
                      {"expected", value_json(e.expected)},
                      {"actual", value_json(e.actual)},
                      {"tolerance", e.tolerance},
                      {"pass", e.pass},
                      {"gated", e.gated}});
  }
  j["expectations"] = ex;
  Json pts = Json::array();
  for (const auto& [name, p] : s.points) pts.push_back(Json{{"name", name}, {"point", point_to_json(p)}});
  j["points"] = pts;
  return j;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write file: " + path);
  out << text;
}

std::string render_svg(const std::vector<std::vector<Point>>& loops, const Box& view,
                       const std::vector<SvgMarker>& markers) {
  static constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                           "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
  const double w = view.hi.x() - view.lo.x();
  const double h = view.hi.y() - view.lo.y();
  const double stroke = 0.002 * std::max(w, h);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\""
      << fmt(800.0 * h / w) << "\" viewBox=\"" << fmt(view.lo.x()) << ' ' << fmt(-view.hi.y()) << ' ' << fmt(w)
      << ' ' << fmt(h) << "\">\n";
  for (std::size_t k = 0; k < loops.size(); ++k) {
    out << "  <path fill=\"none\" stroke=\"" << kPalette[k % kPalette.size()] << "\" stroke-width=\""
        << fmt(stroke) << "\" d=\"";
    for (std::size_t i = 0; i < loops[k].size(); ++i) {
      out << (i == 0 ? "M" : " L") << fmt(loops[k][i].x()) << ',' << fmt(-loops[k][i].y());
    }
    out << " Z\"/>\n";
  }
  for (const auto& m : markers) {
    out << "  <circle cx=\"" << fmt(m.at.x()) << "\" cy=\"" << fmt(-m.at.y()) << "\" r=\"" << fmt(2.5 * stroke)
        << "\" fill=\"black\"><title>" << m.label << "</title></circle>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace jball::io
