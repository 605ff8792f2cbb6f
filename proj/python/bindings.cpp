#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "jball/acceptance.hpp"
#include "jball/ballgeom.hpp"
#include "jball/gallery.hpp"
#include "jball/geodesics.hpp"
#include "jball/io.hpp"
#include "jball/metric.hpp"
#include "jball/punctured.hpp"

namespace py = pybind11;
using namespace jball;

namespace {

using Coords = std::vector<double>;

Point pt(const Coords& c) { return Point(std::span<const double>(c)); }
Coords coords(const Point& p) { return {p.coords().begin(), p.coords().end()}; }

std::vector<Point> pts(const std::vector<Coords>& cs) {
  std::vector<Point> out;
  out.reserve(cs.size());
  for (const auto& c : cs) out.push_back(pt(c));
  return out;
}

py::object to_py(const io::Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Mode mode_of(bool strict) { return strict ? Mode::Strict : Mode::NonStrict; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "j-metric balls: distances, exact punctured-plane geometry and numeric ball predicates";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  auto invalid = py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", invalid.ptr());
  py::register_exception<OutsideDomain>(m, "OutsideDomain", invalid.ptr());
  py::register_exception<Unsupported>(m, "Unsupported", invalid.ptr());
  py::register_exception<ResolutionError>(m, "ResolutionError", error.ptr());

  py::class_<Domain>(m, "Domain")
      .def_static("punctured", [](const std::vector<Coords>& p) { return Domain::punctured(pts(p)); },
                  py::arg("points"))
      .def_static("half_space", [](const Coords& n, double off) { return Domain::half_space(pt(n), off); },
                  py::arg("normal"), py::arg("offset"))
      .def_static("convex_polygon", [](const std::vector<Coords>& v) { return Domain::convex_polygon(pts(v)); },
                  py::arg("vertices"))
      .def_static("simple_polygon", [](const std::vector<Coords>& v) { return Domain::simple_polygon(pts(v)); },
                  py::arg("vertices"))
      .def_static(
          "ball_union",
          [](const std::vector<std::pair<Coords, double>>& balls) {
            std::vector<Disk> disks;
            for (const auto& [c, r] : balls) disks.push_back(Disk{pt(c), r});
            return Domain::ball_union(std::move(disks));
          },
          py::arg("balls"), "List of (center, radius) pairs.")
      .def_static("from_json", &io::parse_domain, py::arg("text"))
      .def("to_json", &io::write_domain)
      .def_property_readonly("type", &Domain::type_name)
      .def_property_readonly("dim", &Domain::dim)
      .def_property_readonly("bounded", &Domain::bounded)
      .def("contains", [](const Domain& d, const Coords& x) { return d.contains(pt(x)); })
      .def("boundary_distance", [](const Domain& d, const Coords& x) { return d.boundary_distance(pt(x)); })
      .def(
          "nearest_boundary",
          [](const Domain& d, const Coords& x) {
            std::vector<Coords> out;
            for (const Point& p : d.nearest_boundary(pt(x)).points) out.push_back(coords(p));
            return out;
          },
          py::arg("x"))
      .def("__eq__", [](const Domain& a, const Domain& b) { return a == b; })
      .def("__repr__", [](const Domain& d) { return "<jball.Domain " + d.type_name() + ">"; });

  m.def("j_distance", [](const Domain& d, const Coords& x, const Coords& y) { return j_distance(d, pt(x), pt(y)); },
        py::arg("domain"), py::arg("x"), py::arg("y"));
  m.def(
      "in_j_ball",
      [](const Domain& d, const Coords& x, double M, const Coords& y) { return in_j_ball(d, pt(x), Radius(M), pt(y)); },
      py::arg("domain"), py::arg("x"), py::arg("M"), py::arg("y"));
  m.def(
      "annulus_bounds",
      [](double dx, double M) {
        const AnnulusBounds a = annulus_bounds(dx, Radius(M));
        py::dict r;
        r["inner_radius"] = a.inner_radius;
        r["outer_radius"] = a.outer_radius;
        r["depth_min"] = a.depth_min;
        r["depth_max"] = a.depth_max;
        return r;
      },
      py::arg("dx"), py::arg("M"));
  m.def(
      "exhaustion_radius",
      [](const Domain& d, const Coords& x, double s) { return exhaustion_radius(d, pt(x), s).value(); },
      py::arg("domain"), py::arg("x"), py::arg("s"));
  m.def(
      "qh_distance", [](const Domain& d, const Coords& x, const Coords& y, double h) { return qh_distance(d, pt(x), pt(y), h); },
      py::arg("domain"), py::arg("x"), py::arg("y"), py::arg("h") = 0.0);
  m.def(
      "qh_punctured_closed_form",
      [](const Coords& p, const Coords& x, const Coords& y) { return qh_punctured_closed_form(pt(p), pt(x), pt(y)); },
      py::arg("puncture"), py::arg("x"), py::arg("y"));

  m.def(
      "disk_decomposition",
      [](double M) {
        const auto d = punctured::disk_decomposition(Radius(M));
        static const char* kinds[] = {"cap", "half_plane_cut", "hole"};
        py::dict r;
        r["M"] = d.M;
        r["outer_center"] = coords(d.outer.center);
        r["outer_radius"] = d.outer.radius;
        r["kind"] = kinds[static_cast<int>(d.kind)];
        r["c"] = d.c;
        r["s"] = d.s;
        return r;
      },
      py::arg("M"));
  m.def("thresholds", [] {
    const auto t = punctured::thresholds();
    py::dict r;
    r["j_convex"] = t.j_convex;
    r["j_starlike"] = t.j_starlike;
    r["annulus_onset"] = t.annulus_onset;
    r["qh_convex"] = t.qh_convex;
    r["qh_starlike"] = t.qh_starlike;
    return r;
  });

  m.def(
      "convexity_check",
      [](const Domain& d, const Coords& x, double M, bool strict, std::size_t trials, double tol, std::uint64_t seed) {
        return to_py(io::report_to_json(convexity_check(j_ball_region(d, pt(x), Radius(M)), mode_of(strict), trials, tol, seed)));
      },
      py::arg("domain"), py::arg("x"), py::arg("M"), py::arg("strict") = false, py::arg("trials") = 20000,
      py::arg("tol") = 1e-9, py::arg("seed") = 1);
  m.def(
      "starlikeness_check",
      [](const Domain& d, const Coords& x, double M, std::optional<Coords> center, bool strict, std::size_t rays,
         double tol, std::uint64_t seed) {
        const Point c = center ? pt(*center) : pt(x);
        return to_py(io::report_to_json(
            starlikeness_check(j_ball_region(d, pt(x), Radius(M)), c, mode_of(strict), rays, tol, seed)));
      },
      py::arg("domain"), py::arg("x"), py::arg("M"), py::arg("center") = py::none(), py::arg("strict") = true,
      py::arg("rays") = 4096, py::arg("tol") = 0.0, py::arg("seed") = 1);
  m.def(
      "topology",
      [](const Domain& d, const Coords& x, double M, int res) {
        const Topology t = topology_check(rasterize(j_ball_region(d, pt(x), Radius(M)), res));
        py::dict r;
        r["components"] = t.resolved_components;
        r["grid_components"] = t.components;
        r["simply_connected"] = t.simply_connected;
        return r;
      },
      py::arg("domain"), py::arg("x"), py::arg("M"), py::arg("res") = kDefaultResolution);
  m.def(
      "region_mask",
      [](const Domain& d, const Coords& x, double M, int res) {
        const RegionGrid g = rasterize(j_ball_region(d, pt(x), Radius(M)), res);
        py::array_t<bool> a({g.ny, g.nx});
        auto v = a.mutable_unchecked<2>();
        for (int j = 0; j < g.ny; ++j)
          for (int i = 0; i < g.nx; ++i) v(j, i) = g.at(i, j);
        return py::make_tuple(a, coords(g.origin), g.h);
      },
      py::arg("domain"), py::arg("x"), py::arg("M"), py::arg("res") = 256,
      "Boolean raster (rows are y), the center of cell (0, 0) and the spacing.");
  m.def(
      "trace_boundary",
      [](const Domain& d, const Coords& x, double M, int res) {
        std::vector<std::vector<Coords>> out;
        for (const auto& loop : trace_boundary(rasterize(j_ball_region(d, pt(x), Radius(M)), res))) {
          auto& o = out.emplace_back();
          for (const Point& p : loop) o.push_back(coords(p));
        }
        return out;
      },
      py::arg("domain"), py::arg("x"), py::arg("M"), py::arg("res") = 512);

  m.def(
      "triangle_defect",
      [](const Domain& d, const Coords& x, const Coords& y, const Coords& z) {
        return geodesics::triangle_defect(d, pt(x), pt(y), pt(z));
      },
      py::arg("domain"), py::arg("x"), py::arg("y"), py::arg("z"));
  m.def(
      "geodesic_exists",
      [](const Domain& d, const Coords& x, const Coords& y) -> py::object {
        const auto v = geodesics::geodesic_exists(d, pt(x), pt(y));
        if (!v.exists) return py::none();
        return py::cast(coords(*v.u));
      },
      py::arg("domain"), py::arg("x"), py::arg("y"),
      "The collinear boundary point u when [x, y] is a geodesic, else None.");

  m.def("gallery_names", &gallery::names);
  m.def("gallery", [](const std::string& name) { return to_py(io::scenario_to_json(gallery::by_name(name))); },
        py::arg("name"));
  m.def(
      "acceptance",
      [](int id, std::uint64_t seed) {
        const auto r = acceptance::run(id, seed);
        py::dict d;
        d["id"] = r.id;
        d["title"] = r.title;
        d["passed"] = r.passed;
        d["gated"] = r.gated;
        d["detail"] = r.detail;
        return d;
      },
      py::arg("id"), py::arg("seed") = 1);
}
