#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "minkpack/bounds.hpp"
#include "minkpack/errors.hpp"
#include "minkpack/extremal.hpp"
#include "minkpack/io.hpp"
#include "minkpack/packing.hpp"

namespace py = pybind11;
using namespace minkpack;

namespace {

using Pair = std::pair<double, double>;

std::vector<Vec2> to_points(const std::vector<Pair>& pts) {
  std::vector<Vec2> out;
  out.reserve(pts.size());
  for (const auto& [x, y] : pts) out.push_back({x, y});
  return out;
}

std::vector<Pair> to_pairs(const std::vector<Vec2>& pts) {
  std::vector<Pair> out;
  out.reserve(pts.size());
  for (const auto& v : pts) out.emplace_back(v.x, v.y);
  return out;
}

GeneratorKind kind(const std::string& name) { return parse_generator(name); }

Objective objective(const std::string& name) {
  if (name == "bound") return Objective::Bound;
  if (name == "ratio") return Objective::Ratio;
  throw InvalidInput("objective must be 'bound' or 'ratio'");
}

}  // namespace

PYBIND11_MODULE(minkpack, m) {
  m.doc() = "Extremal quantities, density bounds and packings for centrally symmetric convex discs";

  auto invalid = py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<RangeError>(m, "RangeError", invalid.ptr());
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  py::class_<ConvexDisc>(m, "ConvexDisc")
      .def(py::init([](const std::vector<Pair>& v) {
             const auto pts = to_points(v);
             return ConvexDisc(std::span<const Vec2>(pts));
           }),
           py::arg("vertices"))
      .def_static("regular", &ConvexDisc::regular, py::arg("n"), py::arg("circumradius") = 1.0, py::arg("phase") = 0.0)
      .def_static("square", &ConvexDisc::square, py::arg("half_side") = 1.0)
      .def_property_readonly("vertices", [](const ConvexDisc& d) { return to_pairs(d.vertices()); })
      .def_property_readonly("area", &ConvexDisc::area)
      .def_property_readonly("diameter", &ConvexDisc::diameter)
      .def_property_readonly("is_parallelogram", &ConvexDisc::is_parallelogram)
      .def("gauge", [](const ConvexDisc& d, double x, double y) { return d.gauge({x, y}); }, py::arg("x"), py::arg("y"))
      .def("transformed", &ConvexDisc::transformed, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"))
      .def("__len__", &ConvexDisc::size)
      .def("__repr__", [](const ConvexDisc& d) { return "<ConvexDisc with " + std::to_string(d.size()) + " vertices>"; });

  py::class_<ExtremalProfile>(m, "ExtremalProfile")
      .def_readonly("area", &ExtremalProfile::area)
      .def_readonly("delta", &ExtremalProfile::delta)
      .def_readonly("f3", &ExtremalProfile::f3)
      .def_readonly("f4", &ExtremalProfile::f4)
      .def_readonly("f5", &ExtremalProfile::f5)
      .def_readonly("f6", &ExtremalProfile::f6)
      .def_readonly("d0p", &ExtremalProfile::d0p)
      .def_property_readonly("slack_f4", &ExtremalProfile::slack_f4)
      .def_property_readonly("slack_f5", &ExtremalProfile::slack_f5)
      .def_property_readonly("slack_f6", &ExtremalProfile::slack_f6);

  m.def("profile", &profile, py::arg("disc"), "Delta, F3'..F6' and d0' of a disc.");
  m.def("max_kgon_area", &max_kgon_area, py::arg("disc"), py::arg("k"));
  m.def("make_theorem_hexagon", &make_theorem_hexagon, py::arg("d0p"));

  m.def(
      "theorem_lower_bound",
      [](double lambda, double d0p) {
        const auto r = theorem_lower_bound({lambda, d0p});
        return py::make_tuple(r.value, std::string(to_string(r.branch)));
      },
      py::arg("lambda_"), py::arg("d0p"), "Returns (bound, branch).");
  m.def("corollary1_bound", &corollary1_bound, py::arg("lambda_"));
  m.def("corollary2_ratio_bound", &corollary2_ratio_bound, py::arg("lambda_"));
  m.def(
      "minimize_bound_over_d0",
      [](double lambda, const std::string& obj) {
        const auto r = minimize_bound_over_d0(lambda, objective(obj));
        return py::make_tuple(r.d0_star, r.value);
      },
      py::arg("lambda_"), py::arg("objective") = "bound", "Returns (d0_star, value).");
  m.def(
      "density_bound_from_profile",
      [](const ConvexDisc& d, double lambda) { return density_bound_from_profile(d, lambda); }, py::arg("disc"),
      py::arg("lambda_"));

  py::class_<Packing>(m, "Packing")
      .def_readonly("disc", &Packing::disc)
      .def_property_readonly("centers", [](const Packing& p) { return to_pairs(p.centers); })
      .def_property_readonly("kind", [](const Packing& p) { return std::string(to_string(p.generator.kind)); })
      .def_property_readonly("radius", [](const Packing& p) { return p.generator.radius; })
      .def_property_readonly("fraction", [](const Packing& p) { return p.generator.fraction; })
      .def_readonly("warnings", &Packing::warnings)
      .def("__len__", [](const Packing& p) { return p.centers.size(); })
      .def("to_json", [](const Packing& p) { return io::packing_json(p); })
      .def_static("from_json", [](const std::string& s) { return io::parse_packing(s); }, py::arg("text"));

  m.def(
      "custom_packing",
      [](const ConvexDisc& d, const std::vector<Pair>& centers) { return Packing{d, to_points(centers), {}, {}}; },
      py::arg("disc"), py::arg("centers"));
  m.def(
      "make_generator", [](const ConvexDisc& d, const std::string& k, int extent) { return make_generator(d, kind(k), extent); },
      py::arg("disc"), py::arg("kind"), py::arg("extent"));
  m.def(
      "mixed_strip_packing",
      [](const ConvexDisc& d, const std::string& a, const std::string& b, double fraction, int width, int extent) {
        return mixed_strip_packing(d, kind(a), kind(b), fraction, width, extent);
      },
      py::arg("disc"), py::arg("part_a"), py::arg("part_b"), py::arg("fraction_a"), py::arg("strip_width"),
      py::arg("extent"));
  m.def("equality_packing", &equality_packing, py::arg("d0p"), py::arg("lambda_"), py::arg("strip_width"),
        py::arg("extent"));
  m.def("random_five_neighbour_packing", &random_five_neighbour_packing, py::arg("d0p"), py::arg("extent"),
        py::arg("seed"));
  m.def(
      "overlaps",
      [](const Packing& p) {
        std::vector<py::tuple> out;
        for (const auto& v : validate_packing(p)) out.push_back(py::make_tuple(v.i, v.j, v.gauge));
        return out;
      },
      py::arg("packing"), "Overlapping pairs as (i, j, gauge distance).");
  m.def(
      "neighbour_edges", [](const Packing& p) { return neighbour_graph(p).edges; }, py::arg("packing"));

  py::class_<PackingStats>(m, "PackingStats")
      .def_readonly("R", &PackingStats::R)
      .def_readonly("centers_in_window", &PackingStats::centers_in_window)
      .def_readonly("interior_cells", &PackingStats::interior_cells)
      .def_readonly("lambda_hat", &PackingStats::lambda_hat)
      .def_readonly("density_hat", &PackingStats::density_hat)
      .def_readonly("avg_sides_hat", &PackingStats::avg_sides_hat)
      .def_readonly("ratio_hat", &PackingStats::ratio_hat)
      .def_readonly("max_sides", &PackingStats::max_sides)
      .def_readonly("nonconvex_cells", &PackingStats::nonconvex_cells)
      .def_readonly("d0p", &PackingStats::d0p)
      .def_readonly("bound", &PackingStats::bound)
      .def_readonly("slack", &PackingStats::slack);

  m.def(
      "measure_stats", [](const Packing& p, double R) { return measure_stats(p, R); }, py::arg("packing"),
      py::arg("R"));
  m.def(
      "check_proposition",
      [](const Packing& p, double R) {
        const auto s = build_subdivision(p, R);
        const auto c = check_proposition(s);
        std::vector<std::size_t> sides;
        for (auto i : c.offending) sides.push_back(s.cells[i].sides);
        return py::make_tuple(c.holds, sides);
      },
      py::arg("packing"), py::arg("R"), "Returns (holds, side counts of offending interior cells).");
  m.def(
      "render_svg",
      [](const Packing& p, double R) {
        const auto g = neighbour_graph(p);
        const auto s = build_subdivision(p, g, R);
        return io::render_svg(p, &g, &s);
      },
      py::arg("packing"), py::arg("R"));
}
