#include "minkpack/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "minkpack/errors.hpp"

namespace minkpack::io {

namespace {

using nlohmann::json;

json point_json(Vec2 v) { return json::array({v.x, v.y}); }

Vec2 point_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InvalidInput("expected a point [x, y]");
  return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Vec2> points_from(const json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string("expected an array of points for '") + what + "'");
  std::vector<Vec2> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(point_from(e));
  return out;
}

json points_json(const std::vector<Vec2>& pts) {
  json a = json::array();
  for (const auto& v : pts) a.push_back(point_json(v));
  return a;
}

json disc_obj(const ConvexDisc& d) { return json{{"vertices", points_json(d.vertices())}}; }

ConvexDisc disc_from(const json& j) {
  if (!j.is_object() || !j.contains("vertices")) throw InvalidInput("disc: expected {\"vertices\": [[x, y], ...]}");
  const auto v = points_from(j.at("vertices"), "vertices");
  return ConvexDisc(std::span<const Vec2>(v));
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

template <class T>
T field(const json& g, const char* key, T fallback) {
  if (!g.contains(key)) return fallback;
  try {
    return g.at(key).get<T>();
  } catch (const json::exception&) {
    throw InvalidInput(std::string("generator: bad value for '") + key + "'");
  }
}

std::string num(double x, int digits) {
  if (x == 0.0) return "0";  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

}  // namespace

ConvexDisc parse_disc(std::string_view json_text) { return disc_from(parse(json_text)); }

std::string disc_json(const ConvexDisc& d) { return disc_obj(d).dump(2) + "\n"; }

Packing parse_packing(std::string_view json_text) {
  const json j = parse(json_text);
  if (!j.is_object() || !j.contains("disc") || !j.contains("centers"))
    throw InvalidInput("packing: expected {\"disc\", \"centers\", \"generator\"}");
  Packing p{disc_from(j.at("disc")), points_from(j.at("centers"), "centers"), {}, {}};
  if (j.contains("generator")) {
    const json& g = j.at("generator");
    if (!g.is_object()) throw InvalidInput("packing: 'generator' must be an object");
    auto& info = p.generator;
    info.kind = parse_generator(field<std::string>(g, "kind", "custom"));
    if (g.contains("basis")) info.basis = points_from(g.at("basis"), "basis");
    if (g.contains("motif")) info.motif = points_from(g.at("motif"), "motif");
    info.part_a = parse_generator(field<std::string>(g, "part_a", std::string(to_string(info.part_a))));
    info.part_b = parse_generator(field<std::string>(g, "part_b", std::string(to_string(info.part_b))));
    info.fraction = field<double>(g, "fraction", info.fraction);
    info.strip_width = field<int>(g, "strip_width", info.strip_width);
    info.extent = field<int>(g, "extent", info.extent);
    info.seed = field<std::uint64_t>(g, "seed", info.seed);
    info.radius = field<double>(g, "radius", info.radius);
  }
  if (j.contains("warnings")) p.warnings = field<std::vector<std::string>>(j, "warnings", {});
  return p;
}

std::string packing_json(const Packing& p) {
  const auto& g = p.generator;
  json gen{{"kind", to_string(g.kind)}, {"extent", g.extent}, {"radius", g.radius}};
  if (!g.basis.empty()) gen["basis"] = points_json(g.basis);
  if (!g.motif.empty()) gen["motif"] = points_json(g.motif);
  if (g.kind == GeneratorKind::Mixed) {
    gen["part_a"] = to_string(g.part_a);
    gen["part_b"] = to_string(g.part_b);
    gen["fraction"] = g.fraction;
    gen["strip_width"] = g.strip_width;
  }
  if (g.kind == GeneratorKind::Random) gen["seed"] = g.seed;
  json j{{"disc", disc_obj(p.disc)}, {"centers", points_json(p.centers)}, {"generator", gen}};
  if (!p.warnings.empty()) j["warnings"] = p.warnings;
  return j.dump() + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << contents;
  if (!out) throw InvalidInput("failed writing '" + path + "'");
}

std::string format_number(double x) { return num(x, 12); }

std::string stats_csv_header() { return "R,lambda_hat,density_hat,avg_sides_hat,ratio_hat,bound,slack\n"; }

std::string stats_csv_row(const PackingStats& s) {
  return format_number(s.R) + "," + format_number(s.lambda_hat) + "," + format_number(s.density_hat) + "," +
         format_number(s.avg_sides_hat) + "," + format_number(s.ratio_hat) + "," + format_number(s.bound) + "," +
         format_number(s.slack) + "\n";
}

BoundRow bound_row(double lambda, double d0p) {
  const auto b = theorem_lower_bound({lambda, d0p});
  return {lambda, d0p, b.branch, b.value, corollary1_bound(lambda), corollary2_ratio_bound(lambda)};
}

std::string bound_csv_header() { return "lambda,d0p,branch,bound,corollary1,corollary2\n"; }

std::string bound_csv_row(const BoundRow& r) {
  return format_number(r.lambda) + "," + format_number(r.d0p) + "," + std::string(to_string(r.branch)) + "," +
         format_number(r.bound) + "," + format_number(r.corollary1) + "," + format_number(r.corollary2) + "\n";
}

std::string render_svg(const Packing& p, const NeighbourGraph* g, const Subdivision* s, const SvgOptions& opt) {
  if (!(opt.pixels_per_unit > 0)) throw RangeError("render_svg: scale must be positive");
  const auto& dv = p.disc.vertices();
  double x0 = std::numeric_limits<double>::infinity();
  double y0 = x0;
  double x1 = -x0;
  double y1 = -x0;
  for (const auto& c : p.centers)
    for (const auto& v : dv) {
      x0 = std::min(x0, c.x + v.x);
      x1 = std::max(x1, c.x + v.x);
      y0 = std::min(y0, c.y + v.y);
      y1 = std::max(y1, c.y + v.y);
    }
  if (p.centers.empty()) x0 = y0 = x1 = y1 = 0.0;
  const double k = opt.pixels_per_unit;
  const double margin = p.disc.diameter();
  // SVG y grows downwards; flip so the picture keeps the packing's orientation.
  auto X = [&](double x) { return num((x - x0 + margin) * k, 8); };
  auto Y = [&](double y) { return num((y1 - y + margin) * k, 8); };
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num((x1 - x0 + 2 * margin) * k, 8) << "\" height=\""
    << num((y1 - y0 + 2 * margin) * k, 8) << "\">\n";
  if (opt.cells && s) {
    o << "<g fill=\"#f3d9a4\" stroke=\"none\">\n";
    for (const auto& cell : s->cells) {
      if (cell.boundary) continue;
      o << "<path d=\"";
      for (std::size_t i = 0; i < cell.vertices.size(); ++i) {
        const Vec2 v = s->points[cell.vertices[i]];
        o << (i == 0 ? "M" : " L") << X(v.x) << " " << Y(v.y);
      }
      o << " Z\"/>\n";
    }
    o << "</g>\n";
  }
  o << "<g fill=\"#9fc5e8\" fill-opacity=\"0.6\" stroke=\"#1c4587\" stroke-width=\"0.5\">\n";
  for (const auto& c : p.centers) {
    o << "<polygon points=\"";
    for (std::size_t i = 0; i < dv.size(); ++i) o << (i ? " " : "") << X(c.x + dv[i].x) << "," << Y(c.y + dv[i].y);
    o << "\"/>\n";
  }
  o << "</g>\n";
  if (opt.edges && g) {
    o << "<g stroke=\"#cc0000\" stroke-width=\"0.8\">\n";
    for (const auto& e : g->edges) {
      const Vec2 a = p.centers[e[0]];
      const Vec2 b = p.centers[e[1]];
      o << "<line x1=\"" << X(a.x) << "\" y1=\"" << Y(a.y) << "\" x2=\"" << X(b.x) << "\" y2=\"" << Y(b.y) << "\"/>\n";
    }
    o << "</g>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace minkpack::io
