#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "minkpack/bounds.hpp"
#include "minkpack/errors.hpp"
#include "minkpack/extremal.hpp"
#include "minkpack/io.hpp"
#include "minkpack/oracle.hpp"
#include "minkpack/packing.hpp"

using namespace minkpack;

namespace {

enum Exit { kOk = 0, kInvalid = 2, kInvariant = 3, kRange = 4 };

struct RunConfig {
  std::string disc_path;
  std::string packing_path;
  std::optional<double> d0p;
  std::optional<double> lambda;
  std::string generator = "six";
  std::string parts;
  double fraction = 0.5;
  int strip_width = 12;
  int extent = 30;
  std::uint64_t seed = 1;
  std::vector<double> radii;
  int steps = 30;
  int grid = 256;
  std::string out;
  bool oracle = false;
  std::optional<double> tol;
};

// Writes to --out when given, else stdout.
void emit(const RunConfig& c, const std::string& text) {
  if (c.out.empty())
    std::cout << text;
  else
    io::write_file(c.out, text);
}

ConvexDisc load_disc(const RunConfig& c) {
  if (!c.disc_path.empty()) return io::parse_disc(io::read_file(c.disc_path));
  if (c.d0p) return make_theorem_hexagon(*c.d0p);
  throw InvalidInput("give --disc or --d0p");
}

int cmd_profile(const RunConfig& c) {
  const auto d = load_disc(c);
  const auto p = profile(d);
  std::string s = "quantity,value\n";
  auto row = [&](const char* k, double v) { s += std::string(k) + "," + io::format_number(v) + "\n"; };
  row("area", p.area);
  row("delta", p.delta);
  row("f3", p.f3);
  row("f4", p.f4);
  row("f5", p.f5);
  row("f6", p.f6);
  row("d0p", p.d0p);
  row("slack_f4", p.slack_f4());
  row("slack_f5", p.slack_f5());
  row("slack_f6", p.slack_f6());
  int status = kOk;
  if (c.oracle) {
    // The scans are lower bounds; an optimizer value below one is a failure.
    const double tol = c.tol.value_or(1e-3);
    const double ref[] = {oracle::grid_max_triangle(d, c.grid), oracle::grid_max_kgon(d, 4, c.grid),
                          oracle::grid_max_kgon(d, 5, std::max(64, c.grid / 4)), oracle::grid_max_kgon(d, 6, c.grid)};
    const double got[] = {p.delta, p.f4, p.f5, p.f6};
    const char* names[] = {"oracle_delta", "oracle_f4", "oracle_f5", "oracle_f6"};
    for (int i = 0; i < 4; ++i) {
      row(names[i], ref[i]);
      if (got[i] < ref[i] * (1.0 - tol)) {
        std::cerr << "minkpack: " << names[i] + 7 << " below the oracle scan by more than " << tol << "\n";
        status = kInvariant;
      }
    }
  }
  const double eps = 1e-6 * p.area;
  if (p.slack_f4() < -eps || p.slack_f5() < -eps || p.slack_f6() < -eps) {
    std::cerr << "minkpack: an extremal inequality is violated\n";
    status = kInvariant;
  }
  emit(c, s);
  return status;
}

double bound_d0p(const RunConfig& c) {
  if (c.d0p) return *c.d0p;
  if (!c.disc_path.empty()) return std::clamp(profile(load_disc(c)).d0p, 0.75, 1.0);
  throw InvalidInput("give --d0p or --disc");
}

int check_corollaries(const RunConfig& c, const io::BoundRow& r) {
  if (!c.oracle) return kOk;
  const double tol = c.tol.value_or(1e-6);
  const double o1 = oracle::corollary_min_oracle(r.lambda, Objective::Bound);
  const double o2 = oracle::corollary_min_oracle(r.lambda, Objective::Ratio);
  if (std::abs(o1 - r.corollary1) > tol || std::abs(o2 - r.corollary2) > tol) {
    std::cerr << "minkpack: corollary values disagree with the grid minimum at lambda " << r.lambda << "\n";
    return kInvariant;
  }
  return kOk;
}

int cmd_bound(const RunConfig& c) {
  if (!c.lambda) throw InvalidInput("bound needs --lambda");
  const auto r = io::bound_row(*c.lambda, bound_d0p(c));
  emit(c, io::bound_csv_header() + io::bound_csv_row(r));
  return check_corollaries(c, r);
}

int cmd_sweep(const RunConfig& c) {
  if (c.steps < 1) throw RangeError("--steps must be positive");
  std::string s = io::bound_csv_header();
  int status = kOk;
  for (int i = 0; i <= c.steps; ++i) {
    const double lambda = 3.0 + 3.0 * i / c.steps;
    io::BoundRow r;
    if (c.d0p || !c.disc_path.empty()) {
      r = io::bound_row(lambda, bound_d0p(c));
    } else {
      // No disc given: the row at the bound-minimizing d0p, so bound = corollary1.
      const auto m = minimize_bound_over_d0(lambda, Objective::Bound);
      r = io::bound_row(lambda, m.d0_star);
    }
    s += io::bound_csv_row(r);
    status = std::max(status, check_corollaries(c, r));
  }
  emit(c, s);
  return status;
}

int cmd_hexagon(const RunConfig& c) {
  if (!c.d0p) throw InvalidInput("hexagon needs --d0p");
  emit(c, io::disc_json(make_theorem_hexagon(*c.d0p)));
  return kOk;
}

std::pair<GeneratorKind, GeneratorKind> parse_parts(const std::string& parts) {
  const auto comma = parts.find(',');
  if (comma == std::string::npos) throw InvalidInput("--parts expects two names, e.g. six,four");
  return {parse_generator(parts.substr(0, comma)), parse_generator(parts.substr(comma + 1))};
}

int cmd_pack(const RunConfig& c) {
  const auto kind = parse_generator(c.generator);
  const Packing p = [&] {
    switch (kind) {
      case GeneratorKind::Mixed: {
        if (!c.parts.empty()) {
          const auto [a, b] = parse_parts(c.parts);
          return mixed_strip_packing(load_disc(c), a, b, c.fraction, c.strip_width, c.extent);
        }
        if (!c.lambda || !c.d0p) throw InvalidInput("mixed needs --parts, or --lambda with --d0p");
        return equality_packing(*c.d0p, *c.lambda, c.strip_width, c.extent);
      }
      case GeneratorKind::Random:
        if (!c.d0p) throw InvalidInput("random needs --d0p");
        return random_five_neighbour_packing(*c.d0p, c.extent, c.seed);
      case GeneratorKind::Custom:
        throw InvalidInput("custom packings are read from files, not generated");
      default:
        return make_generator(load_disc(c), kind, c.extent);
    }
  }();
  for (const auto& w : p.warnings) std::cerr << "minkpack: warning: " << w << "\n";
  emit(c, io::packing_json(p));
  return kOk;
}

Packing load_packing(const RunConfig& c) {
  if (c.packing_path.empty()) throw InvalidInput("give a packing file");
  return io::parse_packing(io::read_file(c.packing_path));
}

double window_limit(const Packing& p) {
  double r = p.generator.radius;
  if (!(r > 0)) {
    Vec2 m{};
    for (const auto& q : p.centers) m += q;
    m = m / static_cast<double>(std::max<std::size_t>(1, p.centers.size()));
    for (const auto& q : p.centers) r = std::max(r, norm(q - m));
  }
  return r / 2.0;
}

int cmd_analyze(const RunConfig& c) {
  const auto p = load_packing(c);
  const auto bad = validate_packing(p);
  if (!bad.empty()) {
    std::cerr << "minkpack: invalid packing: " << bad.size() << " overlapping pairs, first " << bad[0].i << "-"
              << bad[0].j << " at gauge " << bad[0].gauge << "\n";
    return kInvariant;
  }
  const auto g = neighbour_graph(p);
  std::vector<double> radii = c.radii;
  if (radii.empty()) radii.push_back(window_limit(p));
  std::string s = io::stats_csv_header();
  bool holds = true;
  for (double R : radii) {
    if (!(R > 0) || R > window_limit(p) * (1.0 + 1e-12))
      throw RangeError("window radius " + io::format_number(R) + " exceeds half the generated extent");
    const auto sub = build_subdivision(p, g, R);
    const auto check = check_proposition(sub);
    const auto st = measure_stats(p, g, sub);
    s += io::stats_csv_row(st);
    holds = holds && check.holds;
    std::cerr << "minkpack: R " << io::format_number(R) << ": proposition " << (check.holds ? "holds" : "fails") << " ("
              << check.offending.size() << " cells over six sides, " << st.nonconvex_cells << " nonconvex), slack "
              << io::format_number(st.slack) << "\n";
    for (const auto& w : check.warnings) std::cerr << "minkpack: warning: " << w << "\n";
  }
  emit(c, s);
  return holds ? kOk : kInvariant;
}

int cmd_render(const RunConfig& c) {
  const auto p = load_packing(c);
  const auto g = neighbour_graph(p);
  const double R = c.radii.empty() ? window_limit(p) : c.radii.front();
  const auto sub = build_subdivision(p, g, R);
  emit(c, io::render_svg(p, &g, &sub));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minkowski-plane packing bounds, constructions and checks"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_disc = [&](CLI::App* s) {
    s->add_option("--disc", c.disc_path, "disc JSON file")->check(CLI::ExistingFile);
    s->add_option("--d0p", c.d0p, "theorem hexagon parameter in [3/4, 1]");
  };
  auto add_out = [&](CLI::App* s) { s->add_option("--out", c.out, "output file (default stdout)"); };
  auto add_check = [&](CLI::App* s) {
    s->add_flag("--oracle", c.oracle, "compare against the brute-force references");
    s->add_option("--tol", c.tol, "tolerance for the oracle comparison");
  };

  auto* profile_cmd = app.add_subcommand("profile", "extremal quantities of a disc");
  add_disc(profile_cmd);
  add_out(profile_cmd);
  add_check(profile_cmd);
  profile_cmd->add_option("--grid", c.grid, "oracle boundary samples")->check(CLI::Range(64, 4096));

  auto* bound_cmd = app.add_subcommand("bound", "density lower bound at one point");
  bound_cmd->add_option("--lambda", c.lambda, "average neighbour count in [3, 6]");
  add_disc(bound_cmd);
  add_out(bound_cmd);
  add_check(bound_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "bounds over lambda in [3, 6]");
  add_disc(sweep_cmd);
  sweep_cmd->add_option("--steps", c.steps, "grid intervals");
  add_out(sweep_cmd);
  add_check(sweep_cmd);

  auto* hexagon_cmd = app.add_subcommand("hexagon", "write the theorem hexagon as a disc file");
  hexagon_cmd->add_option("--d0p", c.d0p, "parameter in [3/4, 1]");
  add_out(hexagon_cmd);

  auto* pack_cmd = app.add_subcommand("pack", "build a packing");
  add_disc(pack_cmd);
  pack_cmd->add_option("--generator", c.generator, "six|four|honeycomb|mixed|random");
  pack_cmd->add_option("--parts", c.parts, "mixed constituents, e.g. six,four");
  pack_cmd->add_option("--lambda", c.lambda, "target neighbour count (mixed without --parts)");
  pack_cmd->add_option("--fraction", c.fraction, "share of translates of the first part");
  pack_cmd->add_option("--strip-width", c.strip_width, "rows per strip period");
  pack_cmd->add_option("--extent", c.extent, "generation radius in shortest edges");
  pack_cmd->add_option("--seed", c.seed, "random generator seed");
  add_out(pack_cmd);

  auto* analyze_cmd = app.add_subcommand("analyze", "window statistics of a packing file");
  analyze_cmd->add_option("packing", c.packing_path, "packing JSON file")->required()->check(CLI::ExistingFile);
  analyze_cmd->add_option("--radius", c.radii, "window radius (repeatable)");
  add_out(analyze_cmd);

  auto* render_cmd = app.add_subcommand("render", "SVG of a packing file");
  render_cmd->add_option("packing", c.packing_path, "packing JSON file")->required()->check(CLI::ExistingFile);
  render_cmd->add_option("--radius", c.radii, "window radius for the cells");
  add_out(render_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*profile_cmd) return cmd_profile(c);
    if (*bound_cmd) return cmd_bound(c);
    if (*sweep_cmd) return cmd_sweep(c);
    if (*hexagon_cmd) return cmd_hexagon(c);
    if (*pack_cmd) return cmd_pack(c);
    if (*analyze_cmd) return cmd_analyze(c);
    if (*render_cmd) return cmd_render(c);
  } catch (const InvalidInput& e) {
    std::cerr << "minkpack: " << e.what() << "\n";
    return kInvalid;
  } catch (const InvariantViolation& e) {
    std::cerr << "minkpack: " << e.what() << "\n";
    return kInvariant;
  } catch (const RangeError& e) {
    std::cerr << "minkpack: " << e.what() << "\n";
    return kRange;
  }
  return kInvalid;
}
