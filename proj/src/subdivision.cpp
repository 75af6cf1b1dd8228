#include <algorithm>
#include <cmath>
#include <numbers>

#include "minkpack/bounds.hpp"
#include "minkpack/errors.hpp"
#include "minkpack/extremal.hpp"
#include "minkpack/packing.hpp"
#include "spatial_grid.hpp"

namespace minkpack {

namespace {

constexpr std::size_t kMaxFaceLength = 100000;

Vec2 centroid(const std::vector<Vec2>& pts) {
  Vec2 c{};
  for (const auto& p : pts) c += p;
  return pts.empty() ? c : c / static_cast<double>(pts.size());
}

bool properly_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  const double scale = norm(b - a) * norm(d - c) * 1e-12;
  const double o1 = cross(b - a, c - a);
  const double o2 = cross(b - a, d - a);
  const double o3 = cross(d - c, a - c);
  const double o4 = cross(d - c, b - c);
  return ((o1 > scale && o2 < -scale) || (o1 < -scale && o2 > scale)) &&
         ((o3 > scale && o4 < -scale) || (o3 < -scale && o4 > scale));
}

void check_crossings(const Packing& p, const NeighbourGraph& g, Vec2 center, double reach) {
  std::vector<std::size_t> active;
  std::vector<Vec2> mids;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const Vec2 a = p.centers[g.edges[e][0]];
    const Vec2 b = p.centers[g.edges[e][1]];
    if (norm(a - center) > reach && norm(b - center) > reach) continue;
    active.push_back(e);
    mids.push_back((a + b) * 0.5);
  }
  detail::SpatialGrid grid(mids, p.disc.diameter() * 1.01);
  for (std::size_t k = 0; k < active.size(); ++k) {
    const auto& e = g.edges[active[k]];
    grid.for_each_near(mids[k], [&](std::size_t m) {
      if (m <= k) return;
      const auto& f = g.edges[active[m]];
      if (e[0] == f[0] || e[0] == f[1] || e[1] == f[0] || e[1] == f[1]) return;
      if (properly_cross(p.centers[e[0]], p.centers[e[1]], p.centers[f[0]], p.centers[f[1]]))
        throw InvariantViolation("build_subdivision: edges " + std::to_string(e[0]) + "-" + std::to_string(e[1]) +
                                 " and " + std::to_string(f[0]) + "-" + std::to_string(f[1]) + " cross");
    });
  }
}

bool convex_cycle(const std::vector<Vec2>& v) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e1 = v[(i + 1) % n] - v[i];
    const Vec2 e2 = v[(i + 2) % n] - v[(i + 1) % n];
    if (cross(e1, e2) < -1e-9 * norm(e1) * norm(e2)) return false;
  }
  return true;
}

}  // namespace

std::size_t Subdivision::interior_count() const {
  return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const Cell& c) { return !c.boundary; }));
}

Subdivision build_subdivision(const Packing& p, const NeighbourGraph& g, double R) {
  if (!(R > 0)) throw RangeError("build_subdivision: window radius must be positive");
  Subdivision s;
  s.points = p.centers;
  s.window_center = centroid(p.centers);
  s.window_radius = R;
  s.parallelogram_disc = p.disc.is_parallelogram();
  const double reach = R + 1.01 * p.disc.diameter();
  check_crossings(p, g, s.window_center, reach);

  const std::size_t n = p.centers.size();
  // Rotation system: neighbours sorted counterclockwise by direction.
  std::vector<std::vector<std::size_t>> rot(n);
  std::vector<std::size_t> first(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = g.adjacency[i];
    std::sort(rot[i].begin(), rot[i].end(), [&](std::size_t a, std::size_t b) {
      return angle_of(p.centers[a] - p.centers[i]) < angle_of(p.centers[b] - p.centers[i]);
    });
    first[i + 1] = first[i] + rot[i].size();
  }
  auto slot = [&](std::size_t v, std::size_t u) {
    const auto& r = rot[v];
    return static_cast<std::size_t>(std::find(r.begin(), r.end(), u) - r.begin());
  };
  std::vector<char> seen(first[n], 0);
  for (std::size_t v0 = 0; v0 < n; ++v0) {
    if (norm(p.centers[v0] - s.window_center) > reach) continue;
    for (std::size_t k0 = 0; k0 < rot[v0].size(); ++k0) {
      if (seen[first[v0] + k0]) continue;
      Cell cell;
      std::size_t v = v0;
      std::size_t k = k0;
      bool truncated = false;
      while (!seen[first[v] + k]) {
        seen[first[v] + k] = 1;
        cell.vertices.push_back(v);
        if (cell.vertices.size() > kMaxFaceLength) {
          truncated = true;
          break;
        }
        // Half-edge v -> u continues with u -> (neighbour of u clockwise after v).
        const std::size_t u = rot[v][k];
        const std::size_t back = slot(u, v);
        const std::size_t deg = rot[u].size();
        k = (back + deg - 1) % deg;
        v = u;
      }
      std::vector<Vec2> pts;
      pts.reserve(cell.vertices.size());
      for (std::size_t i : cell.vertices) pts.push_back(p.centers[i]);
      cell.sides = cell.vertices.size();
      cell.area = signed_area(pts);
      cell.convex = convex_cycle(pts);
      cell.boundary = truncated || !(cell.area > 0) ||
                      std::any_of(pts.begin(), pts.end(), [&](Vec2 q) { return norm(q - s.window_center) > R; });
      s.cells.push_back(std::move(cell));
    }
  }
  return s;
}

Subdivision build_subdivision(const Packing& p, double R) { return build_subdivision(p, neighbour_graph(p), R); }

PropositionCheck check_proposition(const Subdivision& s) {
  PropositionCheck r;
  if (s.parallelogram_disc)
    r.warnings.push_back("disc is a parallelogram; the six-side property is not guaranteed for it");
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    if (s.cells[i].boundary || s.cells[i].sides <= 6) continue;
    r.holds = false;
    r.offending.push_back(i);
  }
  return r;
}

PackingStats measure_stats(const Packing& p, const NeighbourGraph& g, const Subdivision& s) {
  PackingStats st;
  st.R = s.window_radius;
  double degrees = 0.0;
  for (std::size_t i = 0; i < p.centers.size(); ++i) {
    if (norm(p.centers[i] - s.window_center) > st.R) continue;
    ++st.centers_in_window;
    degrees += static_cast<double>(g.degree(i));
  }
  if (st.centers_in_window == 0) throw RangeError("measure_stats: no centers in the window");
  st.lambda_hat = degrees / static_cast<double>(st.centers_in_window);
  st.density_hat = static_cast<double>(st.centers_in_window) * p.disc.area() / (std::numbers::pi * st.R * st.R);
  double sides = 0.0;
  double corners = 0.0;
  for (const auto& c : s.cells) {
    if (c.boundary) continue;
    ++st.interior_cells;
    sides += static_cast<double>(c.sides);
    // Each vertex is a corner of deg(v) cells, so these shares sum to the vertex count.
    for (std::size_t v : c.vertices) corners += 1.0 / static_cast<double>(g.degree(v));
    st.max_sides = std::max(st.max_sides, c.sides);
    if (!c.convex) ++st.nonconvex_cells;
  }
  if (st.interior_cells > 0) {
    st.avg_sides_hat = sides / static_cast<double>(st.interior_cells);
    st.ratio_hat = corners / static_cast<double>(st.interior_cells);
  }
  st.d0p = std::clamp(p.disc.area() / (8.0 * max_triangle_area(p.disc)), 0.75, 1.0);
  st.bound = theorem_lower_bound({std::clamp(st.lambda_hat, 3.0, 6.0), st.d0p}).value;
  st.slack = st.density_hat - st.bound;
  return st;
}

PackingStats measure_stats(const Packing& p, double R) {
  double radius = p.generator.radius;
  if (!(radius > 0)) {
    const Vec2 c = centroid(p.centers);
    for (const auto& q : p.centers) radius = std::max(radius, norm(q - c));
  }
  if (!(R > 0) || R > 0.5 * radius * (1.0 + 1e-12))
    throw RangeError("measure_stats: window radius exceeds half the generated extent");
  const auto g = neighbour_graph(p);
  return measure_stats(p, g, build_subdivision(p, g, R));
}

}  // namespace minkpack
