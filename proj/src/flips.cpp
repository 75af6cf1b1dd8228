#include <algorithm>
#include <numeric>

#include "minkpack/extremal.hpp"

namespace minkpack {

namespace {

constexpr double kUnitTol = 1e-9;

// Indices of the strict convex hull, counterclockwise.
std::vector<std::size_t> hull_indices(const std::vector<Vec2>& pts) {
  std::vector<std::size_t> idx(pts.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return pts[a].x < pts[b].x || (pts[a].x == pts[b].x && (pts[a].y < pts[b].y || (pts[a].y == pts[b].y && a < b)));
  });
  std::vector<std::size_t> h(2 * idx.size());
  std::size_t k = 0;
  auto turn = [&](std::size_t o, std::size_t a, std::size_t b) { return cross(pts[a] - pts[o], pts[b] - pts[o]); };
  for (std::size_t i : idx) {
    while (k >= 2 && turn(h[k - 2], h[k - 1], i) <= 0) --k;
    h[k++] = i;
  }
  for (std::size_t r = idx.size() - 1, t = k + 1; r-- > 0;) {
    while (k >= t && turn(h[k - 2], h[k - 1], idx[r]) <= 0) --k;
    h[k++] = idx[r];
  }
  h.resize(k - 1);
  return h;
}

double factorial_capped(std::size_t n, double cap) {
  double f = 1.0;
  for (std::size_t i = 2; i <= n && f < cap; ++i) f *= static_cast<double>(i);
  return std::min(f, cap);
}

}  // namespace

UnitSidedPolygon::UnitSidedPolygon(ConvexDisc disc, std::vector<Vec2> vertices)
    : disc_(std::move(disc)), vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) throw InvalidInput("unit-sided polygon needs at least 3 vertices");
  for (const auto& s : sides()) {
    if (std::abs(disc_.gauge(s) - 1.0) > kUnitTol) throw InvalidInput("side vector is not of unit gauge length");
  }
}

UnitSidedPolygon UnitSidedPolygon::from_sides(ConvexDisc disc, const std::vector<Vec2>& sides, Vec2 origin) {
  Vec2 closure{};
  for (const auto& s : sides) closure += s;
  if (norm(closure) > kUnitTol * std::max(1.0, disc.diameter())) throw InvalidInput("side vectors do not close");
  std::vector<Vec2> v{origin};
  for (std::size_t i = 0; i + 1 < sides.size(); ++i) v.push_back(v.back() + sides[i]);
  return UnitSidedPolygon(std::move(disc), std::move(v));
}

std::vector<Vec2> UnitSidedPolygon::sides() const {
  std::vector<Vec2> s;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) s.push_back(vertices_[(i + 1) % n] - vertices_[i]);
  return s;
}

bool UnitSidedPolygon::centrosymmetric(double tol) const {
  const std::size_t n = vertices_.size();
  if (n % 2 != 0) return false;
  const Vec2 c = (vertices_[0] + vertices_[n / 2]) * 0.5;
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (norm(vertices_[i] + vertices_[i + n / 2] - c * 2.0) > tol * std::max(1.0, disc_.diameter())) return false;
  }
  return true;
}

std::vector<Vec2> angle_sorted_polygon(std::vector<Vec2> sides) {
  std::stable_sort(sides.begin(), sides.end(), [](Vec2 a, Vec2 b) { return angle_of(a) < angle_of(b); });
  std::vector<Vec2> v{{0.0, 0.0}};
  for (std::size_t i = 0; i + 1 < sides.size(); ++i) v.push_back(v.back() + sides[i]);
  return v;
}

UnitSidedPolygon convexify_flips(const UnitSidedPolygon& p, FlipStats* stats) {
  if (!p.simple()) throw InvalidInput("convexify_flips: boundary is not a simple closed curve");
  std::vector<Vec2> q = p.vertices();
  const std::size_t n = q.size();
  const bool ccw = signed_area(q) > 0;
  const double scale = std::max(1.0, p.disc().diameter());
  const double gain_tol = 1e-12 * scale * scale;

  FlipStats st;
  st.cap = static_cast<std::size_t>(factorial_capped(n - 1, 1e5));
  while (true) {
    auto hull = hull_indices(q);
    if (!ccw) std::reverse(hull.begin(), hull.end());
    // Pockets: polygon arcs strictly between consecutive hull vertices.
    double best_gain = 0.0;
    std::size_t best_from = n;
    std::size_t best_to = n;
    for (std::size_t h = 0; h < hull.size(); ++h) {
      const std::size_t i = hull[h];
      const std::size_t j = hull[(h + 1) % hull.size()];
      if ((i + 1) % n == j) continue;
      std::vector<Vec2> pocket;
      for (std::size_t m = i;; m = (m + 1) % n) {
        pocket.push_back(q[m]);
        if (m == j) break;
      }
      const double gain = 2.0 * std::abs(signed_area(pocket));
      if (gain <= gain_tol) continue;
      const bool better = best_from == n || gain > best_gain * (1.0 + 1e-12) ||
                          (gain >= best_gain * (1.0 - 1e-12) && i < best_from);
      if (better) {
        best_gain = gain;
        best_from = i;
        best_to = j;
      }
    }
    if (best_from == n) break;
    if (st.iterations >= st.cap) {
      st.hit_cap = true;
      break;
    }
    const Vec2 mid2 = q[best_from] + q[best_to];
    std::vector<std::size_t> arc;
    for (std::size_t m = (best_from + 1) % n; m != best_to; m = (m + 1) % n) arc.push_back(m);
    std::vector<Vec2> mirrored;
    for (auto it = arc.rbegin(); it != arc.rend(); ++it) mirrored.push_back(mid2 - q[*it]);
    for (std::size_t a = 0; a < arc.size(); ++a) q[arc[a]] = mirrored[a];
    ++st.iterations;
  }
  if (stats) *stats = st;
  if (st.hit_cap) {
    auto v = angle_sorted_polygon(p.sides());
    if (!ccw) std::reverse(v.begin() + 1, v.end());
    return UnitSidedPolygon(p.disc(), std::move(v));
  }
  return UnitSidedPolygon(p.disc(), std::move(q));
}

UnitSidedPolygon symmetrize_even(const UnitSidedPolygon& p) {
  const std::size_t k = p.size();
  if (k % 2 != 0) throw InvalidInput("symmetrize_even: odd number of sides");
  if (!p.convex()) throw InvalidInput("symmetrize_even: input must be convex");
  const auto& v = p.vertices();
  const std::size_t half = k / 2;
  std::vector<Vec2> first(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(half + 1));
  std::vector<Vec2> second(v.begin() + static_cast<std::ptrdiff_t>(half), v.end());
  second.push_back(v[0]);
  const bool keep_first = std::abs(signed_area(first)) >= std::abs(signed_area(second));
  const auto& kept = keep_first ? first : second;  // endpoints are the diagonal
  const Vec2 mid2 = kept.front() + kept.back();
  std::vector<Vec2> out = kept;
  for (std::size_t i = 1; i + 1 < kept.size(); ++i) out.push_back(mid2 - kept[i]);
  return convexify_flips(UnitSidedPolygon(p.disc(), std::move(out)));
}

}  // namespace minkpack
