#pragma once

#include <numbers>
#include <random>
#include <vector>

#include "minkpack/geometry.hpp"

namespace minkpack::testing {

// Random centrally symmetric convex disc with between 4 and 2*max_half vertices.
inline ConvexDisc random_disc(std::mt19937_64& rng, int max_half = 6) {
  std::uniform_int_distribution<int> half(2, max_half);
  std::uniform_real_distribution<double> ang(0.0, std::numbers::pi);
  std::uniform_real_distribution<double> rad(0.5, 1.5);
  for (;;) {
    const int m = half(rng);
    std::vector<Vec2> pts;
    for (int i = 0; i < m; ++i) {
      const double a = ang(rng);
      const double r = rad(rng);
      const Vec2 v{r * std::cos(a), r * std::sin(a)};
      pts.push_back(v);
      pts.push_back(-v);
    }
    auto hull = convex_hull(pts);
    if (hull.size() >= 4 && signed_area(hull) > 0.2) return ConvexDisc(hull);
  }
}

// Random linear map with |det| bounded away from zero.
struct Linear {
  double a, b, c, d;
  double det() const { return a * d - b * c; }
  Vec2 apply(Vec2 v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
};

inline Linear random_linear(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (;;) {
    Linear t{u(rng), u(rng), u(rng), u(rng)};
    if (std::abs(t.det()) > 0.3) return t;
  }
}

}  // namespace minkpack::testing

#include <algorithm>

#include "minkpack/extremal.hpp"

namespace minkpack::testing {

// Boundary point u with gauge(w - u) = 1 (bisection over the angle from w).
inline Vec2 close_two_sides(const ConvexDisc& d, Vec2 w) {
  const double base = std::atan2(w.y, w.x);
  auto at = [&](double phi) {
    const Vec2 dir{std::cos(base + phi), std::sin(base + phi)};
    return dir / d.gauge(dir);
  };
  double lo = 0.0, hi = std::numbers::pi;
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    (d.gauge(w - at(mid)) <= 1.0 ? lo : hi) = mid;
  }
  return at(0.5 * (lo + hi));
}

// Random simple unit-sided k-gon (side order shuffled; rejection-sampled).
inline UnitSidedPolygon random_unit_polygon(const ConvexDisc& d, int k, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> t(0.0, 1.0);
  for (;;) {
    std::vector<Vec2> sides;
    Vec2 sum{};
    for (int i = 0; i < k - 2; ++i) {
      sides.push_back(d.boundary_point(t(rng) * 0.999999));
      sum += sides.back();
    }
    const Vec2 w = -sum;
    if (norm(w) < 1e-6 || d.gauge(w) > 2.0) continue;
    const Vec2 u = close_two_sides(d, w);
    sides.push_back(u);
    sides.push_back(w - u);
    for (int attempt = 0; attempt < 20; ++attempt) {
      std::shuffle(sides.begin(), sides.end(), rng);
      std::vector<Vec2> v{{0, 0}};
      for (std::size_t i = 0; i + 1 < sides.size(); ++i) v.push_back(v.back() + sides[i]);
      if (is_simple(v) && std::abs(signed_area(v)) > 1e-6) return UnitSidedPolygon(d, v);
    }
  }
}

}  // namespace minkpack::testing
