#include "minkpack/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <vector>

namespace minkpack::oracle {

namespace {

std::vector<Vec2> samples(const ConvexDisc& d, int n) {
  std::vector<Vec2> s;
  s.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s.push_back(d.boundary_point(static_cast<double>(i) / n));
  return s;
}

// Boundary point u with gauge(w - u) = 1, on the given rotational side of w.
Vec2 close_pair(const ConvexDisc& d, Vec2 w, double side) {
  const double base = norm(w) > 0 ? std::atan2(w.y, w.x) : 0.0;
  auto at = [&](double phi) {
    const double t = base + side * phi;
    const Vec2 dir{std::cos(t), std::sin(t)};
    return dir / d.gauge(dir);
  };
  double lo = 0.0;
  double hi = std::numbers::pi;
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    (d.gauge(w - at(mid)) <= 1.0 ? lo : hi) = mid;
  }
  return at(0.5 * (lo + hi));
}

double sorted_polygon_area(std::vector<Vec2> sides) {
  std::sort(sides.begin(), sides.end(), [](Vec2 a, Vec2 b) { return std::atan2(a.y, a.x) < std::atan2(b.y, b.x); });
  Vec2 p{};
  double twice = 0.0;
  for (const auto& s : sides) {
    twice += cross(p, p + s);
    p = p + s;
  }
  return 0.5 * twice;
}

}  // namespace

double grid_max_triangle(const ConvexDisc& d, int n) {
  if (n < 64) throw RangeError("grid_max_triangle: n must be at least 64");
  double best = 0.0;
  for (const auto& a : samples(d, n)) {
    for (double side : {1.0, -1.0}) {
      const Vec2 b = close_pair(d, a, side);
      best = std::max(best, 0.5 * std::abs(cross(a, b)));
    }
  }
  return best;
}

double grid_max_kgon(const ConvexDisc& d, int k, int n) {
  if (n < 64) throw RangeError("grid_max_kgon: n must be at least 64");
  const auto s = samples(d, n);
  const auto un = static_cast<std::size_t>(n);
  double best = 0.0;
  switch (k) {
    case 4:
      for (std::size_t i = 0; i < un; ++i)
        for (std::size_t j = i + 1; j < un; ++j) best = std::max(best, std::abs(cross(s[i], s[j])));
      return best;
    case 6: {
      // Parameters within half the perimeter are in angular order.
      const std::size_t half = un / 2;
      for (std::size_t i = 0; i < un; ++i) {
        for (std::size_t j = i; j <= i + half; ++j) {
          for (std::size_t l = j; l <= i + half; ++l) {
            const Vec2 a = s[i];
            const Vec2 b = s[j % un];
            const Vec2 c = s[l % un];
            best = std::max(best, cross(a, b) + cross(a, c) + cross(b, c));
          }
        }
      }
      return best;
    }
    case 5:
      for (std::size_t i = 0; i < un; ++i) {
        for (std::size_t j = i; j < un; ++j) {
          for (std::size_t l = j; l < un; ++l) {
            const Vec2 w = -(s[i] + s[j] + s[l]);
            if (d.gauge(w) > 2.0) continue;
            const Vec2 u = close_pair(d, w, 1.0);
            best = std::max(best, sorted_polygon_area({s[i], s[j], s[l], u, w - u}));
          }
        }
      }
      return best;
    default:
      throw RangeError("grid_max_kgon: k must be 4, 5 or 6");
  }
}

double corollary_min_oracle(double lambda, Objective objective, int points) {
  if (points < 2) throw RangeError("corollary_min_oracle: need at least 2 grid points");
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < points; ++i) {
    const double d = 0.75 + 0.25 * static_cast<double>(i) / (points - 1);
    const double v = theorem_lower_bound({lambda, d}).value;
    best = std::min(best, objective == Objective::Ratio ? v / d : v);
  }
  return best;
}

}  // namespace minkpack::oracle
