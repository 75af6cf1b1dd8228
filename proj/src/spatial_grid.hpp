#pragma once

#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "minkpack/geometry.hpp"

namespace minkpack::detail {

// Uniform bucket grid; for_each_near visits the 3x3 block of buckets around p,
// which covers every point within `cell` of p.
class SpatialGrid {
 public:
  SpatialGrid(const std::vector<Vec2>& pts, double cell) : cell_(cell) {
    for (std::size_t i = 0; i < pts.size(); ++i) buckets_[key(ix(pts[i].x), ix(pts[i].y))].push_back(i);
  }

  template <class F>
  void for_each_near(Vec2 p, F&& f) const {
    const std::int64_t cx = ix(p.x);
    const std::int64_t cy = ix(p.y);
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        const auto it = buckets_.find(key(cx + dx, cy + dy));
        if (it == buckets_.end()) continue;
        for (std::size_t j : it->second) f(j);
      }
    }
  }

 private:
  std::int64_t ix(double v) const { return static_cast<std::int64_t>(std::floor(v / cell_)); }
  static std::uint64_t key(std::int64_t x, std::int64_t y) {
    return (static_cast<std::uint64_t>(x) << 32) ^ (static_cast<std::uint64_t>(y) & 0xffffffffULL);
  }

  double cell_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
};

}  // namespace minkpack::detail
