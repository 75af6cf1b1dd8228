#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "minkpack/geometry.hpp"

namespace minkpack {

// A closed polygon whose side vectors all have gauge norm 1 for `disc`.
// Holds a copy of the disc so the value is self-contained.
class UnitSidedPolygon {
 public:
  // Throws InvalidInput unless every side has unit gauge (relative tol 1e-9).
  UnitSidedPolygon(ConvexDisc disc, std::vector<Vec2> vertices);

  // Vertices start at `origin` and follow the given side vectors.
  static UnitSidedPolygon from_sides(ConvexDisc disc, const std::vector<Vec2>& sides, Vec2 origin = {});

  const ConvexDisc& disc() const { return disc_; }
  const std::vector<Vec2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  std::vector<Vec2> sides() const;
  double area() const { return std::abs(signed_area(vertices_)); }
  bool convex() const { return is_convex(vertices_); }
  bool simple() const { return is_simple(vertices_); }
  bool centrosymmetric(double tol = 1e-9) const;

 private:
  ConvexDisc disc_;
  std::vector<Vec2> vertices_;
};

// The convex polygon whose side vectors are `sides` (summing to zero),
// counterclockwise, starting at the origin.
std::vector<Vec2> angle_sorted_polygon(std::vector<Vec2> sides);

struct FlipStats {
  std::size_t iterations = 0;
  std::size_t cap = 0;
  bool hit_cap = false;
};

// Reflects pocket arcs through chord midpoints until the polygon is convex.
// Chooses the pocket with the largest area gain, ties to the lowest index.
// Throws InvalidInput for a self-intersecting input.
UnitSidedPolygon convexify_flips(const UnitSidedPolygon& p, FlipStats* stats = nullptr);

// Keeps the larger half cut by the main diagonal, adds its point reflection,
// then convexifies. Throws InvalidInput for odd or nonconvex input.
UnitSidedPolygon symmetrize_even(const UnitSidedPolygon& p);

struct UnitTriangle {
  Vec2 s1, s2, s3;  // sides, s1 + s2 + s3 = 0, cross(s1, s2) > 0
  double area() const { return 0.5 * cross(s1, s2); }
};

struct TriangleResult {
  double area = 0.0;
  // Every maximizer found, including midpoints of flat optimal families.
  std::vector<UnitTriangle> maximizers;
};

struct ParallelogramResult {
  double area = 0.0;
  std::vector<std::array<Vec2, 2>> maximizers;  // (p, q), cross(p, q) > 0
};

struct HexagonResult {
  double area = 0.0;
  // (u1, u2, u3) in angular order; sides are u1, u2, u3, -u1, -u2, -u3.
  std::vector<std::array<Vec2, 3>> maximizers;
};

TriangleResult max_unit_triangle(const ConvexDisc& d);
ParallelogramResult max_unit_parallelogram(const ConvexDisc& d);
HexagonResult max_unit_centro_hexagon(const ConvexDisc& d);

// Delta: the largest area of a triangle with unit sides.
double max_triangle_area(const ConvexDisc& d);

struct PentagonSearchOptions {
  int starts = 64;
  double min_step = 1e-11;
};

// Best convex unit-sided pentagon found by multistart pattern search.
double max_pentagon_area(const ConvexDisc& d, const PentagonSearchOptions& opt = {});

// F'_k for k in 3..6. Throws RangeError otherwise.
double max_kgon_area(const ConvexDisc& d, int k);

struct ExtremalProfile {
  double area = 0.0;
  double delta = 0.0;
  double f3 = 0.0;
  double f4 = 0.0;
  double f5 = 0.0;
  double f6 = 0.0;
  double d0p = 0.0;  // area / (8 delta)

  double slack_f4() const { return area - 4.0 * delta - f4; }
  double slack_f5() const { return 0.5 * (f4 + f6) - f5; }
  double slack_f6() const { return area - f6; }
};

ExtremalProfile profile(const ConvexDisc& d);

// Centrosymmetric hexagon (+-1, 0), (+-w, +-1) with w = 2 d0p - 1.
// Throws RangeError unless 3/4 <= d0p <= 1.
ConvexDisc make_theorem_hexagon(double d0p);

// If d is (exactly, up to tol) a canonical theorem hexagon, its d0p; else a negative value.
double theorem_hexagon_parameter(const ConvexDisc& d, double tol = 1e-9);

}  // namespace minkpack
