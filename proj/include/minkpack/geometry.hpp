#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "minkpack/errors.hpp"

namespace minkpack {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  constexpr Vec2& operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr bool operator==(const Vec2&) const = default;
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double angle_of(Vec2 a) { return std::atan2(a.y, a.x); }

// Plain vertex list. Orientation and simplicity are not enforced here.
struct Polygon {
  std::vector<Vec2> vertices;

  std::size_t size() const { return vertices.size(); }
};

// Shoelace area, positive for counterclockwise order.
double signed_area(std::span<const Vec2> pts);

// Unsigned area. Throws InvalidInput for fewer than 3 vertices.
double polygon_area(const Polygon& p);

bool is_convex(std::span<const Vec2> pts, double rel_tol = 1e-12);

// Counterclockwise, with duplicate and collinear vertices removed.
std::vector<Vec2> normalize_convex(std::span<const Vec2> pts, double rel_tol = 1e-12);

// Convex hull (Andrew's monotone chain), counterclockwise, no collinear points.
std::vector<Vec2> convex_hull(std::vector<Vec2> pts);

// Does the closed polyline cross itself? Touching at shared endpoints of
// adjacent edges is allowed.
bool is_simple(std::span<const Vec2> pts);

struct DiscDiagnostics {
  bool convex = false;
  bool positive_area = false;
  bool even_vertex_count = false;
  bool symmetric = false;
  bool parallelogram = false;
  double symmetry_defect = 0.0;  // max |v[i+m] + v[i]| after normalization
  std::size_t vertex_count = 0;  // after collinear merge
  std::vector<std::string> messages;

  bool valid() const { return convex && positive_area && even_vertex_count && symmetric; }
};

// Diagnostic only; never throws.
DiscDiagnostics validate_disc(const Polygon& p);

// A centrally symmetric convex polygon centered at the origin, used as the
// unit ball of a Minkowski norm.
class ConvexDisc {
 public:
  // Normalizes (orientation, collinear merge) and validates. Throws InvalidInput.
  explicit ConvexDisc(std::span<const Vec2> vertices);
  explicit ConvexDisc(const Polygon& p) : ConvexDisc(std::span<const Vec2>(p.vertices)) {}

  static ConvexDisc regular(int n, double circumradius = 1.0, double phase = 0.0);
  static ConvexDisc square(double half_side = 1.0);

  const std::vector<Vec2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Vec2& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  Polygon polygon() const { return Polygon{vertices_}; }

  double area() const { return area_; }
  double diameter() const { return diameter_; }  // Euclidean
  double perimeter() const { return perimeter_; }
  bool is_parallelogram() const { return vertices_.size() == 4; }

  // Minkowski norm: min { t >= 0 : v in t*D }.
  double gauge(Vec2 v) const;

  // Point of the boundary at normalized arc length t in [0,1); t=0 is vertex 0.
  Vec2 boundary_point(double t) const;

  // Boundary point in the direction of v (v != 0).
  Vec2 radial_point(Vec2 v) const { return v / gauge(v); }

  ConvexDisc transformed(double a, double b, double c, double d) const;

 private:
  std::vector<Vec2> vertices_;
  std::vector<double> support_;   // cross(v_i, v_{i+1}) per edge
  std::vector<double> cum_len_;   // cumulative Euclidean edge length, size n+1
  double area_ = 0.0;
  double diameter_ = 0.0;
  double perimeter_ = 0.0;
};

double gauge_norm(const ConvexDisc& d, Vec2 v);
Vec2 boundary_point(const ConvexDisc& d, double t);

// Edge-merge Minkowski sum of two convex polygons (points and segments allowed).
// Throws InvalidInput for nonconvex input.
Polygon minkowski_sum(const Polygon& a, const Polygon& b);

// (P - P) / 2, which is centrally symmetric about the origin.
ConvexDisc centrosymmetrize(const Polygon& p);

}  // namespace minkpack
