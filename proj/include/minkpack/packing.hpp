#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "minkpack/geometry.hpp"

namespace minkpack {

enum class GeneratorKind { Six, Four, Honeycomb, Mixed, Random, Custom };

std::string_view to_string(GeneratorKind k);
// Accepts the names produced by to_string; throws InvalidInput otherwise.
GeneratorKind parse_generator(std::string_view name);

// Neighbour count of the pure constructions: 6, 4, 3.
double generator_lambda(GeneratorKind k);

struct GeneratorInfo {
  GeneratorKind kind = GeneratorKind::Custom;
  std::vector<Vec2> basis;  // lattice basis (lattice kinds)
  std::vector<Vec2> motif;  // points per lattice cell (lattice kinds)
  GeneratorKind part_a = GeneratorKind::Six;
  GeneratorKind part_b = GeneratorKind::Four;
  double fraction = 1.0;  // share of translates belonging to part_a (mixed)
  int strip_width = 0;    // rows per strip period (mixed)
  int extent = 0;
  std::uint64_t seed = 0;  // random kind
  double radius = 0.0;     // Euclidean generation radius about the origin
};

struct Packing {
  ConvexDisc disc;
  std::vector<Vec2> centers;
  GeneratorInfo generator;
  std::vector<std::string> warnings;
};

// Touching tolerance: 1e-7 times the disc diameter.
double touch_tolerance(const ConvexDisc& d);

// Euclidean radius of the largest disc centred at the origin inside d.
double inradius(const ConvexDisc& d);

// extent * (shortest possible edge = 2 * inradius).
double generation_radius(const ConvexDisc& d, int extent);

// All points b1 i + b2 j + m (m in motif) within the generation radius.
Packing lattice_packing(const ConvexDisc& d, Vec2 b1, Vec2 b2, const std::vector<Vec2>& motif, int extent);

// Lattice spanned by 2 s1, 2 s2 of a maximal unit-sided triangle.
Packing six_neighbour_lattice(const ConvexDisc& d, int extent);
// Lattice spanned by 2 p, 2 q of a maximal unit-sided parallelogram.
Packing four_neighbour_lattice(const ConvexDisc& d, int extent);
// Two-point lattice whose edges are 2 u1, -2 u2, 2 u3 for a maximal
// centrosymmetric unit-sided hexagon with sides u1, u2, u3, -u1, -u2, -u3.
Packing three_neighbour_honeycomb(const ConvexDisc& d, int extent);

Packing make_generator(const ConvexDisc& d, GeneratorKind k, int extent);

// Alternating horizontal strips of two constructions. On a canonical theorem
// hexagon the strips are exact rows; otherwise the lattices are clipped to
// strips and conflicting translates are dropped (with a warning).
// fraction_a is the share of translates of type a, strip_width the number of
// rows in one strip period.
Packing mixed_strip_packing(const ConvexDisc& d, GeneratorKind a, GeneratorKind b, double fraction_a, int strip_width,
                            int extent);

// Share of type-a translates giving the average neighbour count lambda.
double strip_fraction_for_lambda(GeneratorKind a, GeneratorKind b, double lambda);

// Average neighbour count of the infinite row arrangement built by
// mixed_strip_packing on the theorem hexagon, interfaces included.
double strip_lambda(double d0p, GeneratorKind a, GeneratorKind b, double fraction_a, int strip_width);
// Density of the same arrangement.
double strip_density(double d0p, GeneratorKind a, GeneratorKind b, double fraction_a, int strip_width);

// The construction meeting the density bound at (lambda, d0p) on the theorem
// hexagon: a pure packing for lambda in {6, 4, 3} where it applies, otherwise
// strips of the two constituents selected by d0p, with a period of
// strip_width .. 2 strip_width rows and the row split whose exact neighbour
// count, separators included, is closest to lambda.
Packing equality_packing(double d0p, double lambda, int strip_width, int extent);

// Rows of touching translates of the theorem hexagon, each row shifted at
// random within the range that keeps at least five neighbours per translate.
// Requires d0p in [3/4 + 1/40, 1) so the disc is not a parallelogram.
Packing random_five_neighbour_packing(double d0p, int extent, std::uint64_t seed);

// Rebuilds a packing from its declared generator parameters: lattice kinds
// and mixed strips on d, random rows on the theorem hexagon d must be.
// Throws InvalidInput for custom packings.
Packing generate(const ConvexDisc& d, const GeneratorInfo& g);

// Image of a packing under the linear map [[a, b], [c, d]].
Packing transformed(const Packing& p, double a, double b, double c, double d);

struct Violation {
  std::size_t i = 0, j = 0;
  double gauge = 0.0;
};

// Pairs closer than 2 - eps in the gauge. Empty means the translates do not overlap.
std::vector<Violation> validate_packing(const Packing& p);

struct NeighbourGraph {
  std::vector<std::array<std::size_t, 2>> edges;  // i < j
  std::vector<std::vector<std::size_t>> adjacency;
  std::size_t degree(std::size_t i) const { return adjacency[i].size(); }
};

// Pairs at gauge distance 2 within eps. Throws InvariantViolation for an
// invalid packing.
NeighbourGraph neighbour_graph(const Packing& p);

struct Cell {
  std::vector<std::size_t> vertices;  // counterclockwise
  std::size_t sides = 0;              // combinatorial: boundary half-edges
  double area = 0.0;
  bool convex = true;
  bool boundary = false;  // unbounded, or leaves the window
};

struct Subdivision {
  std::vector<Vec2> points;
  std::vector<Cell> cells;
  Vec2 window_center{};
  double window_radius = 0.0;
  bool parallelogram_disc = false;

  std::size_t interior_count() const;
};

// Faces of the touching graph by rotation-system traversal, restricted to the
// window of radius R about the centroid. Throws InvariantViolation if two
// edges cross.
Subdivision build_subdivision(const Packing& p, const NeighbourGraph& g, double R);
Subdivision build_subdivision(const Packing& p, double R);

struct PropositionCheck {
  bool holds = true;
  std::vector<std::size_t> offending;  // indices into Subdivision::cells
  std::vector<std::string> warnings;
};

// Every interior cell has at most six sides.
PropositionCheck check_proposition(const Subdivision& s);

struct PackingStats {
  double R = 0.0;
  std::size_t centers_in_window = 0;
  std::size_t interior_cells = 0;
  double lambda_hat = 0.0;
  double density_hat = 0.0;
  double avg_sides_hat = 0.0;
  double ratio_hat = 0.0;  // vertices per cell, from interior cell corners
  std::size_t max_sides = 0;
  std::size_t nonconvex_cells = 0;
  double d0p = 0.0;
  double bound = 0.0;  // theorem_lower_bound(lambda_hat clamped to [3, 6], d0p)
  double slack = 0.0;  // density_hat - bound
};

// Throws RangeError when R exceeds half the generation radius.
PackingStats measure_stats(const Packing& p, double R);
PackingStats measure_stats(const Packing& p, const NeighbourGraph& g, const Subdivision& s);

}  // namespace minkpack
