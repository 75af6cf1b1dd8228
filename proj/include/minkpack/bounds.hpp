#pragma once

#include <string_view>

#include "minkpack/extremal.hpp"

namespace minkpack {

enum class Branch { HighD0UpperLambda, HighD0LowerLambda, LowD0 };

std::string_view to_string(Branch b);

struct BoundQuery {
  double lambda = 6.0;  // average neighbour count, [3, 6]
  double d0p = 1.0;     // thinnest six-neighbour lattice density, [3/4, 1]
};

struct BoundResult {
  double value = 0.0;
  Branch branch = Branch::LowD0;
};

// Piecewise lower bound on the density of a packing with average neighbour
// count lambda. The lambda in [3, 4], d0p > 7/8 branch is
//   d0p / (2 d0p (lambda - 2) - 2 (lambda - 3)),
// the form obtained from the concave-hull estimate; it meets the other two
// branches continuously on both seams.
BoundResult theorem_lower_bound(const BoundQuery& q);

// min over d0p of theorem_lower_bound.
double corollary1_bound(double lambda);

// min over d0p of theorem_lower_bound / d0p.
double corollary2_ratio_bound(double lambda);

enum class Objective { Bound, Ratio };

struct MinResult {
  double d0_star = 0.0;
  double value = 0.0;
};

// Golden-section search on each side of the d0p = 7/8 seam.
MinResult minimize_bound_over_d0(double lambda, Objective objective, double tol = 1e-10);

// Average number of sides of the cells, 2 lambda / (lambda - 2).
double avg_sides(double lambda);

// Vertices per cell, 2 / (lambda - 2).
double vertex_polygon_ratio(double lambda);

// Cell-area caps for k = 3..6 in terms of Delta and A only.
struct CellCaps {
  double cap3, cap4, cap5, cap6;
  double operator[](int k) const;
};

CellCaps cell_caps(const ExtremalProfile& p);

// Least concave majorant of (k, cap_k), k = 3..6, evaluated at s in [3, 6].
double concave_profile(const ExtremalProfile& p, double s);

// vertex_polygon_ratio * A / (4 * concave_profile(avg_sides)).
double density_bound_from_profile(const ExtremalProfile& p, double lambda);
double density_bound_from_profile(const ConvexDisc& d, double lambda);

}  // namespace minkpack
