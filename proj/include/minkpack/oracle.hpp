#pragma once

#include "minkpack/bounds.hpp"
#include "minkpack/geometry.hpp"

// Brute-force references for the extremal optimizers and the corollary
// minimizations. Every value is attained by a feasible configuration, so the
// scans bound the true maxima from below.
namespace minkpack::oracle {

// n boundary samples for one side; the other side is solved by bisection.
double grid_max_triangle(const ConvexDisc& d, int n);

// k in {4, 5, 6}. k = 4 scans sample pairs, k = 6 scans angular-order triples
// of a centrosymmetric hexagon, k = 5 scans three sides and closes with two.
double grid_max_kgon(const ConvexDisc& d, int k, int n);

// Minimum over a uniform grid of `points` values of d0p in [3/4, 1].
double corollary_min_oracle(double lambda, Objective objective, int points = 100001);

}  // namespace minkpack::oracle
