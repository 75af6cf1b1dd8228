#include "minkpack/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace minkpack {

namespace {

constexpr double kRangeSlack = 1e-12;

void check_lambda(double lambda, const char* where) {
  if (!(lambda >= 3.0 - kRangeSlack && lambda <= 6.0 + kRangeSlack))
    throw RangeError(std::string(where) + ": lambda must lie in [3, 6]");
}

void check_d0p(double d0p, const char* where) {
  if (!(d0p >= 0.75 - kRangeSlack && d0p <= 1.0 + kRangeSlack))
    throw RangeError(std::string(where) + ": d0p must lie in [3/4, 1]");
}

double low_branch(double l, double d) { return d / ((2.0 / 3.0) * d * (6.0 - l) + (l - 3.0) / 3.0); }
double upper_branch(double l, double d) { return d / (2.0 * d * (6.0 - l) + 1.5 * l - 8.0); }
double lower_branch(double l, double d) { return d / (2.0 * d * (l - 2.0) - 2.0 * (l - 3.0)); }

template <class F>
MinResult golden(F f, double a, double b, double tol) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - phi * (b - a);
  double x2 = a + phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    }
  }
  MinResult r{0.5 * (a + b), f(0.5 * (a + b))};
  // The interval is closed; the endpoints compete too.
  for (double x : {a, b}) {
    const double v = f(x);
    if (v < r.value) r = {x, v};
  }
  return r;
}

}  // namespace

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::HighD0UpperLambda:
      return "HIGH_D0_UPPER_LAMBDA";
    case Branch::HighD0LowerLambda:
      return "HIGH_D0_LOWER_LAMBDA";
    case Branch::LowD0:
      return "LOW_D0";
  }
  return "?";
}

BoundResult theorem_lower_bound(const BoundQuery& q) {
  check_lambda(q.lambda, "theorem_lower_bound");
  check_d0p(q.d0p, "theorem_lower_bound");
  const double l = std::clamp(q.lambda, 3.0, 6.0);
  const double d = std::clamp(q.d0p, 0.75, 1.0);
  if (d <= 7.0 / 8.0) return {low_branch(l, d), Branch::LowD0};
  if (l >= 4.0) return {upper_branch(l, d), Branch::HighD0UpperLambda};
  return {lower_branch(l, d), Branch::HighD0LowerLambda};
}

double corollary1_bound(double lambda) {
  check_lambda(lambda, "corollary1_bound");
  if (lambda >= 24.0 / 5.0) return 9.0 / (2.0 * (12.0 - lambda));
  if (lambda >= 4.0) return 2.0 / (8.0 - lambda);
  return 0.5;
}

double corollary2_ratio_bound(double lambda) {
  check_lambda(lambda, "corollary2_ratio_bound");
  if (lambda >= 4.0) return 2.0 / (8.0 - lambda);
  return 0.5;
}

MinResult minimize_bound_over_d0(double lambda, Objective objective, double tol) {
  check_lambda(lambda, "minimize_bound_over_d0");
  const double l = std::clamp(lambda, 3.0, 6.0);
  auto scaled = [objective](double v, double d) { return objective == Objective::Ratio ? v / d : v; };
  const auto low = golden([&](double d) { return scaled(low_branch(l, d), d); }, 0.75, 7.0 / 8.0, tol);
  const auto high = golden(
      [&](double d) { return scaled(l >= 4.0 ? upper_branch(l, d) : lower_branch(l, d), d); }, 7.0 / 8.0, 1.0, tol);
  return low.value <= high.value ? low : high;
}

double avg_sides(double lambda) {
  if (!(lambda > 2.0 && lambda <= 6.0 + kRangeSlack)) throw RangeError("avg_sides: lambda must lie in (2, 6]");
  return 2.0 * lambda / (lambda - 2.0);
}

double vertex_polygon_ratio(double lambda) {
  if (!(lambda > 2.0 && lambda <= 6.0 + kRangeSlack))
    throw RangeError("vertex_polygon_ratio: lambda must lie in (2, 6]");
  return 2.0 / (lambda - 2.0);
}

double CellCaps::operator[](int k) const {
  switch (k) {
    case 3:
      return cap3;
    case 4:
      return cap4;
    case 5:
      return cap5;
    case 6:
      return cap6;
    default:
      throw RangeError("cell caps exist for k = 3..6 only");
  }
}

CellCaps cell_caps(const ExtremalProfile& p) {
  const double cap4 = p.area - 4.0 * p.delta;
  return {p.delta, cap4, 0.5 * (cap4 + p.area), p.area};
}

double concave_profile(const ExtremalProfile& p, double s) {
  if (!(s >= 3.0 - kRangeSlack && s <= 6.0 + kRangeSlack)) throw RangeError("concave_profile: s must lie in [3, 6]");
  s = std::clamp(s, 3.0, 6.0);
  const auto caps = cell_caps(p);
  // Upper hull of four points with increasing abscissae.
  std::array<std::array<double, 2>, 4> pts{{{3, caps.cap3}, {4, caps.cap4}, {5, caps.cap5}, {6, caps.cap6}}};
  std::vector<std::array<double, 2>> hull;
  for (const auto& q : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      // Drop b when it lies on or below the chord a -> q.
      const double turn = (b[0] - a[0]) * (q[1] - a[1]) - (b[1] - a[1]) * (q[0] - a[0]);
      if (turn >= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(q);
  }
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[i + 1];
    if (s <= b[0]) return a[1] + (b[1] - a[1]) * (s - a[0]) / (b[0] - a[0]);
  }
  return hull.back()[1];
}

double density_bound_from_profile(const ExtremalProfile& p, double lambda) {
  check_lambda(lambda, "density_bound_from_profile");
  return vertex_polygon_ratio(lambda) * p.area / (4.0 * concave_profile(p, avg_sides(lambda)));
}

double density_bound_from_profile(const ConvexDisc& d, double lambda) {
  return density_bound_from_profile(profile(d), lambda);
}

}  // namespace minkpack
