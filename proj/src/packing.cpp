#include "minkpack/packing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "minkpack/bounds.hpp"
#include "minkpack/errors.hpp"
#include "minkpack/extremal.hpp"
#include "spatial_grid.hpp"

namespace minkpack {

namespace {

struct LatticeCandidate {
  Vec2 b1, b2;
  std::vector<Vec2> motif;
};

// Contacts and overlaps seen from each motif point; used to rank maximizers.
struct ContactCount {
  bool overlapping = false;
  std::size_t contacts = 0;
};

ContactCount count_contacts(const ConvexDisc& d, const LatticeCandidate& c) {
  const double eps = touch_tolerance(d);
  const double reach = d.diameter() * 1.01;
  const double det = std::abs(cross(c.b1, c.b2));
  const int ki = static_cast<int>(std::ceil(reach * norm(c.b2) / det)) + 2;
  const int kj = static_cast<int>(std::ceil(reach * norm(c.b1) / det)) + 2;
  ContactCount r;
  for (const auto& m : c.motif) {
    for (int i = -ki; i <= ki; ++i) {
      for (int j = -kj; j <= kj; ++j) {
        for (const auto& m2 : c.motif) {
          const Vec2 v = c.b1 * i + c.b2 * j + m2 - m;
          if (norm(v) > reach || (v.x == 0 && v.y == 0)) continue;
          const double g = d.gauge(v);
          if (g < 2.0 - eps) r.overlapping = true;
          if (std::abs(g - 2.0) <= eps) ++r.contacts;
        }
      }
    }
  }
  return r;
}

// Valid candidates first, then the fewest contacts, then the first found.
LatticeCandidate pick(const ConvexDisc& d, const std::vector<LatticeCandidate>& cs, const char* what) {
  if (cs.empty()) throw InvariantViolation(std::string(what) + ": no maximizer");
  std::size_t best = 0;
  ContactCount bc = count_contacts(d, cs[0]);
  for (std::size_t i = 1; i < cs.size(); ++i) {
    const auto c = count_contacts(d, cs[i]);
    if (std::pair{c.overlapping, c.contacts} < std::pair{bc.overlapping, bc.contacts}) {
      best = i;
      bc = c;
    }
  }
  return cs[best];
}

Packing from_candidate(const ConvexDisc& d, const LatticeCandidate& c, GeneratorKind kind, int extent) {
  auto p = lattice_packing(d, c.b1, c.b2, c.motif, extent);
  p.generator.kind = kind;
  return p;
}

void check_extent(int extent) {
  if (extent < 1) throw RangeError("extent must be positive");
}

// One horizontal row pattern of the theorem hexagon: points at
// offset + motif + n * period, consecutive rows 2 apart.
struct RowType {
  double period;
  std::vector<double> motif;
  double shift;  // offset change between consecutive rows of one strip
  double density() const { return static_cast<double>(motif.size()) / period; }
};

RowType row_type(GeneratorKind k, double w) {
  switch (k) {
    case GeneratorKind::Six:
      return {2.0, {0.0}, 1.0};
    case GeneratorKind::Four:
      return {4.0 * w, {0.0}, 2.0 * w};
    case GeneratorKind::Honeycomb:
      return {4.0 + 4.0 * w, {0.0, 2.0}, 2.0 * w + 2.0};
    default:
      throw InvalidInput("strip constituents must be six, four or honeycomb");
  }
}

double wrap(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0) r += period;
  if (period - r < 1e-12 * period) r = 0.0;
  return r;
}

constexpr int kSamplePeriods = 1024;

// Touching pairs (upper x, lower x) between a row and the one below it, over
// kSamplePeriods periods of the upper row.
std::vector<std::pair<double, double>> row_touches(const RowType& lo, double lo_off, const RowType& hi, double hi_off,
                                                   double w) {
  const double reach = 2.0 * w + 1e-9;
  std::vector<std::pair<double, double>> out;
  for (int n = 0; n < kSamplePeriods; ++n) {
    for (double s : hi.motif) {
      const double x = n * hi.period + hi_off + s;
      for (double t : lo.motif) {
        const double first = std::ceil((x - reach - lo_off - t) / lo.period);
        for (double k = first;; k += 1.0) {
          const double xl = lo_off + t + k * lo.period;
          if (xl > x + reach) break;
          out.emplace_back(x, xl);
        }
      }
    }
  }
  return out;
}

// Contacts per unit length between a row and the one below it.
double row_contacts(const RowType& lo, double lo_off, const RowType& hi, double hi_off, double w) {
  return static_cast<double>(row_touches(lo, lo_off, hi, hi_off, w).size()) / (kSamplePeriods * hi.period);
}

// Two touching segments between horizontal rows cross iff their ends are in
// opposite order. Only possible when 2w reaches the in-row spacing (the square).
bool rows_cross(const RowType& lo, double lo_off, const RowType& hi, double hi_off, double w) {
  auto t = row_touches(lo, lo_off, hi, hi_off, w);
  std::sort(t.begin(), t.end());
  double max_lower = -std::numeric_limits<double>::infinity();
  double run_max = max_lower;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0 && t[i].first > t[i - 1].first + 1e-9) max_lower = std::max(max_lower, run_max);
    if (t[i].second < max_lower - 1e-9) return true;
    run_max = std::max(run_max, t[i].second);
  }
  return false;
}

// Offset of a new row above `lo` maximizing the contacts without crossing
// touches; ties to the smallest offset. Candidates are the offsets where a
// touch starts or ends, and the midpoints between them.
double interface_offset(const RowType& lo, double lo_off, const RowType& hi, double w) {
  std::vector<double> cands{0.0};
  const int reps = static_cast<int>(std::ceil(hi.period / lo.period)) + 1;
  for (int n = 0; n <= reps; ++n)
    for (double t : lo.motif)
      for (double s : hi.motif)
        for (double sign : {-1.0, 1.0}) cands.push_back(wrap(lo_off + t + n * lo.period + sign * 2.0 * w - s, hi.period));
  std::sort(cands.begin(), cands.end());
  const std::size_t n = cands.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double next = i + 1 < n ? cands[i + 1] : cands[0] + hi.period;
    if (next - cands[i] > 1e-9) cands.push_back(wrap(0.5 * (cands[i] + next), hi.period));
  }
  std::sort(cands.begin(), cands.end());
  double best = cands.front();
  double best_n = -1.0;
  for (double o : cands) {
    const double c = row_contacts(lo, lo_off, hi, o, w);
    if (c > best_n + 1e-9 && !rows_cross(lo, lo_off, hi, o, w)) {
      best_n = c;
      best = o;
    }
  }
  return best;
}

// One row of a strip period. Rows of one strip continue each other's shift;
// a row starting a new strip (or a chain row) is placed by interface_offset.
struct PatternRow {
  RowType type;
  int strip;  // index of the strip within the period; chain rows get their own
};

// Period of the strip arrangement: na rows of a, then nb = width - na rows of
// b. A chain row (translates touching their two neighbours) separates strips
// unless one of them is six, whose rows are chains already. The outer rows of
// a honeycomb strip attach a third translate to the right of each touching
// pair, so the cells along the separator stay convex with at most six sides.
std::vector<PatternRow> strip_pattern(GeneratorKind a, GeneratorKind b, int na, int width, double w) {
  std::vector<PatternRow> rows;
  const RowType chain = row_type(GeneratorKind::Six, w);
  const bool mixed = na > 0 && na < width;
  auto strip = [&](GeneratorKind k, int n, int id) {
    RowType t = row_type(k, w);
    for (int i = 0; i < n; ++i) {
      RowType r = t;
      if (mixed && k == GeneratorKind::Honeycomb && (i == 0 || i == n - 1)) r.motif.push_back(4.0);
      rows.push_back({r, id});
    }
  };
  const bool separate = a != GeneratorKind::Six && b != GeneratorKind::Six;
  strip(a, na, 0);
  if (mixed && separate) rows.push_back({chain, 1});
  strip(b, width - na, 2);
  if (mixed && separate) rows.push_back({chain, 3});
  return rows;
}

struct PlannedRow {
  const RowType* type;
  double offset;
};

// Rows k0..k1 of the tiled pattern; row 0 sits in the middle of an a strip.
std::vector<PlannedRow> plan_rows(const std::vector<PatternRow>& pattern, int na, int k0, int k1, double w) {
  const int period = static_cast<int>(pattern.size());
  std::vector<PlannedRow> rows;
  const PatternRow* prev = nullptr;
  double prev_off = 0.0;
  for (int k = k0; k <= k1; ++k) {
    const auto& r = pattern[static_cast<std::size_t>(((k + na / 2) % period + period) % period)];
    double off = 0.0;
    if (prev && prev->strip == r.strip && prev->type.period == r.type.period)
      off = wrap(prev_off + r.type.shift, r.type.period);
    else if (prev)
      off = interface_offset(prev->type, prev_off, r.type, w);
    rows.push_back({&r.type, off});
    prev = &r;
    prev_off = off;
  }
  return rows;
}

// Touching pairs inside one row, per unit length.
double in_row_contacts(const RowType& t) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < t.motif.size(); ++i) {
    const double next = i + 1 < t.motif.size() ? t.motif[i + 1] : t.motif[0] + t.period;
    if (next - t.motif[i] <= 2.0 + 1e-9) ++n;
  }
  return static_cast<double>(n) / t.period;
}

// Average neighbour count of the infinite periodic strip arrangement.
double periodic_lambda(const std::vector<PatternRow>& pattern, int na, double w) {
  const int period = static_cast<int>(pattern.size());
  const auto rows = plan_rows(pattern, na, 0, 3 * period, w);
  double half_edges = 0.0;
  double points = 0.0;
  for (int r = period; r < 2 * period; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    const auto& lo = rows[static_cast<std::size_t>(r - 1)];
    const auto& hi = rows[static_cast<std::size_t>(r + 1)];
    half_edges += 2.0 * in_row_contacts(*row.type) + row_contacts(*lo.type, lo.offset, *row.type, row.offset, w) +
                  row_contacts(*row.type, row.offset, *hi.type, hi.offset, w);
    points += row.type->density();
  }
  return half_edges / points;
}

// Density of the infinite periodic strip arrangement: translates per row
// length over the row pitch 2, times A = 2 (1 + w).
double periodic_density(const std::vector<PatternRow>& pattern, double w) {
  double points = 0.0;
  for (const auto& r : pattern) points += r.type.density();
  return points / (2.0 * static_cast<double>(pattern.size())) * 2.0 * (1.0 + w);
}

int rows_of_a(const RowType& ta, const RowType& tb, double fraction, int width) {
  // Row share of type a giving the requested share of translates.
  const double x = fraction * tb.density() / (fraction * tb.density() + (1.0 - fraction) * ta.density());
  int na = static_cast<int>(std::lround(width * x));
  if (fraction > 0.0 && na == 0) na = 1;
  if (fraction < 1.0 && na == width) na = width - 1;
  if (fraction >= 1.0) na = width;
  if (fraction <= 0.0) na = 0;
  return na;
}

// Share of type-a translates among the strip rows when na of width rows are a;
// rows_of_a inverts it.
double fraction_of_rows(const RowType& ta, const RowType& tb, int na, int width) {
  const double pa = na * ta.density();
  const double pb = (width - na) * tb.density();
  return pa / (pa + pb);
}

Packing theorem_rows(const ConvexDisc& d, double d0p, GeneratorKind a, GeneratorKind b, int na, int width, int extent) {
  const double w = 2.0 * d0p - 1.0;
  const auto pattern = strip_pattern(a, b, na, width, w);
  const double radius = generation_radius(d, extent);
  const int half = static_cast<int>(std::floor(radius / 2.0));
  Packing p{d, {}, {}, {}};
  const auto rows = plan_rows(pattern, na, -half, half, w);
  for (int k = -half; k <= half; ++k) {
    const auto& [t, off] = rows[static_cast<std::size_t>(k + half)];
    const double y = 2.0 * k;
    const double first = std::floor((-radius - off) / t->period) - 1.0;
    for (double n = first;; n += 1.0) {
      const double base = off + n * t->period;
      if (base > radius + t->period) break;
      for (double s : t->motif) {
        const Vec2 c{base + s, y};
        if (norm(c) <= radius) p.centers.push_back(c);
      }
    }
  }
  p.generator.radius = radius;
  return p;
}

Packing clipped_strips(const ConvexDisc& d, GeneratorKind a, GeneratorKind b, double fraction, int width, int extent) {
  const auto pa = make_generator(d, a, extent);
  const auto pb = make_generator(d, b, extent);
  const double row = 2.0 * inradius(d);
  const double height = width * row;
  // Area share of type a from the count share and the two densities.
  const double na = static_cast<double>(pa.centers.size());
  const double nb = static_cast<double>(pb.centers.size());
  const double share = fraction * nb / (fraction * nb + (1.0 - fraction) * na);
  const double ha = share * height;
  auto in_a = [&](Vec2 c) {
    const double ph = std::fmod(c.y + 0.5 * ha, height);
    return (ph < 0 ? ph + height : ph) < ha;
  };
  Packing p{d, {}, {}, {}};
  for (const auto& c : pa.centers)
    if (in_a(c)) p.centers.push_back(c);
  const double eps = touch_tolerance(d);
  detail::SpatialGrid grid(p.centers, d.diameter() * 1.01);
  const std::size_t kept_a = p.centers.size();
  std::vector<Vec2> added;
  for (const auto& c : pb.centers) {
    if (in_a(c)) continue;
    bool clash = false;
    grid.for_each_near(c, [&](std::size_t j) {
      if (!clash && d.gauge(c - p.centers[j]) < 2.0 - eps) clash = true;
    });
    if (clash) continue;
    added.push_back(c);
  }
  // Type-b points never clash with each other; only the a strips are checked.
  p.centers.insert(p.centers.end(), added.begin(), added.end());
  p.generator.radius = std::min(pa.generator.radius, pb.generator.radius);
  if (kept_a == 0 || added.empty()) p.warnings.push_back("one strip type is empty");
  return p;
}

}  // namespace

std::string_view to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::Six:
      return "six";
    case GeneratorKind::Four:
      return "four";
    case GeneratorKind::Honeycomb:
      return "honeycomb";
    case GeneratorKind::Mixed:
      return "mixed";
    case GeneratorKind::Random:
      return "random";
    case GeneratorKind::Custom:
      return "custom";
  }
  return "custom";
}

GeneratorKind parse_generator(std::string_view name) {
  for (auto k : {GeneratorKind::Six, GeneratorKind::Four, GeneratorKind::Honeycomb, GeneratorKind::Mixed,
                 GeneratorKind::Random, GeneratorKind::Custom})
    if (to_string(k) == name) return k;
  throw InvalidInput("unknown generator '" + std::string(name) + "'");
}

double generator_lambda(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::Six:
      return 6.0;
    case GeneratorKind::Four:
      return 4.0;
    case GeneratorKind::Honeycomb:
      return 3.0;
    default:
      throw InvalidInput("neighbour count is defined for six, four and honeycomb only");
  }
}

double touch_tolerance(const ConvexDisc& d) { return 1e-7 * d.diameter(); }

double inradius(const ConvexDisc& d) {
  double r = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Vec2 a = d.vertex(i);
    const Vec2 b = d.vertex(i + 1);
    r = std::min(r, cross(a, b) / norm(b - a));
  }
  return r;
}

double generation_radius(const ConvexDisc& d, int extent) {
  check_extent(extent);
  return extent * 2.0 * inradius(d);
}

Packing lattice_packing(const ConvexDisc& d, Vec2 b1, Vec2 b2, const std::vector<Vec2>& motif, int extent) {
  const double det = cross(b1, b2);
  if (std::abs(det) < 1e-12 * norm(b1) * norm(b2)) throw InvariantViolation("degenerate lattice basis");
  const double radius = generation_radius(d, extent);
  double reach = radius;
  for (const auto& m : motif) reach = std::max(reach, radius + norm(m));
  const int ki = static_cast<int>(std::ceil(reach * norm(b2) / std::abs(det))) + 1;
  const int kj = static_cast<int>(std::ceil(reach * norm(b1) / std::abs(det))) + 1;
  Packing p{d, {}, {}, {}};
  for (int i = -ki; i <= ki; ++i) {
    for (int j = -kj; j <= kj; ++j) {
      for (const auto& m : motif) {
        const Vec2 c = b1 * i + b2 * j + m;
        if (norm(c) <= radius) p.centers.push_back(c);
      }
    }
  }
  p.generator.basis = {b1, b2};
  p.generator.motif = motif;
  p.generator.extent = extent;
  p.generator.radius = radius;
  return p;
}

Packing six_neighbour_lattice(const ConvexDisc& d, int extent) {
  check_extent(extent);
  const auto r = max_unit_triangle(d);
  if (!(r.area > 0)) throw InvariantViolation("six_neighbour_lattice: degenerate triangle");
  std::vector<LatticeCandidate> cs;
  for (const auto& t : r.maximizers) cs.push_back({t.s1 * 2.0, t.s2 * 2.0, {Vec2{}}});
  return from_candidate(d, pick(d, cs, "six_neighbour_lattice"), GeneratorKind::Six, extent);
}

Packing four_neighbour_lattice(const ConvexDisc& d, int extent) {
  check_extent(extent);
  const auto r = max_unit_parallelogram(d);
  if (!(r.area > 0)) throw InvariantViolation("four_neighbour_lattice: degenerate parallelogram");
  std::vector<LatticeCandidate> cs;
  for (const auto& pq : r.maximizers) cs.push_back({pq[0] * 2.0, pq[1] * 2.0, {Vec2{}}});
  return from_candidate(d, pick(d, cs, "four_neighbour_lattice"), GeneratorKind::Four, extent);
}

Packing three_neighbour_honeycomb(const ConvexDisc& d, int extent) {
  check_extent(extent);
  const auto r = max_unit_centro_hexagon(d);
  if (!(r.area > 0)) throw InvariantViolation("three_neighbour_honeycomb: degenerate hexagon");
  std::vector<LatticeCandidate> cs;
  for (const auto& u : r.maximizers) {
    const Vec2 f1 = u[0] * 2.0;
    const Vec2 f2 = u[1] * -2.0;
    const Vec2 f3 = u[2] * 2.0;
    cs.push_back({f2 - f1, f3 - f1, {f1 * -0.5, f1 * 0.5}});
  }
  return from_candidate(d, pick(d, cs, "three_neighbour_honeycomb"), GeneratorKind::Honeycomb, extent);
}

Packing make_generator(const ConvexDisc& d, GeneratorKind k, int extent) {
  switch (k) {
    case GeneratorKind::Six:
      return six_neighbour_lattice(d, extent);
    case GeneratorKind::Four:
      return four_neighbour_lattice(d, extent);
    case GeneratorKind::Honeycomb:
      return three_neighbour_honeycomb(d, extent);
    default:
      throw InvalidInput("make_generator: expected six, four or honeycomb");
  }
}

double strip_fraction_for_lambda(GeneratorKind a, GeneratorKind b, double lambda) {
  const double la = generator_lambda(a);
  const double lb = generator_lambda(b);
  if (la == lb) throw InvalidInput("strip constituents must differ");
  const double f = (lambda - lb) / (la - lb);
  if (!(f >= -1e-12 && f <= 1.0 + 1e-12)) throw RangeError("lambda outside the range spanned by the constituents");
  return std::clamp(f, 0.0, 1.0);
}

Packing mixed_strip_packing(const ConvexDisc& d, GeneratorKind a, GeneratorKind b, double fraction_a, int strip_width,
                            int extent) {
  check_extent(extent);
  row_type(a, 0.75);
  row_type(b, 0.75);
  if (a == b) throw InvalidInput("mixed_strip_packing: constituents must differ");
  if (!(fraction_a >= 0.0 && fraction_a <= 1.0)) throw RangeError("mixed_strip_packing: fraction must lie in [0, 1]");
  if (strip_width < 2) throw RangeError("mixed_strip_packing: strip width must be at least 2");
  const double d0p = theorem_hexagon_parameter(d);
  Packing p = d0p > 0 ? theorem_rows(d, d0p, a, b,
                                     rows_of_a(row_type(a, 2.0 * d0p - 1.0), row_type(b, 2.0 * d0p - 1.0), fraction_a,
                                               strip_width),
                                     strip_width, extent)
                      : clipped_strips(d, a, b, fraction_a, strip_width, extent);
  if (d0p <= 0) p.warnings.insert(p.warnings.begin(), "disc is not a theorem hexagon; strips are clipped lattices");
  p.generator.kind = GeneratorKind::Mixed;
  p.generator.part_a = a;
  p.generator.part_b = b;
  p.generator.fraction = fraction_a;
  p.generator.strip_width = strip_width;
  p.generator.extent = extent;
  return p;
}

double strip_lambda(double d0p, GeneratorKind a, GeneratorKind b, double fraction_a, int strip_width) {
  if (!(d0p >= 0.75 && d0p <= 1.0)) throw RangeError("strip_lambda: d0p must lie in [3/4, 1]");
  if (strip_width < 2) throw RangeError("strip_lambda: strip width must be at least 2");
  const double w = 2.0 * d0p - 1.0;
  const int na = rows_of_a(row_type(a, w), row_type(b, w), fraction_a, strip_width);
  return periodic_lambda(strip_pattern(a, b, na, strip_width, w), na, w);
}

double strip_density(double d0p, GeneratorKind a, GeneratorKind b, double fraction_a, int strip_width) {
  if (!(d0p >= 0.75 && d0p <= 1.0)) throw RangeError("strip_density: d0p must lie in [3/4, 1]");
  if (strip_width < 2) throw RangeError("strip_density: strip width must be at least 2");
  const double w = 2.0 * d0p - 1.0;
  const int na = rows_of_a(row_type(a, w), row_type(b, w), fraction_a, strip_width);
  return periodic_density(strip_pattern(a, b, na, strip_width, w), w);
}

Packing equality_packing(double d0p, double lambda, int strip_width, int extent) {
  if (!(lambda >= 3.0 && lambda <= 6.0)) throw RangeError("equality_packing: lambda must lie in [3, 6]");
  const auto d = make_theorem_hexagon(d0p);
  const bool high = d0p >= 7.0 / 8.0;
  if (lambda == 6.0) return six_neighbour_lattice(d, extent);
  if (lambda == 3.0) return three_neighbour_honeycomb(d, extent);
  if (lambda == 4.0 && high) return four_neighbour_lattice(d, extent);
  GeneratorKind a = GeneratorKind::Six;
  GeneratorKind b = GeneratorKind::Honeycomb;
  if (high) {
    a = lambda >= 4.0 ? GeneratorKind::Six : GeneratorKind::Four;
    b = lambda >= 4.0 ? GeneratorKind::Four : GeneratorKind::Honeycomb;
  }
  // The row split is chosen so the arrangement, separators included, has
  // neighbour count lambda: for each period of strip_width .. 2 strip_width
  // rows the best split by bisection (lambda grows with the a rows), keeping
  // the closest; ties to the shortest period.
  const double w = 2.0 * d0p - 1.0;
  const RowType ta = row_type(a, w);
  const RowType tb = row_type(b, w);
  const int lo = std::max(strip_width, 2);
  int best_width = lo;
  int best_na = 1;
  double best_err = std::numeric_limits<double>::infinity();
  for (int width = lo; width <= 2 * lo && best_err > 1e-9; ++width) {
    auto lam = [&](int na) { return periodic_lambda(strip_pattern(a, b, na, width, w), na, w); };
    int l = 1;
    int h = width - 1;
    while (h - l > 1) {
      const int m = (l + h) / 2;
      (lam(m) < lambda ? l : h) = m;
    }
    for (int na : {l, h}) {
      const double err = std::abs(lam(na) - lambda);
      if (err < best_err - 1e-9) {
        best_err = err;
        best_width = width;
        best_na = na;
      }
    }
  }
  return mixed_strip_packing(d, a, b, fraction_of_rows(ta, tb, best_na, best_width), best_width, extent);
}

Packing generate(const ConvexDisc& d, const GeneratorInfo& g) {
  switch (g.kind) {
    case GeneratorKind::Six:
    case GeneratorKind::Four:
    case GeneratorKind::Honeycomb:
      return make_generator(d, g.kind, g.extent);
    case GeneratorKind::Mixed:
      return mixed_strip_packing(d, g.part_a, g.part_b, g.fraction, g.strip_width, g.extent);
    case GeneratorKind::Random: {
      const double d0p = theorem_hexagon_parameter(d);
      if (!(d0p > 0)) throw InvalidInput("generate: random rows need a theorem hexagon");
      return random_five_neighbour_packing(d0p, g.extent, g.seed);
    }
    default:
      throw InvalidInput("generate: custom packings carry no generator parameters");
  }
}

Packing random_five_neighbour_packing(double d0p, int extent, std::uint64_t seed) {
  if (!(d0p >= 0.775 && d0p < 1.0)) throw RangeError("random_five_neighbour_packing: d0p must lie in [0.775, 1)");
  check_extent(extent);
  const double w = 2.0 * d0p - 1.0;
  const auto d = make_theorem_hexagon(d0p);
  std::mt19937_64 rng(seed);
  // A gap between chain rows gives every translate two contacts on each side
  // when (offset - 2w) mod 2 lies in [4 - 4w, 2]; other offsets give one.
  std::uniform_real_distribution<double> good(4.0 - 4.0 * w, 2.0);
  std::uniform_real_distribution<double> any(0.0, 2.0);
  const double radius = generation_radius(d, extent);
  const int rows = static_cast<int>(std::floor(radius / 2.0));
  Packing p{d, {}, {}, {}};
  double off = 0.0;
  for (int k = -rows; k <= rows; ++k) {
    // Every other gap is good, so each translate has at least 2 + 2 + 1 neighbours.
    if (k > -rows) off = wrap(off + ((k % 2 == 0) ? good(rng) + 2.0 * w : any(rng)), 2.0);
    const double y = 2.0 * k;
    for (double x = off - 2.0 * std::ceil(radius / 2.0 + 1.0); x <= radius; x += 2.0)
      if (norm(Vec2{x, y}) <= radius) p.centers.push_back({x, y});
  }
  p.generator.kind = GeneratorKind::Random;
  p.generator.extent = extent;
  p.generator.seed = seed;
  p.generator.radius = radius;
  return p;
}

Packing transformed(const Packing& p, double a, double b, double c, double d) {
  Packing q{p.disc.transformed(a, b, c, d), {}, p.generator, p.warnings};
  q.centers.reserve(p.centers.size());
  for (const auto& v : p.centers) q.centers.push_back({a * v.x + b * v.y, c * v.x + d * v.y});
  for (auto& v : q.generator.basis) v = {a * v.x + b * v.y, c * v.x + d * v.y};
  for (auto& v : q.generator.motif) v = {a * v.x + b * v.y, c * v.x + d * v.y};
  // The image of the generation disc contains a disc of radius radius * smallest singular value.
  const double s1 = std::hypot(a + d, c - b);
  const double s2 = std::hypot(a - d, c + b);
  q.generator.radius = p.generator.radius * 0.5 * std::abs(s1 - s2);
  return q;
}

std::vector<Violation> validate_packing(const Packing& p) {
  const double eps = touch_tolerance(p.disc);
  detail::SpatialGrid grid(p.centers, p.disc.diameter() * 1.01);
  std::vector<Violation> out;
  for (std::size_t i = 0; i < p.centers.size(); ++i) {
    grid.for_each_near(p.centers[i], [&](std::size_t j) {
      if (j <= i) return;
      const double g = p.disc.gauge(p.centers[j] - p.centers[i]);
      if (g < 2.0 - eps) out.push_back({i, j, g});
    });
  }
  std::sort(out.begin(), out.end(), [](const Violation& x, const Violation& y) {
    return std::pair{x.i, x.j} < std::pair{y.i, y.j};
  });
  return out;
}

NeighbourGraph neighbour_graph(const Packing& p) {
  const double eps = touch_tolerance(p.disc);
  detail::SpatialGrid grid(p.centers, p.disc.diameter() * 1.01);
  NeighbourGraph g;
  g.adjacency.resize(p.centers.size());
  for (std::size_t i = 0; i < p.centers.size(); ++i) {
    grid.for_each_near(p.centers[i], [&](std::size_t j) {
      if (j <= i) return;
      const double gv = p.disc.gauge(p.centers[j] - p.centers[i]);
      if (gv < 2.0 - eps)
        throw InvariantViolation("neighbour_graph: translates " + std::to_string(i) + " and " + std::to_string(j) +
                                 " overlap");
      if (gv <= 2.0 + eps) g.edges.push_back({i, j});
    });
  }
  std::sort(g.edges.begin(), g.edges.end());
  for (const auto& e : g.edges) {
    g.adjacency[e[0]].push_back(e[1]);
    g.adjacency[e[1]].push_back(e[0]);
  }
  return g;
}

}  // namespace minkpack
