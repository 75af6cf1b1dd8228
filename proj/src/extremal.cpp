#include "minkpack/extremal.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

namespace minkpack {

namespace {

constexpr double kTieRel = 1e-10;

// Solutions of  alpha*E_i - beta*E_j - gamma*E_k = R  with all three
// coefficients in [0,1] form a segment x0 + tau*dir, tau in [lo, hi].
struct Segment {
  std::array<double, 3> x0{};
  std::array<double, 3> dir{};
  double lo = 0.0;
  double hi = 0.0;
};

bool solve_segment(Vec2 c1, Vec2 c2, Vec2 c3, Vec2 rhs, double scale, Segment& seg) {
  const std::array<Vec2, 3> c{c1, c2, c3};
  const std::array<double, 3> null{cross(c2, c3), cross(c3, c1), cross(c1, c2)};
  std::size_t piv = 0;
  for (std::size_t t = 1; t < 3; ++t)
    if (std::abs(null[t]) > std::abs(null[piv])) piv = t;
  const double det = null[piv];
  if (std::abs(det) <= 1e-13 * scale * scale) return false;  // all three edges parallel
  // Pivot column piv is set to zero; solve the remaining 2x2 system.
  const std::size_t a = (piv + 1) % 3;
  const std::size_t b = (piv + 2) % 3;
  seg.x0 = {0.0, 0.0, 0.0};
  seg.x0[a] = cross(rhs, c[b]) / det;
  seg.x0[b] = cross(c[a], rhs) / det;
  seg.dir = null;
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  constexpr double eps = 1e-12;
  for (std::size_t t = 0; t < 3; ++t) {
    if (std::abs(seg.dir[t]) <= 1e-15 * scale * scale) {
      if (seg.x0[t] < -eps || seg.x0[t] > 1 + eps) return false;
      continue;
    }
    double t0 = (0.0 - seg.x0[t]) / seg.dir[t];
    double t1 = (1.0 - seg.x0[t]) / seg.dir[t];
    if (t0 > t1) std::swap(t0, t1);
    lo = std::max(lo, t0);
    hi = std::min(hi, t1);
  }
  if (lo > hi) return false;
  seg.lo = lo;
  seg.hi = hi;
  return true;
}

void push_unique(std::vector<UnitTriangle>& v, const UnitTriangle& t) {
  for (const auto& o : v) {
    if (norm(o.s1 - t.s1) < 1e-9 && norm(o.s2 - t.s2) < 1e-9) return;
  }
  v.push_back(t);
}

}  // namespace

TriangleResult max_unit_triangle(const ConvexDisc& d) {
  // Triangle 0, a, b with a, b and a - b on the boundary. On fixed edges the
  // constraint set is a segment and cross(a, b) is quadratic along it.
  const std::size_t n = d.size();
  const double scale = d.diameter();
  struct Cand {
    double value;
    Vec2 a, b;
  };
  std::vector<Cand> cands;
  double best = 0.0;
  auto consider = [&](double value, Vec2 a, Vec2 b) {
    if (value < best * (1.0 - kTieRel)) return;
    best = std::max(best, value);
    cands.push_back({value, a, b});
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 vi = d.vertex(i);
    const Vec2 ei = d.vertex(i + 1) - vi;
    for (std::size_t j = 0; j < n; ++j) {
      const Vec2 vj = d.vertex(j);
      const Vec2 ej = d.vertex(j + 1) - vj;
      for (std::size_t k = 0; k < n; ++k) {
        const Vec2 vk = d.vertex(k);
        const Vec2 ek = d.vertex(k + 1) - vk;
        Segment seg;
        if (!solve_segment(ei, -ej, -ek, vk + vj - vi, scale, seg)) continue;
        const Vec2 a0 = vi + ei * seg.x0[0];
        const Vec2 a1 = ei * seg.dir[0];
        const Vec2 b0 = vj + ej * seg.x0[1];
        const Vec2 b1 = ej * seg.dir[1];
        const double q0 = cross(a0, b0);
        const double q1 = cross(a0, b1) + cross(a1, b0);
        const double q2 = cross(a1, b1);
        auto eval = [&](double tau) {
          const Vec2 a = a0 + a1 * tau;
          const Vec2 b = b0 + b1 * tau;
          const double c = cross(a, b);
          if (c >= 0)
            consider(0.5 * c, a, b);
          else
            consider(-0.5 * c, b, a);
        };
        eval(seg.lo);
        eval(seg.hi);
        if (std::abs(q2) > 0) {
          const double ts = -q1 / (2.0 * q2);
          if (ts > seg.lo && ts < seg.hi) eval(ts);
        }
        // A flat optimal family: keep its midpoint too.
        const double span = seg.hi - seg.lo;
        const double drift = std::abs(q1) * span + std::abs(q2) * span * (std::abs(seg.lo) + std::abs(seg.hi));
        if (span > 0 && drift <= 1e-12 * std::max(1.0, std::abs(q0))) eval(0.5 * (seg.lo + seg.hi));
      }
    }
  }
  TriangleResult r;
  r.area = best;
  for (const auto& c : cands) {
    if (c.value >= best * (1.0 - kTieRel)) push_unique(r.maximizers, UnitTriangle{c.a, c.b - c.a, -c.b});
  }
  return r;
}

double max_triangle_area(const ConvexDisc& d) { return max_unit_triangle(d).area; }

namespace {

// Midpoints of edges incident to vertex index `i` along which a linear
// functional with gradient direction `g` (value cross(., g)) is flat.
std::vector<Vec2> flat_moves(const ConvexDisc& d, std::size_t i, Vec2 g) {
  std::vector<Vec2> out;
  const std::size_t n = d.size();
  const Vec2 v = d.vertex(i);
  for (std::size_t e : {i, (i + n - 1) % n}) {
    const Vec2 a = d.vertex(e);
    const Vec2 b = d.vertex(e + 1);
    if (std::abs(cross(b - a, g)) <= 1e-10 * norm(g) * norm(b - a)) {
      const Vec2 m = (a + b) * 0.5;
      if (norm(m - v) > 0) out.push_back(m);
    }
  }
  return out;
}

}  // namespace

ParallelogramResult max_unit_parallelogram(const ConvexDisc& d) {
  const std::size_t n = d.size();
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) best = std::max(best, cross(d.vertex(i), d.vertex(j)));
  ParallelogramResult r;
  r.area = best;  // sides p, q, -p, -q enclose |p x q|
  auto add = [&](Vec2 p, Vec2 q) {
    for (const auto& m : r.maximizers)
      if (norm(m[0] - p) < 1e-9 && norm(m[1] - q) < 1e-9) return;
    r.maximizers.push_back({p, q});
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vec2 p = d.vertex(i);
      const Vec2 q = d.vertex(j);
      if (cross(p, q) < best * (1.0 - kTieRel)) continue;
      add(p, q);
      // d/dp cross(p, q) along edge E is cross(E, q).
      const auto pm = flat_moves(d, i, q);
      const auto qm = flat_moves(d, j, -p);
      for (const auto& p2 : pm) add(p2, q);
      for (const auto& q2 : qm) add(p, q2);
      for (const auto& p2 : pm)
        for (const auto& q2 : qm)
          if (cross(p2, q2) >= best * (1.0 - kTieRel)) add(p2, q2);
    }
  }
  return r;
}

HexagonResult max_unit_centro_hexagon(const ConvexDisc& d) {
  // Area of the hexagon with sides u1,u2,u3,-u1,-u2,-u3 is
  // cross(u1,u2) + cross(u1,u3) + cross(u2,u3), linear in each u on an edge,
  // so some maximizer has every u at a vertex.
  const std::size_t n = d.size();
  auto area = [](Vec2 a, Vec2 b, Vec2 c) { return cross(a, b) + cross(a, c) + cross(b, c); };
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) best = std::max(best, area(d.vertex(i), d.vertex(j), d.vertex(k)));
  HexagonResult r;
  r.area = best;
  auto add = [&](Vec2 a, Vec2 b, Vec2 c) {
    if (area(a, b, c) < best * (1.0 - kTieRel)) return;
    for (const auto& m : r.maximizers)
      if (norm(m[0] - a) < 1e-9 && norm(m[1] - b) < 1e-9 && norm(m[2] - c) < 1e-9) return;
    r.maximizers.push_back({a, b, c});
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Vec2 a = d.vertex(i);
        const Vec2 b = d.vertex(j);
        const Vec2 c = d.vertex(k);
        if (area(a, b, c) < best * (1.0 - kTieRel)) continue;
        std::vector<Vec2> as{a}, bs{b}, cs{c};
        for (const auto& m : flat_moves(d, i, b + c)) as.push_back(m);
        for (const auto& m : flat_moves(d, j, c - a)) bs.push_back(m);
        for (const auto& m : flat_moves(d, k, -(a + b))) cs.push_back(m);
        for (const auto& x : as)
          for (const auto& y : bs)
            for (const auto& z : cs) add(x, y, z);
      }
    }
  }
  return r;
}

namespace {

// Boundary point u with gauge(w - u) = 1, searched by bisection over the
// angle measured from the direction of w (side = +1 or -1).
bool close_with_two_sides(const ConvexDisc& d, Vec2 w, double side, Vec2& u) {
  const double gw = d.gauge(w);
  if (gw > 2.0) return false;
  const double base = gw > 1e-14 ? angle_of(w) : 0.0;
  auto f = [&](double phi) {
    const double t = base + side * phi;
    const Vec2 p = d.radial_point({std::cos(t), std::sin(t)});
    return std::pair{d.gauge(w - p) - 1.0, p};
  };
  double lo = 0.0;
  double hi = std::numbers::pi;
  for (int it = 0; it < 64; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid).first <= 0)
      lo = mid;
    else
      hi = mid;
  }
  u = f(0.5 * (lo + hi)).second;
  return true;
}

double pentagon_value(const ConvexDisc& d, const std::array<double, 3>& t) {
  std::vector<Vec2> s;
  Vec2 sum{};
  for (double ti : t) {
    double f = ti - std::floor(ti);
    if (f >= 1.0) f = 0.0;
    s.push_back(d.boundary_point(f));
    sum += s.back();
  }
  const Vec2 w = -sum;
  const double gw = d.gauge(w);
  if (gw > 2.0) return -(gw - 2.0);  // infeasible: penalty pulls back toward closure
  Vec2 u;
  close_with_two_sides(d, w, 1.0, u);
  s.push_back(u);
  s.push_back(w - u);
  return signed_area(angle_sorted_polygon(s));
}

}  // namespace

namespace {

// Linear map taking the vertex second-moment matrix to the identity, so the
// search runs on a well-proportioned affine image of the disc.
std::array<double, 4> isotropic_map(const ConvexDisc& d) {
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& v : d.vertices()) {
    sxx += v.x * v.x;
    sxy += v.x * v.y;
    syy += v.y * v.y;
  }
  const double n = static_cast<double>(d.size());
  sxx /= n;
  sxy /= n;
  syy /= n;
  const double tr = sxx + syy;
  const double disc = std::sqrt(std::max(0.0, 0.25 * (sxx - syy) * (sxx - syy) + sxy * sxy));
  const double l1 = 0.5 * tr + disc;
  const double l2 = 0.5 * tr - disc;
  Vec2 e1 = std::abs(sxy) > 1e-300 ? Vec2{l1 - syy, sxy} : (sxx >= syy ? Vec2{1, 0} : Vec2{0, 1});
  e1 = e1 / norm(e1);
  const Vec2 e2{-e1.y, e1.x};
  const double a = 1.0 / std::sqrt(l1);
  const double b = 1.0 / std::sqrt(l2);
  // T = a e1 e1^T + b e2 e2^T
  return {a * e1.x * e1.x + b * e2.x * e2.x, a * e1.x * e1.y + b * e2.x * e2.y,
          a * e1.x * e1.y + b * e2.x * e2.y, a * e1.y * e1.y + b * e2.y * e2.y};
}

constexpr int kMaxMovesPerStart = 4000;

}  // namespace

double max_pentagon_area(const ConvexDisc& disc, const PentagonSearchOptions& opt) {
  const auto t = isotropic_map(disc);
  const ConvexDisc d = disc.transformed(t[0], t[1], t[2], t[3]);
  const double jac = std::abs(t[0] * t[3] - t[1] * t[2]);
  double best = 0.0;
  std::vector<std::array<double, 3>> dirs;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c)
        if (a || b || c) dirs.push_back({double(a), double(b), double(c)});
  for (int s = 0; s < opt.starts; ++s) {
    const double t0 = (s + 0.5) / opt.starts;
    std::array<double, 3> x{t0, t0 + 0.2, t0 + 0.4};
    double val = pentagon_value(d, x);
    double step = 1.0 / 32.0;
    int moves = 0;
    while (step > opt.min_step && moves < kMaxMovesPerStart) {
      bool improved = false;
      for (const auto& dir : dirs) {
        const std::array<double, 3> cand{x[0] + step * dir[0], x[1] + step * dir[1], x[2] + step * dir[2]};
        const double v = pentagon_value(d, cand);
        if (v > val) {
          val = v;
          x = cand;
          improved = true;
          ++moves;
        }
      }
      if (!improved) step *= 0.5;
    }
    best = std::max(best, val);
  }
  return best / jac;
}

double max_kgon_area(const ConvexDisc& d, int k) {
  switch (k) {
    case 3:
      return max_triangle_area(d);
    case 4:
      return max_unit_parallelogram(d).area;
    case 5:
      return max_pentagon_area(d);
    case 6:
      return max_unit_centro_hexagon(d).area;
    default:
      throw RangeError("max_kgon_area: k must be in 3..6");
  }
}

ExtremalProfile profile(const ConvexDisc& d) {
  ExtremalProfile p;
  p.area = d.area();
  p.delta = max_triangle_area(d);
  p.f3 = p.delta;
  p.f4 = max_kgon_area(d, 4);
  p.f5 = max_kgon_area(d, 5);
  p.f6 = max_kgon_area(d, 6);
  p.d0p = p.area / (8.0 * p.delta);
  return p;
}

ConvexDisc make_theorem_hexagon(double d0p) {
  if (!(d0p >= 0.75 && d0p <= 1.0)) throw RangeError("make_theorem_hexagon: d0p must lie in [3/4, 1]");
  const double w = 2.0 * d0p - 1.0;
  const std::vector<Vec2> v{{1, 0}, {w, 1}, {-w, 1}, {-1, 0}, {-w, -1}, {w, -1}};
  return ConvexDisc(v);
}

double theorem_hexagon_parameter(const ConvexDisc& d, double tol) {
  // The canonical member has a top edge at y = 1 from (-w, 1) to (w, 1) and
  // the points (+-1, 0) on the boundary.
  if (std::abs(d.gauge({1, 0}) - 1.0) > tol) return -1.0;
  double w = -1.0;
  for (const auto& v : d.vertices())
    if (std::abs(v.y - 1.0) <= tol) w = std::max(w, v.x);
  if (w < 0.5 - tol || w > 1.0 + tol) return -1.0;
  w = std::clamp(w, 0.5, 1.0);
  const double d0p = (w + 1.0) / 2.0;
  const auto ref = make_theorem_hexagon(d0p);
  if (ref.size() != d.size()) return -1.0;
  for (const auto& v : d.vertices())
    if (std::abs(ref.gauge(v) - 1.0) > tol) return -1.0;
  return d0p;
}

}  // namespace minkpack
