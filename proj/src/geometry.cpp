#include "minkpack/geometry.hpp"

#include <algorithm>
#include <numbers>
#include <sstream>

namespace minkpack {

namespace {

double scale_of(std::span<const Vec2> pts) {
  double s = 0.0;
  for (const auto& p : pts) s = std::max({s, std::abs(p.x), std::abs(p.y)});
  return s > 0.0 ? s : 1.0;
}

std::vector<Vec2> drop_duplicates(std::span<const Vec2> pts, double eps) {
  std::vector<Vec2> out;
  for (const auto& p : pts) {
    if (out.empty() || norm(p - out.back()) > eps) out.push_back(p);
  }
  while (out.size() > 1 && norm(out.front() - out.back()) <= eps) out.pop_back();
  return out;
}

bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  auto orient = [](Vec2 p, Vec2 q, Vec2 r) { return cross(q - p, r - p); };
  auto on_segment = [](Vec2 p, Vec2 q, Vec2 r) {
    return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
           r.y <= std::max(p.y, q.y);
  };
  const double d1 = orient(c, d, a);
  const double d2 = orient(c, d, b);
  const double d3 = orient(a, b, c);
  const double d4 = orient(a, b, d);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
    return true;
  }
  if (d1 == 0 && on_segment(c, d, a)) return true;
  if (d2 == 0 && on_segment(c, d, b)) return true;
  if (d3 == 0 && on_segment(a, b, c)) return true;
  if (d4 == 0 && on_segment(a, b, d)) return true;
  return false;
}

}  // namespace

double signed_area(std::span<const Vec2> pts) {
  double s = 0.0;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) s += cross(pts[i], pts[(i + 1) % n]);
  return 0.5 * s;
}

double polygon_area(const Polygon& p) {
  if (p.size() < 3) throw InvalidInput("polygon_area: need at least 3 vertices");
  return std::abs(signed_area(p.vertices));
}

bool is_convex(std::span<const Vec2> raw, double rel_tol) {
  const double sc = scale_of(raw);
  const auto pts = drop_duplicates(raw, rel_tol * sc);
  const std::size_t n = pts.size();
  if (n < 3) return false;
  const double eps = rel_tol * sc * sc;
  int sign = 0;
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e0 = pts[(i + 1) % n] - pts[i];
    const Vec2 e1 = pts[(i + 2) % n] - pts[(i + 1) % n];
    const double c = cross(e0, e1);
    turning += std::atan2(c, dot(e0, e1));
    if (std::abs(c) <= eps) continue;
    const int s = c > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    if (s != sign) return false;
  }
  // One full turn: rules out star-shaped multi-winding vertex sequences.
  return sign != 0 && std::abs(std::abs(turning) - 2.0 * std::numbers::pi) < 1e-6;
}

std::vector<Vec2> normalize_convex(std::span<const Vec2> raw, double rel_tol) {
  const double sc = scale_of(raw);
  auto pts = drop_duplicates(raw, rel_tol * sc);
  if (pts.size() >= 3 && signed_area(pts) < 0) {
    std::reverse(pts.begin() + 1, pts.end());
  }
  const double eps = rel_tol * sc * sc;
  bool changed = true;
  while (changed && pts.size() >= 3) {
    changed = false;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2 prev = pts[(i + n - 1) % n];
      const Vec2 next = pts[(i + 1) % n];
      if (std::abs(cross(pts[i] - prev, next - pts[i])) <= eps && dot(pts[i] - prev, next - pts[i]) >= 0) {
        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return pts;
}

std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Vec2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

bool is_simple(std::span<const Vec2> pts) {
  const std::size_t n = pts.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_intersect(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n])) return false;
    }
  }
  return true;
}

DiscDiagnostics validate_disc(const Polygon& p) {
  DiscDiagnostics diag;
  const auto pts = normalize_convex(p.vertices);
  diag.vertex_count = pts.size();
  diag.convex = is_convex(p.vertices);
  if (!diag.convex) diag.messages.emplace_back("vertex sequence is not convex");
  diag.positive_area = pts.size() >= 3 && signed_area(pts) > 0;
  if (!diag.positive_area) diag.messages.emplace_back("disc has no interior");
  diag.even_vertex_count = pts.size() % 2 == 0 && pts.size() >= 4;
  if (!diag.even_vertex_count) {
    diag.messages.emplace_back("odd vertex count " + std::to_string(pts.size()) + " cannot be centrally symmetric");
  }
  double diameter = 0.0;
  for (const auto& a : pts)
    for (const auto& b : pts) diameter = std::max(diameter, norm(a - b));
  if (diag.even_vertex_count) {
    const std::size_t m = pts.size() / 2;
    for (std::size_t i = 0; i < m; ++i) {
      diag.symmetry_defect = std::max(diag.symmetry_defect, norm(pts[i] + pts[i + m]));
    }
    diag.symmetric = diag.symmetry_defect <= 1e-9 * std::max(diameter, 1e-300);
    if (!diag.symmetric) {
      std::ostringstream os;
      os << "not centrally symmetric about the origin (defect " << diag.symmetry_defect << ")";
      diag.messages.push_back(os.str());
    }
  }
  diag.parallelogram = pts.size() == 4;
  return diag;
}

ConvexDisc::ConvexDisc(std::span<const Vec2> raw) {
  const auto diag = validate_disc(Polygon{{raw.begin(), raw.end()}});
  if (!diag.valid()) {
    std::string msg = "invalid disc:";
    for (const auto& m : diag.messages) msg += " " + m + ";";
    throw InvalidInput(msg);
  }
  auto pts = normalize_convex(raw);
  const std::size_t n = pts.size();
  const std::size_t m = n / 2;
  for (std::size_t i = 0; i < m; ++i) {
    const Vec2 v = (pts[i] - pts[i + m]) * 0.5;
    pts[i] = v;
    pts[i + m] = -v;
  }
  vertices_ = std::move(pts);
  support_.resize(n);
  cum_len_.assign(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = vertices_[i];
    const Vec2 b = vertices_[(i + 1) % n];
    support_[i] = cross(a, b);
    cum_len_[i + 1] = cum_len_[i] + norm(b - a);
    diameter_ = std::max(diameter_, 2.0 * norm(a));
  }
  perimeter_ = cum_len_[n];
  area_ = signed_area(vertices_);
}

ConvexDisc ConvexDisc::regular(int n, double circumradius, double phase) {
  if (n < 4 || n % 2 != 0) throw InvalidInput("regular disc needs an even vertex count >= 4");
  std::vector<Vec2> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double t = phase + 2.0 * std::numbers::pi * k / n;
    v.push_back({circumradius * std::cos(t), circumradius * std::sin(t)});
  }
  return ConvexDisc(v);
}

ConvexDisc ConvexDisc::square(double h) {
  const std::vector<Vec2> v{{h, -h}, {h, h}, {-h, h}, {-h, -h}};
  return ConvexDisc(v);
}

double ConvexDisc::gauge(Vec2 v) const {
  double g = 0.0;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e = vertices_[(i + 1) % n] - vertices_[i];
    g = std::max(g, cross(v, e) / support_[i]);
  }
  return g;
}

Vec2 ConvexDisc::boundary_point(double t) const {
  if (!(t >= 0.0 && t < 1.0)) throw RangeError("boundary_point: t must lie in [0,1)");
  const double s = t * perimeter_;
  const auto it = std::upper_bound(cum_len_.begin(), cum_len_.end(), s);
  const std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(it - cum_len_.begin()) - 1, size() - 1);
  const double len = cum_len_[i + 1] - cum_len_[i];
  const double f = len > 0 ? (s - cum_len_[i]) / len : 0.0;
  return vertex(i) + (vertex(i + 1) - vertex(i)) * f;
}

ConvexDisc ConvexDisc::transformed(double a, double b, double c, double d) const {
  std::vector<Vec2> v;
  v.reserve(size());
  for (const auto& p : vertices_) v.push_back({a * p.x + b * p.y, c * p.x + d * p.y});
  return ConvexDisc(v);
}

double gauge_norm(const ConvexDisc& d, Vec2 v) { return d.gauge(v); }

Vec2 boundary_point(const ConvexDisc& d, double t) { return d.boundary_point(t); }

namespace {

// Convex hull of a convex input, counterclockwise starting at the lowest
// (then leftmost) vertex. Points and segments yield 1 or 2 vertices.
std::vector<Vec2> prepared(const Polygon& p) {
  if (p.vertices.empty()) throw InvalidInput("minkowski_sum: empty polygon");
  if (p.size() >= 3 && std::abs(signed_area(p.vertices)) > 0 &&
      !is_convex(p.vertices) && normalize_convex(p.vertices).size() >= 3) {
    throw InvalidInput("minkowski_sum: nonconvex input");
  }
  auto h = convex_hull(p.vertices);
  const auto start = std::min_element(h.begin(), h.end(), [](Vec2 a, Vec2 b) {
    return a.y < b.y || (a.y == b.y && a.x < b.x);
  });
  std::rotate(h.begin(), start, h.end());
  return h;
}

double edge_angle(Vec2 e) {
  double a = angle_of(e);
  if (a < 0) a += 2.0 * std::numbers::pi;
  return a;
}

}  // namespace

Polygon minkowski_sum(const Polygon& a, const Polygon& b) {
  const auto pa = prepared(a);
  const auto pb = prepared(b);
  auto edges = [](const std::vector<Vec2>& h) {
    std::vector<Vec2> e;
    if (h.size() < 2) return e;
    for (std::size_t i = 0; i < h.size(); ++i) e.push_back(h[(i + 1) % h.size()] - h[i]);
    return e;
  };
  const auto ea = edges(pa);
  const auto eb = edges(pb);
  std::vector<Vec2> out{pa[0] + pb[0]};
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ea.size() || j < eb.size()) {
    Vec2 step;
    if (j == eb.size() || (i < ea.size() && edge_angle(ea[i]) <= edge_angle(eb[j]))) {
      step = ea[i++];
    } else {
      step = eb[j++];
    }
    out.push_back(out.back() + step);
  }
  out.pop_back();  // closing vertex equals the start
  if (out.empty()) out.push_back(pa[0] + pb[0]);
  if (out.size() >= 3) out = normalize_convex(out);
  return Polygon{out};
}

ConvexDisc centrosymmetrize(const Polygon& p) {
  if (p.size() < 3 || normalize_convex(p.vertices).size() < 3) {
    throw InvalidInput("centrosymmetrize: degenerate input");
  }
  if (!is_convex(p.vertices)) throw InvalidInput("centrosymmetrize: nonconvex input");
  Polygon neg;
  for (const auto& v : p.vertices) neg.vertices.push_back(-v);
  auto sum = minkowski_sum(p, neg);
  for (auto& v : sum.vertices) v = v * 0.5;
  return ConvexDisc(sum);
}

}  // namespace minkpack
