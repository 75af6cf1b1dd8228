#include <numbers>

#include "doctest.h"
#include "minkpack/bounds.hpp"
#include "minkpack/extremal.hpp"
#include "minkpack/oracle.hpp"
#include "test_support.hpp"

using namespace minkpack;
using doctest::Approx;

namespace {

// Frozen from oracle::grid_max_triangle / grid_max_kgon (n = 1024 for k = 3, 4;
// n = 512 for k = 6; n = 64 for k = 5).
constexpr double kSquareDelta = 0.5;
constexpr double kSquareF4 = 2.0;
constexpr double kSquareF5 = 2.5;
constexpr double kSquareF6 = 4.0;
constexpr double kCircleDelta = 0.433012701892;  // 96-gon, sqrt(3)/4 to oracle precision

std::vector<Vec2> multiset_sorted(std::vector<Vec2> s) {
  std::sort(s.begin(), s.end(), [](Vec2 a, Vec2 b) { return a.x < b.x - 1e-12 || (std::abs(a.x - b.x) <= 1e-12 && a.y < b.y); });
  return s;
}

}  // namespace

TEST_CASE("oracle frozen values") {
  const auto sq = ConvexDisc::square();
  CHECK(oracle::grid_max_triangle(sq, 1024) == Approx(kSquareDelta).epsilon(1e-3));
  CHECK(oracle::grid_max_kgon(sq, 4, 1024) == Approx(kSquareF4).epsilon(1e-3));
  CHECK(oracle::grid_max_kgon(sq, 6, 512) == Approx(kSquareF6).epsilon(2e-3));
  CHECK(oracle::grid_max_kgon(sq, 5, 64) == Approx(kSquareF5).epsilon(1e-3));
  const auto circle = ConvexDisc::regular(96);
  CHECK(oracle::grid_max_triangle(circle, 1024) == Approx(std::sqrt(3.0) / 4).epsilon(5e-3));
}

TEST_CASE("max_triangle_area") {
  CHECK(max_triangle_area(ConvexDisc::square()) == Approx(kSquareDelta).epsilon(1e-12));
  CHECK(max_triangle_area(ConvexDisc::regular(96)) == Approx(kCircleDelta).epsilon(1e-9));
  CHECK(max_triangle_area(ConvexDisc::regular(6)) == Approx(std::sqrt(3.0) / 4).epsilon(1e-12));

  SUBCASE("maximizers are unit-sided and closed") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
      const auto d = testing::random_disc(rng);
      const auto r = max_unit_triangle(d);
      REQUIRE_FALSE(r.maximizers.empty());
      for (const auto& t : r.maximizers) {
        CHECK(d.gauge(t.s1) == Approx(1.0).epsilon(1e-9));
        CHECK(d.gauge(t.s2) == Approx(1.0).epsilon(1e-9));
        CHECK(d.gauge(t.s3) == Approx(1.0).epsilon(1e-9));
        CHECK(norm(t.s1 + t.s2 + t.s3) < 1e-12);
        CHECK(t.area() == Approx(r.area).epsilon(1e-9));
      }
    }
  }
  SUBCASE("optimizer meets the oracle") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 10; ++trial) {
      const auto d = testing::random_disc(rng);
      const double opt = max_triangle_area(d);
      const double ora = oracle::grid_max_triangle(d, 512);
      CHECK(opt >= ora - 1e-9);
      CHECK(opt <= ora * (1 + 1e-3));
    }
  }
  SUBCASE("affine equivariance") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
      const auto d = testing::random_disc(rng);
      const auto t = testing::random_linear(rng);
      const auto e = d.transformed(t.a, t.b, t.c, t.d);
      CHECK(max_triangle_area(e) == Approx(std::abs(t.det()) * max_triangle_area(d)).epsilon(1e-9));
    }
  }
}

TEST_CASE("max_kgon_area") {
  const auto sq = ConvexDisc::square();
  CHECK(max_kgon_area(sq, 3) == Approx(kSquareDelta));
  CHECK(max_kgon_area(sq, 4) == Approx(kSquareF4).epsilon(1e-12));
  CHECK(max_kgon_area(sq, 6) == Approx(kSquareF6).epsilon(1e-12));
  CHECK(max_kgon_area(sq, 5) == Approx(kSquareF5).epsilon(1e-9));
  CHECK_THROWS_AS(max_kgon_area(sq, 2), RangeError);
  CHECK_THROWS_AS(max_kgon_area(sq, 7), RangeError);

  // Witness for the square's F6 = 4: sides (1,0), (1,1), (-1,1) and negatives.
  const auto hex = UnitSidedPolygon::from_sides(sq, {{1, 0}, {1, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {1, -1}});
  CHECK(hex.convex());
  CHECK(hex.area() == Approx(4.0));

  SUBCASE("optimizers meet the oracles") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 6; ++trial) {
      const auto d = testing::random_disc(rng, 5);
      for (auto [k, n] : {std::pair{4, 512}, std::pair{6, 256}, std::pair{5, 64}}) {
        const double opt = max_kgon_area(d, k);
        const double ora = oracle::grid_max_kgon(d, k, n);
        INFO("k=" << k);
        CHECK(opt >= ora - 1e-9);
        // Grid samples miss vertices, so the scans trail by O(perimeter / n).
        CHECK(opt <= ora * (1 + (k == 5 ? 2e-2 : 1e-2)));
      }
    }
  }
}

TEST_CASE("profile") {
  const auto sq = profile(ConvexDisc::square());
  CHECK(sq.d0p == Approx(1.0));
  CHECK(sq.f3 == sq.delta);

  const auto circle = profile(ConvexDisc::regular(96));
  CHECK(circle.d0p == Approx(std::numbers::pi / (2 * std::sqrt(3.0))).epsilon(5e-3));

  const auto aff = profile(ConvexDisc::regular(6).transformed(1.3, 0.4, -0.2, 0.7));
  CHECK(aff.d0p == Approx(0.75).epsilon(1e-9));
  CHECK(aff.slack_f6() == Approx(0.0).scale(1.0));
}

TEST_CASE("lemma inequalities and affine invariance on random discs") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    const auto d = testing::random_disc(rng);
    const auto p = profile(d);
    CHECK(p.f3 == p.delta);
    CHECK(p.f4 <= p.area - 4 * p.delta + 1e-6);
    CHECK(p.f5 <= 0.5 * (p.f4 + p.f6) + 1e-6);
    CHECK(p.f6 <= p.area + 1e-6);
    CHECK(p.d0p >= 0.75 - 1e-9);
    CHECK(p.d0p <= 1.0 + 1e-9);
    if (d.size() == 6) CHECK(p.f6 == Approx(p.area).epsilon(1e-9));
    if (d.size() >= 8) CHECK(p.f6 < p.area);

    const auto t = testing::random_linear(rng);
    const auto q = profile(d.transformed(t.a, t.b, t.c, t.d));
    const double j = std::abs(t.det());
    CHECK(q.area == Approx(j * p.area).epsilon(1e-9));
    CHECK(q.delta == Approx(j * p.delta).epsilon(1e-9));
    CHECK(q.f4 == Approx(j * p.f4).epsilon(1e-9));
    CHECK(q.f5 == Approx(j * p.f5).epsilon(1e-4));
    CHECK(q.f6 == Approx(j * p.f6).epsilon(1e-9));
    CHECK(q.d0p == Approx(p.d0p).epsilon(1e-9));
  }
}

TEST_CASE("make_theorem_hexagon") {
  const auto h = make_theorem_hexagon(0.75);
  CHECK(h.size() == 6);
  CHECK(h.gauge({0.5, 1}) == Approx(1.0));
  for (double d0p : {0.75, 0.8, 0.875, 0.93, 1.0}) {
    const auto disc = make_theorem_hexagon(d0p);
    CHECK(profile(disc).d0p == Approx(d0p).epsilon(1e-6));
    CHECK(theorem_hexagon_parameter(disc) == Approx(d0p));
  }
  // Side : diagonal ratio 2 d0p - 1.
  const auto h78 = make_theorem_hexagon(7.0 / 8);
  double top = 0;
  for (const auto& v : h78.vertices())
    if (std::abs(v.y - 1) < 1e-12) top = std::max(top, v.x);
  CHECK(2 * top / 2.0 == Approx(0.75));
  // d0p = 1 degenerates to the square (collinear vertices merged).
  CHECK(make_theorem_hexagon(1.0).size() == 4);
  CHECK_THROWS_AS(make_theorem_hexagon(0.7), RangeError);
  CHECK_THROWS_AS(make_theorem_hexagon(1.01), RangeError);
  CHECK(theorem_hexagon_parameter(ConvexDisc::regular(6)) < 0);
}

TEST_CASE("convexify_flips") {
  const auto sq = ConvexDisc::square();
  SUBCASE("convex input unchanged") {
    const auto p = UnitSidedPolygon::from_sides(sq, {{1, 0}, {1, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {1, -1}});
    FlipStats st;
    const auto q = convexify_flips(p, &st);
    CHECK(st.iterations == 0);
    CHECK(q.vertices() == p.vertices());
  }
  SUBCASE("L-shape becomes a square") {
    const auto p = UnitSidedPolygon::from_sides(
        sq, {{1, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, 1}, {-1, 0}, {0, -1}, {0, -1}});
    CHECK(p.area() == Approx(3.0));
    FlipStats st;
    const auto q = convexify_flips(p, &st);
    CHECK(st.iterations == 1);
    CHECK(q.convex());
    CHECK(q.area() == Approx(4.0));
  }
  SUBCASE("self-intersecting input rejected") {
    const UnitSidedPolygon bow(sq, {{0, 0}, {1, 1}, {1, 0}, {0, 1}});
    CHECK_THROWS_AS(convexify_flips(bow), InvalidInput);
  }
  SUBCASE("random polygons match the angle-sorted construction") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 60; ++trial) {
      const auto d = testing::random_disc(rng);
      const auto p = testing::random_unit_polygon(d, 4 + trial % 5, rng);
      FlipStats st;
      const auto q = convexify_flips(p, &st);
      CHECK_FALSE(st.hit_cap);
      CHECK(q.convex());
      CHECK(q.area() >= p.area() - 1e-12);
      CHECK(q.area() == Approx(std::abs(signed_area(angle_sorted_polygon(p.sides())))).epsilon(1e-9));
      const auto a = multiset_sorted(p.sides());
      const auto b = multiset_sorted(q.sides());
      REQUIRE(a.size() == b.size());
      for (std::size_t i = 0; i < a.size(); ++i) CHECK(norm(a[i] - b[i]) < 1e-9);
    }
  }
}

TEST_CASE("symmetrize_even") {
  const auto sq = ConvexDisc::square();
  SUBCASE("centrosymmetric input keeps its area") {
    const auto p = UnitSidedPolygon::from_sides(sq, {{1, 0}, {1, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {1, -1}});
    const auto q = symmetrize_even(p);
    CHECK(q.area() == Approx(p.area()));
    CHECK(q.centrosymmetric());
  }
  SUBCASE("parallelogram is a fixed point") {
    const auto p = UnitSidedPolygon::from_sides(sq, {{1, -1}, {1, 1}, {-1, 1}, {-1, -1}});
    const auto q = symmetrize_even(p);
    CHECK(q.vertices() == p.vertices());
  }
  SUBCASE("asymmetric hexagon") {
    // Angle-sorted sides (1,0), (0.5,1), (-1,0.5), (-1,-0.5), (0,-1), (0.5,-1)... closed below.
    std::vector<Vec2> s{{1, 0}, {0.5, 1}, {-1, 0.5}, {-1, -0.5}};
    Vec2 w{};
    for (const auto& v : s) w += v;
    const Vec2 u = testing::close_two_sides(sq, -w);
    s.push_back(u);
    s.push_back(-w - u);
    const UnitSidedPolygon p(sq, angle_sorted_polygon(s));
    REQUIRE(p.convex());
    REQUIRE_FALSE(p.centrosymmetric());
    const auto q = symmetrize_even(p);
    CHECK(q.centrosymmetric());
    CHECK(q.convex());
    CHECK(q.size() == 6);
    CHECK(q.area() >= p.area() - 1e-12);
  }
  SUBCASE("random convex even polygons") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
      const auto d = testing::random_disc(rng);
      const auto r = testing::random_unit_polygon(d, trial % 2 ? 4 : 6, rng);
      const UnitSidedPolygon p(d, angle_sorted_polygon(r.sides()));
      const auto q = symmetrize_even(p);
      CHECK(q.centrosymmetric());
      CHECK(q.area() >= p.area() - 1e-12);
      CHECK(q.area() <= max_kgon_area(d, static_cast<int>(p.size())) + 1e-9);
    }
  }
  SUBCASE("odd rejected") {
    const auto p = UnitSidedPolygon::from_sides(sq, {{1, 0}, {0, 1}, {-1, -1}});
    CHECK_THROWS_AS(symmetrize_even(p), InvalidInput);
  }
}
