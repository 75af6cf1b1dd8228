import math

import pytest

import minkpack as mp


def test_square_profile():
    p = mp.profile(mp.ConvexDisc.square())
    assert p.delta == pytest.approx(0.5, abs=1e-9)
    assert p.f4 == pytest.approx(2.0, abs=1e-9)
    assert p.f6 == pytest.approx(4.0, abs=1e-9)
    assert p.d0p == pytest.approx(1.0, abs=1e-9)


def test_theorem_hexagon_is_extremal():
    h = mp.make_theorem_hexagon(0.875)
    assert len(h) == 6
    p = mp.profile(h)
    assert p.d0p == pytest.approx(0.875, abs=1e-9)
    assert p.slack_f6 == pytest.approx(0.0, abs=1e-9)


def test_bounds():
    value, branch = mp.theorem_lower_bound(5, 0.75)
    assert value == pytest.approx(9 / 14)
    assert branch == "LOW_D0"
    assert mp.corollary1_bound(5) == pytest.approx(9 / 14)
    d0, v = mp.minimize_bound_over_d0(5)
    assert d0 == pytest.approx(0.75, abs=1e-6)
    assert v == pytest.approx(9 / 14, abs=1e-8)
    assert mp.corollary2_ratio_bound(5) == pytest.approx(2 / 3)
    assert mp.density_bound_from_profile(mp.make_theorem_hexagon(0.75), 5) == pytest.approx(9 / 14)


def test_errors():
    with pytest.raises(mp.RangeError):
        mp.theorem_lower_bound(7, 0.9)
    with pytest.raises(ValueError):
        mp.ConvexDisc([(2, 0), (0, 1), (-1, 0), (0, -1)])
    with pytest.raises(mp.InvalidInput):
        mp.make_generator(mp.ConvexDisc.square(), "seven", 5)
    with pytest.raises(ValueError):
        mp.minimize_bound_over_d0(5, "area")


def test_six_neighbour_lattice():
    h = mp.make_theorem_hexagon(0.8)
    p = mp.make_generator(h, "six", 60)
    assert p.kind == "six"
    assert mp.overlaps(p) == []
    s = mp.measure_stats(p, p.radius / 2)
    assert s.lambda_hat == pytest.approx(6.0)
    assert s.density_hat == pytest.approx(0.8, rel=0.02)
    assert s.max_sides <= 6


def test_equality_packing_and_proposition():
    p = mp.equality_packing(0.75, 5.0, 12, 30)
    assert p.kind == "mixed"
    holds, bad = mp.check_proposition(p, p.radius / 2)
    assert holds and bad == []
    q = mp.random_five_neighbour_packing(0.9, 8, 3)
    assert mp.check_proposition(q, q.radius / 2)[0]


def test_seven_ring_is_rejected():
    d = mp.ConvexDisc.regular(14)
    step = 2 * math.pi / 7
    r = 2 / d.gauge(math.cos(step) - 1, math.sin(step))
    ring = [(r * math.cos(i * step), r * math.sin(i * step)) for i in range(7)]
    p = mp.custom_packing(d, ring)
    assert mp.overlaps(p) == []
    assert len(mp.neighbour_edges(p)) == 7
    holds, bad = mp.check_proposition(p, 3 * r)
    assert not holds and bad == [7]


def test_json_round_trip_and_svg():
    p = mp.make_generator(mp.make_theorem_hexagon(0.9), "honeycomb", 6)
    q = mp.Packing.from_json(p.to_json())
    assert q.centers == p.centers
    assert q.kind == "honeycomb"
    svg = mp.render_svg(p, p.radius / 2)
    assert svg.count("<polygon ") == len(p)
