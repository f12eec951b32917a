import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from incidence.curves import (
    Curve,
    count_curve_incidences,
    curve_bound_ratio,
    dof_check,
    on_curve,
    parse_monomial,
)
from incidence.engine import count_incidences_naive
from incidence.errors import GeometryError, GuardExceededError
from incidence.extremal import general_position_points, generate
from incidence.field import QQ
from incidence.geometry import line_through, point

from helpers import TOWERS, random_configuration, random_nonzero


def C(**coeffs):
    # keyword form: x2y0=1 -> x^2*y^0
    return Curve.from_coefficients({(int(k[1]), int(k[3])): v for k, v in coeffs.items()})


def test_parse_monomial():
    assert parse_monomial("x^2*y^1") == (2, 1)
    assert parse_monomial("x") == (1, 0)
    assert parse_monomial("1") == (0, 0)
    with pytest.raises(ValueError):
        parse_monomial("z^2")


def test_on_curve_examples():
    parabola = Curve.from_coefficients({"y": 1, "x^2": -1, "1": -1})
    circle = Curve.from_coefficients({"x^2": 1, "y^2": 1, "1": -2})
    assert on_curve(point(1, 2), parabola)
    assert on_curve(point(1, 1), circle)
    assert not on_curve(point(0, 0), circle)


def test_zero_polynomial_rejected():
    with pytest.raises(GeometryError):
        Curve.from_coefficients({"x": 0})


def test_count_examples():
    parabolas = [Curve.from_coefficients({"y": 1, "x^2": -1, "1": -b}) for b in range(3)]
    pts = [point(0, 0), point(0, 1), point(0, 2)]
    assert count_curve_incidences(pts, parabolas) == 3
    assert count_curve_incidences(pts, []) == 0
    cfg = generate("st_grid", 2)
    curves = [Curve.from_line(l) for l in cfg.lines]
    assert count_curve_incidences(cfg.points, curves) == count_incidences_naive(cfg) == 16


def test_dof_general_position_lines():
    pts = general_position_points(6, seed=2)
    lines = [Curve.from_line(line_through(p, q)) for i, p in enumerate(pts) for q in pts[i + 1:]]
    assert dof_check(pts, lines, k=2, s=1) == []


def test_dof_two_conics_through_four_points():
    pts = [point(1, 1), point(1, -1), point(-1, 1), point(-1, -1)]
    circle = Curve.from_coefficients({"x^2": 1, "y^2": 1, "1": -2})
    pair_of_lines = Curve.from_coefficients({"x^2": 1, "1": -1})
    v = dof_check(pts, [circle, pair_of_lines], k=4, s=1)
    subsets = [x for x in v if x.kind == "subset"]
    assert len(subsets) == 1
    assert subsets[0].points == (0, 1, 2, 3) and subsets[0].curves == (0, 1)


def test_dof_disjoint_circles():
    inner = [point(1, 0), point(0, 1), point(-1, 0), point(0, -1), point("3/5", "4/5")]
    outer = [point(2, 0), point(0, 2), point(-2, 0), point("6/5", "8/5")]
    c1 = Curve.from_coefficients({"x^2": 1, "y^2": 1, "1": -1})
    c2 = Curve.from_coefficients({"x^2": 1, "y^2": 1, "1": -4})
    v = dof_check(inner + outer, [c1, c2], k=3, s=2)
    assert [x for x in v if x.kind == "pair"] == []
    assert v == []


def test_dof_brute_force_agreement():
    rng = random.Random(7)
    pts = [point(rng.randint(0, 3), rng.randint(0, 3)) for _ in range(12)]
    pts = list(dict.fromkeys(pts))
    curves = [Curve.from_line(line_through(pts[i], pts[j])) for i in range(4) for j in range(i + 1, 6)]
    curves += [Curve.from_coefficients({"x^2": 1, "y": -1, "1": -b}) for b in range(-2, 3)]
    curves = list(dict.fromkeys(curves))
    import itertools
    for k, s in [(1, 1), (2, 1), (2, 2), (3, 1)]:
        want = []
        for S in itertools.combinations(range(len(pts)), k):
            on = [ci for ci, c in enumerate(curves) if all(on_curve(pts[i], c) for i in S)]
            if len(on) > s:
                want.append((S, tuple(on)))
        got = [(v.points, v.curves) for v in dof_check(pts, curves, k, s) if v.kind == "subset"]
        assert got == want
        pairs = []
        for a, b in itertools.combinations(range(len(curves)), 2):
            shared = tuple(i for i, p in enumerate(pts) if on_curve(p, curves[a]) and on_curve(p, curves[b]))
            if len(shared) > s:
                pairs.append((shared, (a, b)))
        assert [(v.points, v.curves) for v in dof_check(pts, curves, k, s) if v.kind == "pair"] == pairs


@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_dof_st_grid(N):
    cfg = generate("st_grid", N)
    assert dof_check(cfg.points, [Curve.from_line(l) for l in cfg.lines], 2, 1) == []


def test_dof_guard():
    pts = [point(i, 0) for i in range(60)]
    curves = [Curve.from_coefficients({"y": 1, "1": -b}) for b in range(200)]
    with pytest.raises(GuardExceededError):
        dof_check(pts, curves, k=5, s=1)


def test_bound_ratio():
    assert curve_bound_ratio(10, 4, 4, 2, 0.0) == pytest.approx(10 / (4 ** (2 / 3) * 4 ** (2 / 3) + 8))
    assert curve_bound_ratio(0, 0, 0, 2, 0.1) == 0


@pytest.mark.parametrize("name", ["Q", "Q(t)", "Q[s]/(s^2-2)"])
@settings(max_examples=15, deadline=None)
@given(seed=st.integers(0, 2**32))
def test_lines_as_curves_and_scaling(name, seed):
    K = TOWERS[name]
    rng = random.Random(seed)
    cfg = random_configuration(K, rng, 10, 10)
    curves = [Curve.from_line(l) for l in cfg.lines]
    assert count_curve_incidences(cfg.points, curves) == count_incidences_naive(cfg)
    lam = random_nonzero(K, rng)
    for c in curves[:3]:
        scaled = Curve.from_coefficients({ij: lam * v for ij, v in c.terms}, K)
        assert scaled == c
        for p in cfg.points:
            assert on_curve(p, scaled) == on_curve(p, c)
