import json
import math
from fractions import Fraction
from xml.etree import ElementTree

import jsonschema
import pytest
from hypothesis import assume, given, strategies as st

from abeldt.gamma import GammaVector, S, SL2Matrix, TauPoint, mobius_pullback
from abeldt.semihomog import Decomposition, SemihomClass, decompose, slope
from abeldt.walls import (WALLS_SCHEMA, Circle, Line, Viewport, central_charge, emit_walls,
                          gieseker_beta_bound, on_wall, sample_wall, side_of_wall, walls_for)
from conftest import semihom_classes

G = GammaVector
R3 = math.sqrt(3)


def test_central_charge():
    tau = TauPoint(Fraction(2, 3), Fraction(5, 7))
    assert central_charge(tau, G(0, 0, 0, 1)) == (-1, 0)
    # u (beta - theta + i alpha)^3 at u = 1, theta = 0, tau = i
    assert central_charge(TauPoint(Fraction(0), Fraction(1)), G(1, 0, 0, 0)) == (0, -1)


@given(st.builds(G, *[st.integers(-9, 9)] * 4), st.builds(G, *[st.integers(-9, 9)] * 4),
       st.fractions(-3, 3, max_denominator=5), st.fractions(Fraction(1, 5), 3, max_denominator=5))
def test_central_charge_linear(v, w, b, a):
    tau = TauPoint(b, a)
    z1, z2, z = central_charge(tau, v), central_charge(tau, w), central_charge(tau, v + w)
    assert z == (z1[0] + z2[0], z1[1] + z2[1])


@given(semihom_classes(), st.fractions(-3, 3, max_denominator=5),
       st.fractions(Fraction(1, 5), 3, max_denominator=5))
def test_central_charge_closed_form(c, b, a):
    assume(c.p != 0)
    theta = Fraction(c.q, c.p)
    z = c.u * (complex(b - theta, a)) ** 3
    re, im = central_charge(TauPoint(b, a), c.as_gamma())
    assert abs(complex(float(re), float(im)) - z) < 1e-9 * max(1, abs(z))


def test_circle_example():
    (w,) = walls_for(G(2, 1, 1, 1))
    assert isinstance(w, Circle)
    assert w.center_beta == Fraction(1, 2)
    assert w.center_alpha_sq == Fraction(1, 12) and w.center_alpha_sign == -1
    assert w.radius_sq == Fraction(1, 3)
    assert w.u_ratio_positive


def test_line_example():
    (w,) = walls_for(G(1, 0, 0, -1))
    assert isinstance(w, Line) and w.sign == -1 and w.intercept == 0
    assert walls_for(G(1, 0, -1, -1)) == []


def test_on_wall_examples():
    v = G(2, 1, 1, 1)
    # the arc's top point: centre alpha -sqrt3/6 plus radius 1/sqrt3
    assert on_wall(TauPoint(0.5, -R3 / 6 + 1 / R3), v, 1e-9)
    assert not on_wall(TauPoint(0.5, R3 / 6 + 1 / R3), v, 1e-9)
    assert not on_wall(TauPoint(-5, 1), v, 1e-9)
    assert on_wall(TauPoint(-R3 / 3, 1), G(1, 0, 0, -1), 1e-9)
    with pytest.raises(ValueError):
        on_wall(TauPoint(0, 1), G(1, 0, -1, -1))


def test_beta_bound():
    two = Decomposition(SemihomClass(1, 0, 1), SemihomClass(1, 1, 1))
    assert gieseker_beta_bound(two).at(1) == pytest.approx(-1 / 6)
    assert gieseker_beta_bound(two).constant == Fraction(-1, 6)
    point = decompose(G(1, 0, 0, -1))
    assert gieseker_beta_bound(point).at(R3) == pytest.approx(-1)


@given(semihom_classes(), semihom_classes())
def test_beta_bound_keeps_path_off_the_wall(c1, c2):
    assume(slope(c1) != slope(c2))
    v = c1.as_gamma() + c2.as_gamma()
    assume(not v.is_zero())
    d = decompose(v)
    (w,) = walls_for(v)
    bound = gieseker_beta_bound(d)
    for a in (0.05, 0.3, 1.0, 3.0, 10.0):
        far = side_of_wall(TauPoint(-1e6, a), w)
        for step in (1e-6, 0.5, 5.0):
            assert side_of_wall(TauPoint(bound.at(a) - step, a), w) == far != 0


@given(semihom_classes(), semihom_classes())
def test_circle_meets_axis_at_slopes(c1, c2):
    assume(slope(c1) != slope(c2) and c1.p and c2.p)
    v = c1.as_gamma() + c2.as_gamma()
    assume(not v.is_zero())
    (w,) = walls_for(v)
    d = decompose(v)
    for t in (slope(d.gamma1).value, slope(d.gamma2).value):
        assert (t - w.center_beta) ** 2 + w.center_alpha_sq == w.radius_sq


@given(semihom_classes(), semihom_classes())
def test_sampled_points_agree_with_phases(c1, c2):
    assume(slope(c1) != slope(c2))
    v = c1.as_gamma() + c2.as_gamma()
    assume(not v.is_zero())
    (w,) = walls_for(v)
    assert all(on_wall(p, v, 1e-9) for p in sample_wall(w, 16))


def test_case_one_path_avoids_wall():
    # -d/c = -1 lies outside [0, inf): the pulled-back vertical path never meets the wall
    v = G(1, 0, 0, -1)
    (w,) = walls_for(v)
    g = SL2Matrix(1, 0, 1, 1)  # -d/c = -1, outside [0, inf)
    sides = set()
    for k in range(1, 200):
        tau = TauPoint(Fraction(-50), Fraction(k, 4))
        sides.add(side_of_wall(mobius_pullback(g, tau), w))
    assert 0 not in sides and len(sides) == 1


def test_emit_json_schema():
    for v in (G(2, 1, 1, 1), G(1, 0, 0, -1), G(1, 0, -1, -1)):
        doc = json.loads(emit_walls(v, "json"))
        jsonschema.validate(doc, WALLS_SCHEMA)
        assert doc["v"] == list(v)
    assert json.loads(emit_walls(G(1, 0, -1, -1)))["walls"] == []
    assert emit_walls(G(2, 1, 1, 1)) == emit_walls(G(2, 1, 1, 1))


def test_emit_svg():
    svg = emit_walls(G(2, 1, 1, 1), "svg", Viewport(-1, 2, 2))
    root = ElementTree.fromstring(svg.split("\n", 1)[1])
    assert root.get("viewBox") == "-1 0 3 2"
    circles = root.findall(".//{http://www.w3.org/2000/svg}circle")
    assert len(circles) == 1 and circles[0].get("stroke-dasharray")
    line_svg = emit_walls(G(1, 0, 0, -1), "svg")
    assert "stroke-dasharray" not in line_svg.split("<line", 2)[2]
    empty = emit_walls(G(1, 0, -1, -1), "svg")
    ElementTree.fromstring(empty.split("\n", 1)[1])
    with pytest.raises(ValueError):
        Viewport(1, 0, 1)
    with pytest.raises(ValueError):
        emit_walls(G(2, 1, 1, 1), "png")
