import itertools
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings

from abeldt.gamma import GammaVector, discriminant
from abeldt.semihomog import (INFINITY, Decomposition, SemihomClass, Slope, chi, decompose, in_C,
                              is_wallcrossing_free, slope)
from conftest import gamma_vectors, semihom_classes

G = GammaVector


def test_in_C_examples():
    assert in_C(G(1, 0, 0, 0)) == SemihomClass(1, 0, 1)
    assert in_C(G(8, 4, 2, 1)) == SemihomClass(2, 1, 1)
    assert in_C(G(2, 0, 2, 0)) is None
    assert in_C(G(0, 0, 0, -4)) == SemihomClass(0, 1, -4)


def test_in_C_small_search_agrees():
    # (2,0,2,0) has no representation with |p|,|q| <= 3, |r| <= 2
    hits = [(p, q, r) for p, q, r in itertools.product(range(-3, 4), range(-3, 4), range(-2, 3))
            if (r * p**3, r * p * p * q, r * p * q * q, r * q**3) == (2, 0, 2, 0)]
    assert hits == []


def test_zero_vector_rejected():
    with pytest.raises(ValueError):
        in_C(G(0, 0, 0, 0))
    with pytest.raises(ValueError):
        decompose(G(0, 0, 0, 0))


def test_slopes():
    assert slope(SemihomClass(1, 0, 1)) == Slope(Fraction(0))
    assert slope(SemihomClass(0, 1, -5)) == INFINITY
    assert slope(SemihomClass(2, 1, 1)) == Slope(Fraction(1, 2))
    assert Slope(Fraction(10**6)) < INFINITY and not INFINITY < INFINITY


def test_class_invariants():
    with pytest.raises(ValueError):
        SemihomClass(2, 4, 1)
    with pytest.raises(ValueError):
        SemihomClass(-1, 0, 1)
    with pytest.raises(ValueError):
        SemihomClass(1, 0, 0)
    assert SemihomClass.canonical(-2, -1, 3) == SemihomClass(2, 1, -3)


def test_decompose_examples():
    d = decompose(G(1, 0, 0, -3))
    assert (d.gamma1, d.gamma2) == (SemihomClass(1, 0, 1), SemihomClass(0, 1, -3))
    d = decompose(G(2, 1, 1, 1))
    assert (d.gamma1, d.gamma2) == (SemihomClass(1, 0, 1), SemihomClass(1, 1, 1))
    assert decompose(G(0, 0, 5, 7)) is None


def test_decompose_with_cancelling_summands():
    d = decompose(G(0, -9, -9, -7))
    assert (d.gamma1, d.gamma2) == (SemihomClass(3, 1, 1), SemihomClass(3, 2, -1))
    d = decompose(G(1, 0, -2, -6))
    assert (d.gamma1, d.gamma2) == (SemihomClass(1, 1, 2), SemihomClass(1, 2, -1))


def test_wallcrossing_free_examples():
    assert is_wallcrossing_free(G(1, 0, 0, 0))
    assert not is_wallcrossing_free(G(1, 0, 0, -1))
    assert is_wallcrossing_free(G(1, 0, -1, -1))


def test_decomposition_orders_slopes():
    with pytest.raises(ValueError):
        Decomposition(SemihomClass(1, 1, 1), SemihomClass(1, 0, 1))


@given(semihom_classes())
def test_semihomogeneous_classes_roundtrip(c):
    v = c.as_gamma()
    assert in_C(v) == c
    assert discriminant(v) == 0


@given(semihom_classes(), semihom_classes())
def test_decompose_recovers_sum(c1, c2):
    assume(slope(c1) != slope(c2))
    lo, hi = (c1, c2) if slope(c1) < slope(c2) else (c2, c1)
    v = lo.as_gamma() + hi.as_gamma()
    assume(not v.is_zero())
    assert decompose(v) == Decomposition(lo, hi)


@given(semihom_classes(), semihom_classes())
def test_slope_law(c1, c2):
    same = slope(c1) == slope(c2)
    assert (chi(c1, c2) == 0) == same


@settings(max_examples=2000)
@given(gamma_vectors())
def test_nonnegative_discriminant_blocks_decomposition(v):
    assume(not v.is_zero() and discriminant(v) >= 0)
    assert decompose(v) is None


@given(semihom_classes(), semihom_classes())
def test_decomposition_identities(c1, c2):
    assume(slope(c1) != slope(c2))
    v = c1.as_gamma() + c2.as_gamma()
    assume(not v.is_zero())
    d = decompose(v)
    g1, g2 = d.gamma1, d.gamma2
    assert d.total() == v
    assert d.alpha > 0
    assert chi(g1, g2) == g1.r * g2.r * d.alpha ** 3
    # Hessian covariant factors through the two slopes
    v0, v1, v2, v3 = v
    k = -g1.r * g2.r * d.alpha ** 2
    assert (v1 * v1 - v0 * v2, v1 * v2 - v0 * v3, v2 * v2 - v1 * v3) == (
        k * g1.p * g2.p, k * (g1.p * g2.q + g2.p * g1.q), k * g1.q * g2.q)
