import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from abeldt.lattice import (RingElement, SaturatedLattice, eps_product, hnf_rows, integer_kernel,
                            intersect, smith_invariants, sum_torsion)
from abeldt.verify import random_lattice, random_ring_element

L = SaturatedLattice.span


def test_eps_examples():
    assert eps_product(SaturatedLattice.full(2), L(2, [[1, 0]])) == RingElement.eps(L(2, [[1, 0]]))
    assert eps_product(L(2, [[1, 1]]), L(2, [[1, -1]])) == RingElement.eps(SaturatedLattice.zero(2), 2)
    assert eps_product(L(2, [[1, 0]]), L(2, [[1, 0]])) == RingElement(2, ())


def test_planes_in_rank_three():
    P = L(3, [[1, 0, 0], [0, 1, 0]])
    Q = L(3, [[1, 1, 0], [0, 1, 2]])
    assert eps_product(P, Q) == RingElement.eps(L(3, [[1, 1, 0]]), 2)
    assert eps_product(P, L(3, [[0, 0, 1]])) == RingElement.eps(SaturatedLattice.zero(3))


def test_associativity_witness_lines():
    # three lines in Z^3 never meet transversally, so both orders vanish
    e = [RingElement.eps(L(3, [v])) for v in ([1, 0, 0], [0, 1, 0], [1, 1, 1])]
    assert e[0] * (e[1] * e[2]) == (e[0] * e[1]) * e[2] == RingElement(3, ())


def test_associativity_witness_planes():
    e = [RingElement.eps(L(3, rows)) for rows in
         ([[1, 0, 0], [0, 1, 0]], [[0, 1, 0], [0, 0, 1]], [[1, 1, 0], [0, 1, 2]])]
    left, right = e[0] * (e[1] * e[2]), (e[0] * e[1]) * e[2]
    assert left == right and left.terms


def test_distributive():
    a, b, c = (RingElement.eps(L(2, [v])) for v in ([1, 0], [0, 1], [1, 1]))
    assert (a + b) * c == a * c + b * c


def test_normal_forms():
    assert smith_invariants([[1, 1], [1, -1]]) == [1, 2]
    assert smith_invariants([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]
    assert L(3, [[2, 4, 6]]).basis == ((1, 2, 3),)
    assert hnf_rows([[0, 0]]) == []
    assert integer_kernel([[1, 1]], 2) in ([[1, -1]], [[-1, 1]])


def test_rank_mismatch():
    with pytest.raises(ValueError):
        eps_product(L(2, [[1, 0]]), L(3, [[1, 0, 0]]))


@given(st.integers(0, 10**6), st.integers(1, 6))
def test_random_lattices_are_saturated(seed, m):
    rng = random.Random(seed)
    A, B = random_lattice(rng, m), random_lattice(rng, m)
    assert A.is_saturated() and B.is_saturated()
    meet = intersect(A, B)
    assert meet.is_saturated()
    for lat in (A, B):
        # meet is contained in both: adding its rows does not raise the rank
        assert SaturatedLattice.span(m, [list(r) for r in lat.basis + meet.basis]) == lat
    assert sum_torsion(A, B) >= 1


@given(st.integers(0, 10**6), st.integers(1, 6))
def test_ring_axioms(seed, m):
    rng = random.Random(seed)
    x, y, z = (random_ring_element(rng, m) for _ in range(3))
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * RingElement.one(m) == x
    for lat in (x * y).as_dict():
        assert lat.is_saturated()
