"""Forward enumeration of two-term semihomogeneous sums inside a box.

Used as an independent oracle for :func:`abeldt.semihomog.decompose`.

For ``v = gamma1 + gamma2`` with finite slopes the Hessian covariant satisfies

    (v1^2 - v0 v2, v1 v2 - v0 v3, v2^2 - v1 v3)
        = -r1 r2 a^2 (p1 p2, p1 q2 + p2 q1, q1 q2),     a = p1 q2 - p2 q1,

so ``|v_i| <= B`` forces ``|r1 r2| a^2 * max(p1 p2, |p1 q2 + p2 q1|, |q1 q2|) <= 2 B^2``.
That bound makes the enumeration finite and complete.
"""

from __future__ import annotations

from collections import defaultdict
from math import gcd, isqrt

from .gamma import GammaVector
from .semihomog import Decomposition, SemihomClass


def hessian(v: GammaVector) -> tuple:
    v0, v1, v2, v3 = v
    return (v1 * v1 - v0 * v2, v1 * v2 - v0 * v3, v2 * v2 - v1 * v3)


def _add(found, box, g1: SemihomClass, g2: SemihomClass):
    v = g1.as_gamma() + g2.as_gamma()
    if max(abs(x) for x in v) <= box and not v.is_zero():
        found[tuple(v)].append(Decomposition(g1, g2))


def enumerate_decompositions(box: int) -> dict:
    """Map every nonzero ``v`` with ``|v_i| <= box`` that splits to its splittings."""
    H = 2 * box * box
    found: dict = defaultdict(list)

    # both slopes finite: p1, p2 >= 1
    for p1 in range(1, H + 1):
        for p2 in range(1, H // p1 + 1):
            P = p1 * p2
            for R in range(1, H // P + 1):
                for r1 in {d for d in range(1, R + 1) if R % d == 0}:
                    for s1 in (1, -1):
                        for s2 in (1, -1):
                            a1, a2 = s1 * r1, s2 * (R // r1)
                            if abs(a1 * p1 ** 3 + a2 * p2 ** 3) > box:
                                continue
                            _finite(found, box, H, p1, p2, a1, a2)

    # one summand is a point class (0, 1, r2)
    for p in range(1, box + 1):
        for r1 in range(-box, box + 1):
            if r1 == 0 or abs(r1 * p ** 3) > box:
                continue
            qmax = isqrt(box // abs(r1 * p)) + 1
            for q in range(-qmax, qmax + 1):
                if gcd(p, q) != 1:
                    continue
                g1 = SemihomClass(p, q, r1)
                top = r1 * q ** 3
                for r2 in range(-box - top, box - top + 1):
                    if r2:
                        _add(found, box, g1, SemihomClass(0, 1, r2))
    return found


def _finite(found, box, H, p1, p2, a1, a2):
    R, P = abs(a1 * a2), p1 * p2
    amax = isqrt(H // (R * P))
    for alpha in range(1, amax + 1):
        M = H // (R * alpha * alpha)
        # |p2 q1| <= M and p1 q2 = alpha + p2 q1
        for q1 in range(-(M // p2), M // p2 + 1):
            num = alpha + p2 * q1
            if num % p1:
                continue
            q2 = num // p1
            if gcd(p1, q1) != 1 or gcd(p2, q2) != 1:
                continue
            if abs(a1 * p1 * p1 * q1 + a2 * p2 * p2 * q2) > box:
                continue
            _add(found, box, SemihomClass(p1, q1, a1), SemihomClass(p2, q2, a2))
