"""Chern vectors of a principally polarized abelian threefold of Picard rank one.

A class is stored as the integer vector ``(v0, v1, v2, v3)`` with respect to
the basis ``1, H, H^2/2, H^3/6``.  ``SL2(Z)`` acts on these through its action
on binary cubic forms ``v0 x^3 + 3 v1 x^2 y + 3 v2 x y^2 + v3 y^3``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

Real = Union[Fraction, float, int]


@dataclass(frozen=True)
class GammaVector:
    v0: int
    v1: int
    v2: int
    v3: int

    @classmethod
    def of(cls, seq) -> "GammaVector":
        v0, v1, v2, v3 = (int(x) for x in seq)
        return cls(v0, v1, v2, v3)

    def __iter__(self) -> Iterator[int]:
        yield self.v0
        yield self.v1
        yield self.v2
        yield self.v3

    def __add__(self, other: "GammaVector") -> "GammaVector":
        return GammaVector(*(a + b for a, b in zip(self, other)))

    def __sub__(self, other: "GammaVector") -> "GammaVector":
        return GammaVector(*(a - b for a, b in zip(self, other)))

    def __neg__(self) -> "GammaVector":
        return GammaVector(-self.v0, -self.v1, -self.v2, -self.v3)

    def scale(self, k: int) -> "GammaVector":
        return GammaVector(k * self.v0, k * self.v1, k * self.v2, k * self.v3)

    def is_zero(self) -> bool:
        return not any(self)

    def to_json(self) -> list:
        return list(self)


ZERO = GammaVector(0, 0, 0, 0)


@dataclass(frozen=True)
class SL2Matrix:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"not in SL2(Z): det of {self.entries()} is "
                             f"{self.a * self.d - self.b * self.c}")

    def entries(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def __matmul__(self, h: "SL2Matrix") -> "SL2Matrix":
        return SL2Matrix(self.a * h.a + self.b * h.c, self.a * h.b + self.b * h.d,
                         self.c * h.a + self.d * h.c, self.c * h.b + self.d * h.d)

    def inverse(self) -> "SL2Matrix":
        return SL2Matrix(self.d, -self.b, -self.c, self.a)

    def to_json(self) -> list:
        return [[self.a, self.b], [self.c, self.d]]


IDENTITY = SL2Matrix(1, 0, 0, 1)
T = SL2Matrix(1, 1, 0, 1)
S = SL2Matrix(0, -1, 1, 0)


@dataclass(frozen=True)
class TauPoint:
    """A point ``beta + i*alpha`` of the upper half plane."""

    beta: Real
    alpha: Real

    def __post_init__(self):
        if not self.alpha > 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")

    def __complex__(self) -> complex:
        return complex(float(self.beta), float(self.alpha))


def euler_pairing(v: GammaVector, w: GammaVector) -> int:
    return v.v0 * w.v3 - 3 * v.v1 * w.v2 + 3 * v.v2 * w.v1 - v.v3 * w.v0


def discriminant(v: GammaVector) -> int:
    v0, v1, v2, v3 = v
    return (-4 * (v0 * v2 ** 3 + v1 ** 3 * v3) - v0 ** 2 * v3 ** 2
            + 3 * v1 ** 2 * v2 ** 2 + 6 * v0 * v1 * v2 * v3)


def _polymul(f, g):
    out = [0] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        if x:
            for j, y in enumerate(g):
                out[i + j] += x * y
    return out


def sl2_act(g: SL2Matrix, v: GammaVector) -> GammaVector:
    """Image of ``v`` under ``g``, via the substitution ``(x, y) -> (dx+by, cx+ay)``.

    Binary forms are coefficient lists indexed by the power of ``y``.
    """
    if g.a * g.d - g.b * g.c != 1:
        raise ValueError("matrix is not unimodular")
    X = [g.d, g.b]
    Y = [g.c, g.a]
    cubic = [v.v0, 3 * v.v1, 3 * v.v2, v.v3]
    out = [0, 0, 0, 0]
    for j, coeff in enumerate(cubic):
        if not coeff:
            continue
        term = [coeff]
        for _ in range(3 - j):
            term = _polymul(term, X)
        for _ in range(j):
            term = _polymul(term, Y)
        for k, t in enumerate(term):
            out[k] += t
    q1, r1 = divmod(out[1], 3)
    q2, r2 = divmod(out[2], 3)
    assert r1 == 0 and r2 == 0, "middle cubic coefficients not divisible by 3"
    return GammaVector(out[0], q1, q2, out[3])


def sl2_matrix_rep(g: SL2Matrix) -> list[list[int]]:
    """4x4 matrix whose columns are the images of the standard basis."""
    cols = [list(sl2_act(g, GammaVector(*(int(i == j) for i in range(4)))))
            for j in range(4)]
    return [[cols[j][i] for j in range(4)] for i in range(4)]


def matmul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))]
            for i in range(len(A))]


def mobius_pullback(g: SL2Matrix, tau: TauPoint) -> TauPoint:
    """Return ``(d*tau - b) / (-c*tau + a)``, i.e. ``g^{-1}`` acting on ``tau``.

    Exact when ``tau`` has rational coordinates.
    """
    beta, alpha = tau.beta, tau.alpha
    nr, ni = g.d * beta - g.b, g.d * alpha
    dr, di = g.a - g.c * beta, -g.c * alpha
    den = dr * dr + di * di
    if den == 0:
        raise ZeroDivisionError("Moebius denominator vanishes")
    if isinstance(den, int):
        den = Fraction(den)
    return TauPoint((nr * dr + ni * di) / den, (ni * dr - nr * di) / den)
