"""Scalar DT values of semihomogeneous classes and the rank-two wall-crossing jump."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .gamma import SL2Matrix
from .semihomog import Decomposition, SemihomClass, slope


def divisors(n: int) -> list[int]:
    """Positive divisors of ``|n|`` in increasing order (``n != 0``)."""
    n = abs(n)
    if n == 0:
        raise ValueError("0 has infinitely many divisors")
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def inverse_square_divisor_sum(r: int) -> Fraction:
    return sum((Fraction(1, k * k) for k in divisors(r)), Fraction(0))


def dt_semihom(c: SemihomClass) -> Fraction:
    # gcd(p, q) = 1, so the content of r(p^3, ..., q^3) is |r|
    if c.r == 0:
        raise ValueError("r must be nonzero")
    return inverse_square_divisor_sum(c.r)


@dataclass(frozen=True)
class WallCrossCase:
    wall: bool
    point: Optional[Fraction] = None

    def __post_init__(self):
        if self.wall and self.point is None:
            raise ValueError("a Wall case carries its crossing point -d/c")

    @property
    def tag(self) -> str:
        return "Wall" if self.wall else "NoWall"

    def to_json(self) -> dict:
        out = {"case": self.tag}
        if self.wall:
            out["point"] = str(self.point)
        return out


NO_WALL = WallCrossCase(False)


def classify(g: SL2Matrix, d: Decomposition) -> WallCrossCase:
    if g.c == 0:
        return NO_WALL
    x = Fraction(-g.d, g.c)
    lo, hi = slope(d.gamma1), slope(d.gamma2)
    if x >= lo.value and (hi.is_infinite or x < hi.value):
        return WallCrossCase(True, x)
    return NO_WALL


def wall_crossing_term(d: Decomposition) -> Fraction:
    """``DT(v) - DT(g_* v)`` when ``g`` crosses the wall of ``d``."""
    a = d.alpha
    if a == 0:
        raise ValueError("summands have equal slope")
    r1, r2 = d.gamma1.r, d.gamma2.r
    sign = -1 if (r1 * r2 * a) % 2 else 1
    return (sign * r1 * r2 * a ** 9
            * inverse_square_divisor_sum(r1) * inverse_square_divisor_sum(r2))
