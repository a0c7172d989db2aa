"""Semihomogeneous classes ``r (p^3, p^2 q, p q^2, q^3)`` and two-term splittings."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Optional

from .gamma import GammaVector, euler_pairing


@functools.total_ordering
@dataclass(frozen=True)
class Slope:
    """Reduced rational ``q/p`` or infinity (``value is None``)."""

    value: Optional[Fraction]

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __lt__(self, other: "Slope") -> bool:
        if self.value is None:
            return False
        if other.value is None:
            return True
        return self.value < other.value

    def __str__(self) -> str:
        return "inf" if self.value is None else str(self.value)


INFINITY = Slope(None)


@dataclass(frozen=True)
class SemihomClass:
    p: int
    q: int
    r: int

    def __post_init__(self):
        if self.r == 0:
            raise ValueError("r must be nonzero")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"gcd(p, q) must be 1, got ({self.p}, {self.q})")
        if not (self.p > 0 or (self.p, self.q) == (0, 1)):
            raise ValueError("use canonical orientation p > 0 or (p, q) = (0, 1)")

    @classmethod
    def canonical(cls, p: int, q: int, r: int) -> "SemihomClass":
        if p < 0 or (p == 0 and q < 0):
            p, q, r = -p, -q, -r
        return cls(p, q, r)

    def as_gamma(self) -> GammaVector:
        p, q, r = self.p, self.q, self.r
        return GammaVector(r * p ** 3, r * p * p * q, r * p * q * q, r * q ** 3)

    @property
    def u(self) -> int:
        """Leading coefficient ``r p^3``."""
        return self.r * self.p ** 3

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "r": self.r}


@dataclass(frozen=True)
class Decomposition:
    gamma1: SemihomClass
    gamma2: SemihomClass

    def __post_init__(self):
        if not slope(self.gamma1) < slope(self.gamma2):
            raise ValueError("decomposition requires slope(gamma1) < slope(gamma2)")

    def total(self) -> GammaVector:
        return self.gamma1.as_gamma() + self.gamma2.as_gamma()

    @property
    def alpha(self) -> int:
        """``p1 q2 - p2 q1``; positive for canonically oriented summands."""
        return self.gamma1.p * self.gamma2.q - self.gamma2.p * self.gamma1.q

    def to_json(self) -> dict:
        return {"gamma1": self.gamma1.to_json(), "gamma2": self.gamma2.to_json()}


def slope(c: SemihomClass) -> Slope:
    if c.p == 0:
        return INFINITY
    return Slope(Fraction(c.q, c.p))


def _require_nonzero(v: GammaVector):
    if v.is_zero():
        raise ValueError("zero vector is not allowed here")


def in_C(v: GammaVector) -> Optional[SemihomClass]:
    """Canonical ``(p, q, r)`` with ``r (p^3, p^2 q, p q^2, q^3) = v``, or None."""
    _require_nonzero(v)
    if v.v0 == 0:
        if v.v1 == 0 and v.v2 == 0:
            return SemihomClass(0, 1, v.v3)
        return None
    theta = Fraction(v.v1, v.v0)
    p, q = theta.denominator, theta.numerator
    r, rem = divmod(v.v0, p ** 3)
    if rem:
        return None
    c = SemihomClass(p, q, r)
    return c if c.as_gamma() == v else None


def _rational_sqrt(x: Fraction) -> Optional[Fraction]:
    if x < 0:
        return None
    a, b = isqrt(x.numerator), isqrt(x.denominator)
    if a * a != x.numerator or b * b != x.denominator:
        return None
    return Fraction(a, b)


def _semihom_from(u: Fraction, theta: Fraction) -> Optional[SemihomClass]:
    comps = [u * theta ** j for j in range(4)]
    if any(c.denominator != 1 for c in comps) or u == 0:
        return None
    return in_C(GammaVector.of(int(c) for c in comps))


def decompose(v: GammaVector) -> Optional[Decomposition]:
    """The unique ``v = gamma1 + gamma2`` with both summands in C and
    ``slope(gamma1) < slope(gamma2)``, or None."""
    _require_nonzero(v)
    v0, v1, v2, v3 = v
    D = v1 * v1 - v0 * v2
    if D != 0:
        s = Fraction(v1 * v2 - v0 * v3, D)
        m = Fraction(v2 * v2 - v1 * v3, D)
        root = _rational_sqrt(s * s - 4 * m)
        if root is None or root == 0:
            return None
        t1, t2 = (s - root) / 2, (s + root) / 2
        g1 = _semihom_from((v1 - v0 * t2) / (t1 - t2), t1)
        g2 = _semihom_from((v0 * t1 - v1) / (t1 - t2), t2)
    else:
        # only a point-class summand can have slope infinity
        if v0 == 0:
            return None
        theta = Fraction(v1, v0)
        g1 = _semihom_from(Fraction(v0), theta)
        top = v0 * theta ** 3
        if top.denominator != 1 or v3 == top:
            return None
        g2 = SemihomClass(0, 1, v3 - int(top))
    if g1 is None or g2 is None:
        return None
    d = Decomposition(g1, g2)
    if d.total() != v:
        return None
    return d


def is_wallcrossing_free(v: GammaVector) -> bool:
    return decompose(v) is None


def chi(c1: SemihomClass, c2: SemihomClass) -> int:
    return euler_pairing(c1.as_gamma(), c2.as_gamma())
