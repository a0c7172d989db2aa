"""Exact q-series on the quarter-integer exponent grid and the rank-one DT formula.

Exponents are stored as integers counting quarters, so ``q^(1/4)`` has key 1.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .wallcross import divisors


@dataclass(frozen=True)
class QSeries:
    """Truncated series: coefficients are exact for all keys below ``bound``."""

    coeffs: dict = field(default_factory=dict)
    bound: int = 0

    def __post_init__(self):
        bad = [k for k in self.coeffs if k >= self.bound]
        if bad:
            raise ValueError(f"keys {bad[:3]} not below truncation {self.bound}")

    def __getitem__(self, key: int):
        if key >= self.bound:
            raise IndexError(f"exponent {key}/4 beyond truncation {self.bound}/4")
        return self.coeffs.get(key, 0)

    def valuation(self) -> int:
        return min(k for k, c in self.coeffs.items() if c)

    def __mul__(self, other: "QSeries") -> "QSeries":
        # f = sum a_k q^k with a_k exact below N_f; the product is exact below
        # min(N_f + v_g, N_g + v_f)
        if not self.coeffs or not other.coeffs:
            return QSeries({}, min(self.bound, other.bound))
        bound = min(self.bound + other.valuation(), other.bound + self.valuation())
        out: dict = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                k = i + j
                if k < bound:
                    out[k] = out.get(k, 0) + a * b
        return QSeries({k: c for k, c in out.items() if c}, bound)

    def __pow__(self, n: int) -> "QSeries":
        out = self
        for _ in range(n - 1):
            out = out * self
        return out

    def scale(self, c) -> "QSeries":
        return QSeries({k: c * a for k, a in self.coeffs.items() if c * a}, self.bound)

    def shift(self, quarters: int) -> "QSeries":
        return QSeries({k + quarters: a for k, a in self.coeffs.items()},
                       self.bound + quarters)

    def inverse(self) -> "QSeries":
        """Inverse of a unit series (constant term nonzero, no negative keys)."""
        if any(k < 0 for k in self.coeffs) or not self.coeffs.get(0):
            raise ValueError("only series with nonzero constant term are invertible")
        c0 = Fraction(self.coeffs[0])
        if c0.denominator == 1 and abs(c0) == 1:
            c0 = int(c0)
        support = sorted(k for k in self.coeffs if k > 0)
        inv = [0] * self.bound
        inv[0] = 1 / c0 if not isinstance(c0, int) else c0
        for n in range(1, self.bound):
            acc = 0
            for k in support:
                if k > n:
                    break
                acc += self.coeffs[k] * inv[n - k]
            inv[n] = -acc * inv[0]
        return QSeries({k: c for k, c in enumerate(inv) if c}, self.bound)


def theta2(N: int) -> QSeries:
    """``sum_n q^((n+1/2)^2) = 2 q^(1/4) sum_{n>=0} q^(n^2+n)``, below ``q^(N/4)``."""
    if N < 4:
        raise ValueError("truncation must be at least 4 quarters")
    out = {}
    n = 0
    while (k := 1 + 4 * (n * n + n)) < N:
        out[k] = 2
        n += 1
    return QSeries(out, N)


def theta3(N: int) -> QSeries:
    if N < 4:
        raise ValueError("truncation must be at least 4 quarters")
    out = {0: 1}
    n = 1
    while (k := 4 * n * n) < N:
        out[k] = 2
        n += 1
    return QSeries(out, N)


@dataclass(frozen=True)
class ACoefficients:
    """``a(n)`` for ``-1 <= n < limit``."""

    values: dict
    limit: int

    def __call__(self, n) -> int:
        if isinstance(n, Fraction):
            if n.denominator != 1:
                raise ValueError(f"a(n) only defined for integer n, got {n}")
            n = int(n)
        if n < -1:
            return 0
        if n >= self.limit:
            raise IndexError(f"a({n}) needs a longer expansion (limit {self.limit})")
        return self.values.get(n, 0)

    def to_json(self) -> dict:
        return {str(n): self.values.get(n, 0) for n in range(-1, self.limit)}


def a_coefficients(N: int) -> ACoefficients:
    """Expand ``-16 / (theta2^4 theta3)`` with truncation ``N`` quarters.

    ``theta2^4 theta3 = 16 q U(q)`` with ``U`` a unit, so the expansion is
    ``-q^(-1) U^(-1)``.
    """
    if N < 8:
        raise ValueError("truncation must be at least 8 quarters")
    prod = theta2(N) ** 4 * theta3(N)
    assert prod.valuation() == 4 and prod[4] == 16
    assert all(k % 4 == 0 for k in prod.coeffs)
    # integer exponents from here on; U has leading coefficient 1
    unit = QSeries({k // 4 - 1: c // 16 for k, c in prod.coeffs.items()},
                   -(-prod.bound // 4) - 1)
    assert all(c % 16 == 0 for c in prod.coeffs.values())
    inv = unit.inverse()
    values = {n - 1: -c for n, c in inv.coeffs.items()}
    return ACoefficients(values, inv.bound - 1)


@functools.lru_cache(maxsize=None)
def _a_series(limit: int) -> ACoefficients:
    return a_coefficients(4 * (limit + 2))


def a_value(n: int) -> int:
    """``a(n)``, growing the cached expansion in powers of two."""
    if n < -1:
        return 0
    limit = 64
    while limit <= n:
        limit *= 2
    return _a_series(limit)(n)


def sigma2(n: int) -> int:
    return sum(d * d for d in divisors(n))


def n_beta_k(beta: int, k: int) -> int:
    if k < 1:
        raise ValueError("k must be positive")
    b2, b3 = beta * beta, beta ** 3
    if b2 % k or b3 % (k * k):
        return 0
    # gcd(x, 0) = x: every positive integer divides 0
    g = gcd(gcd(k, beta), gcd(b2 // k, b3 // (k * k)))
    return sigma2(g)


def in_formula_domain(beta: int, n: int) -> bool:
    return beta > 0 or (beta == 0 and n > 0)


def conj_dt(beta: int, n: int) -> Fraction:
    """Conjectural rank-one value ``C(beta, n)``, extended by zero where the
    moduli space is empty."""
    if beta == 0 and n == 0:
        raise ValueError("(beta, n) = (0, 0) is excluded")
    if not in_formula_domain(beta, n):
        return Fraction(0)
    disc = 4 * beta ** 3 - n * n
    # n(beta, k) != 0 needs k | beta^2, and k | n is required
    g = gcd(n, beta * beta)
    total = Fraction(0)
    for k in divisors(g):
        nb = n_beta_k(beta, k)
        if not nb:
            continue
        assert disc % (k * k) == 0, f"non-integral a-argument at beta={beta}, n={n}, k={k}"
        total += Fraction(nb, k) * a_value(disc // (k * k))
    return total if n % 2 == 0 else -total
