"""Even half-spin representation of so(12) on the even exterior algebra of Q^6,
its invariant bilinear form and its invariant quartic.

Basis monomials ``x_I`` are indexed by even subsets ``I`` of ``{1..6}``, stored
as bitmasks (bit ``i-1`` for ``x_i``) and ordered by size, then
lexicographically.  Sign conventions: ``x_i`` wedges in from the left and
``d/dx_i`` is a left odd derivation, both picking up ``(-1)^k`` where ``k``
counts the indices of ``I`` smaller than ``i``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Sequence

from .gamma import GammaVector
from .linalg import nullspace

DIM_U = 6
FULL = (1 << DIM_U) - 1

EVEN_SUBSETS: tuple[tuple[int, ...], ...] = tuple(
    c for k in (0, 2, 4, 6) for c in combinations(range(1, DIM_U + 1), k))
MASKS: tuple[int, ...] = tuple(sum(1 << (i - 1) for i in s) for s in EVEN_SUBSETS)
INDEX = {m: k for k, m in enumerate(MASKS)}
NBASIS = len(MASKS)


def subset_index(subset: Sequence[int]) -> int:
    return INDEX[sum(1 << (i - 1) for i in subset)]


def _below(mask: int, i: int) -> int:
    return bin(mask & ((1 << (i - 1)) - 1)).count("1")


def wedge(i: int, mask: int):
    """``x_i ^ x_I`` as ``(sign, mask)``, or None."""
    bit = 1 << (i - 1)
    if mask & bit:
        return None
    return (-1) ** _below(mask, i), mask | bit


def interior(i: int, mask: int):
    """``d/dx_i x_I`` as ``(sign, mask)``, or None."""
    bit = 1 << (i - 1)
    if not mask & bit:
        return None
    return (-1) ** _below(mask, i), mask ^ bit


@dataclass(frozen=True)
class LieGenerator:
    kind: str  # "create" | "mixed" | "annihilate"
    i: int
    j: int

    def __post_init__(self):
        if self.kind not in ("create", "mixed", "annihilate"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if not 1 <= self.i < self.j <= DIM_U:
            raise ValueError("need 1 <= i < j <= 6")

    def _ops(self):
        if self.kind == "create":
            return ((wedge, self.j), (wedge, self.i))
        if self.kind == "mixed":
            # the -delta_ij/2 shift vanishes since i < j
            return ((interior, self.j), (wedge, self.i))
        return ((interior, self.j), (interior, self.i))

    def on_mask(self, mask: int):
        sign = 1
        for op, k in self._ops():
            hit = op(k, mask)
            if hit is None:
                return None
            s, mask = hit
            sign *= s
        return sign, mask

    @functools.cached_property
    def matrix(self) -> dict[int, tuple[int, int]]:
        """Sparse action: source basis index -> (sign, target basis index)."""
        out = {}
        for col, mask in enumerate(MASKS):
            hit = self.on_mask(mask)
            if hit is not None:
                out[col] = (hit[0], INDEX[hit[1]])
        return out


GENERATORS: tuple[LieGenerator, ...] = tuple(
    LieGenerator(kind, i, j)
    for kind in ("create", "mixed", "annihilate")
    for i, j in combinations(range(1, DIM_U + 1), 2))


@dataclass(frozen=True)
class SpinVector:
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != NBASIS:
            raise ValueError(f"expected {NBASIS} coordinates")

    @classmethod
    def zero(cls) -> "SpinVector":
        return cls((Fraction(0),) * NBASIS)

    @classmethod
    def from_terms(cls, terms: dict) -> "SpinVector":
        """Build from ``{subset tuple: coefficient}``."""
        coords = [Fraction(0)] * NBASIS
        for subset, c in terms.items():
            coords[subset_index(subset)] += Fraction(c)
        return cls(tuple(coords))

    def __add__(self, other: "SpinVector") -> "SpinVector":
        return SpinVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def scale(self, k) -> "SpinVector":
        return SpinVector(tuple(k * a for a in self.coords))

    def wedge(self, other: "SpinVector") -> "SpinVector":
        """Exterior product (even elements commute)."""
        out = [Fraction(0)] * NBASIS
        for a, ma in zip(self.coords, MASKS):
            if not a:
                continue
            for b, mb in zip(other.coords, MASKS):
                if not b or ma & mb:
                    continue
                sign, mask = 1, mb
                for i in reversed([k for k in range(1, DIM_U + 1) if ma >> (k - 1) & 1]):
                    s, mask = wedge(i, mask)
                    sign *= s
                out[INDEX[mask]] += sign * a * b
        return SpinVector(tuple(out))


def apply_generator(g: LieGenerator, w: SpinVector) -> SpinVector:
    out = [Fraction(0)] * NBASIS
    for col, (sign, row) in g.matrix.items():
        if w.coords[col]:
            out[row] += sign * w.coords[col]
    return SpinVector(tuple(out))


def exp_two_form(omega: SpinVector) -> SpinVector:
    """``e^omega`` for ``omega`` in degree two (the series stops at omega^3/6)."""
    if any(c and len(s) != 2 for c, s in zip(omega.coords, EVEN_SUBSETS)):
        raise ValueError("omega must be homogeneous of degree two")
    one = SpinVector.from_terms({(): 1})
    total, power = one, one
    for k in range(1, 4):
        power = power.wedge(omega).scale(Fraction(1, k))
        total = total + power
    return total


# -- invariant bilinear form ------------------------------------------------

def _bilinear_rows():
    n = NBASIS
    for g in GENERATORS:
        mat = g.matrix
        # B(gx_J, x_K) + B(x_J, gx_K) = 0 for all J, K
        for J in range(n):
            for K in range(n):
                row = {}
                if J in mat:
                    s, I = mat[J]
                    row[I * n + K] = row.get(I * n + K, 0) + s
                if K in mat:
                    s, I = mat[K]
                    row[J * n + I] = row.get(J * n + I, 0) + s
                row = {k: v for k, v in row.items() if v}
                if row:
                    yield row


class SolverError(RuntimeError):
    pass


@functools.lru_cache(maxsize=None)
def _bilinear_solution() -> tuple[tuple[Fraction, ...], ...]:
    n = NBASIS
    basis = nullspace(_bilinear_rows(), n * n)
    if len(basis) != 1:
        raise SolverError(f"invariant bilinear forms: nullspace dimension {len(basis)}")
    vec = basis[0]
    norm = vec.get(INDEX[0] * n + INDEX[FULL], 0)
    if not norm:
        raise SolverError("invariant form does not pair 1 with the top class")
    return tuple(tuple(vec.get(I * n + K, Fraction(0)) / norm for K in range(n))
                 for I in range(n))


def bilinear_nullspace_dim() -> int:
    n = NBASIS
    return len(nullspace(_bilinear_rows(), n * n))


def invariant_bilinear() -> tuple[tuple[Fraction, ...], ...]:
    """32x32 Gram matrix normalized by ``beta(1, x_1...x_6) = 1``."""
    return _bilinear_solution()


def pairing(w1: SpinVector, w2: SpinVector) -> Fraction:
    B = invariant_bilinear()
    total = Fraction(0)
    for I, a in enumerate(w1.coords):
        if a:
            row = B[I]
            for K, b in enumerate(w2.coords):
                if b and row[K]:
                    total += a * b * row[K]
    return total


# -- invariant quartic --------------------------------------------------------

def admissible_monomials() -> list[tuple[int, ...]]:
    """Sorted 4-tuples of basis indices covering every ``i`` exactly twice."""
    out = []
    for quad in combinations_with_replacement(range(NBASIS), 4):
        cover = [0] * DIM_U
        for k in quad:
            m = MASKS[k]
            for i in range(DIM_U):
                cover[i] += m >> i & 1
        if all(c == 2 for c in cover):
            out.append(quad)
    return out


def lie_derivative(g: LieGenerator, poly: dict) -> dict:
    """Action of ``g`` on a polynomial ``{sorted index tuple: coeff}`` in the
    coordinates ``a_I``: ``sum_{I,J} M_IJ a_J dP/da_I``."""
    inverse = {}
    for J, (s, I) in g.matrix.items():
        inverse.setdefault(I, []).append((s, J))
    out: dict = {}
    for mono, coeff in poly.items():
        if not coeff:
            continue
        for pos, I in enumerate(mono):
            if pos and mono[pos - 1] == I:
                continue
            mult = mono.count(I)
            rest = list(mono)
            rest.remove(I)
            for s, J in inverse.get(I, ()):
                key = tuple(sorted(rest + [J]))
                out[key] = out.get(key, 0) + s * mult * coeff
    return {k: v for k, v in out.items() if v}


@dataclass(frozen=True)
class QuarticInvariant:
    coeffs: dict  # sorted index 4-tuple -> Fraction

    def __call__(self, w: SpinVector) -> Fraction:
        a = w.coords
        total = Fraction(0)
        for (i, j, k, l), c in self.coeffs.items():
            if a[i] and a[j] and a[k] and a[l]:
                total += c * a[i] * a[j] * a[k] * a[l]
        return total

    def to_json(self) -> list:
        label = lambda k: "".join(map(str, EVEN_SUBSETS[k])) or "0"
        return [{"subsets": [label(k) for k in mono], "coeff": str(c)}
                for mono, c in sorted(self.coeffs.items())]


def _quartic_system():
    monos = admissible_monomials()
    col = {m: k for k, m in enumerate(monos)}
    # row per (generator, output monomial), accumulated over unknowns
    rows: dict = {}
    for g in GENERATORS:
        for m in monos:
            for out_mono, v in lie_derivative(g, {m: 1}).items():
                row = rows.setdefault((g, out_mono), {})
                row[col[m]] = row.get(col[m], 0) + v
    return monos, [r for r in rows.values() if any(r.values())]


def quartic_nullspace_dim() -> int:
    monos, rows = _quartic_system()
    return len(nullspace(rows, len(monos)))


@functools.lru_cache(maxsize=None)
def solve_quartic() -> QuarticInvariant:
    monos, rows = _quartic_system()
    basis = nullspace(rows, len(monos))
    if len(basis) != 1:
        raise SolverError(f"invariant quartics: nullspace dimension {len(basis)}")
    raw = QuarticInvariant({monos[k]: v for k, v in basis[0].items()})
    norm = raw(SpinVector.from_terms({(): 1, tuple(range(1, DIM_U + 1)): 1}))
    if not norm:
        raise SolverError("quartic vanishes on 1 + x_1...x_6")
    return QuarticInvariant({m: -v / norm for m, v in raw.coeffs.items()})


def delta_spin(w: SpinVector) -> Fraction:
    return solve_quartic()(w)


# -- embeddings of algebraic classes -------------------------------------------

L1, L2, L3 = (1, 2), (3, 4), (5, 6)


def embed_e3(r, b1, b2, b3, d1, d2, d3, n) -> SpinVector:
    """Class ``(r, sum b_i L_i, d1 L2L3 + d2 L1L3 + d3 L1L2, n)`` on E1 x E2 x E3."""
    return SpinVector.from_terms({
        (): r, L1: b1, L2: b2, L3: b3,
        L2 + L3: d1, L1 + L3: d2, L1 + L2: d3,
        L1 + L2 + L3: n,
    })


def e3_discriminant(r, b1, b2, b3, d1, d2, d3, n) -> int:
    return (-n * n * r * r - 4 * (r * d1 * d2 * d3 + b1 * b2 * b3 * n)
            - (b1 * b1 * d1 * d1 + b2 * b2 * d2 * d2 + b3 * b3 * d3 * d3)
            + 2 * b1 * b2 * d1 * d2 + 2 * b1 * b3 * d1 * d3 + 2 * b2 * b3 * d2 * d3
            + 2 * r * n * (b1 * d1 + b2 * d2 + b3 * d3))


def embed_ppav(v: GammaVector) -> SpinVector:
    """Diagonal embedding ``H = L1 + L2 + L3``."""
    return embed_e3(v.v0, v.v1, v.v1, v.v1, v.v2, v.v2, v.v2, v.v3)
