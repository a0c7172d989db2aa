"""The ring Q[A] modelled on saturated sublattices of Z^m.

A connected abelian subvariety ``B`` of a split torus corresponds to a
saturated lattice ``L``; the product ``eps_L1 * eps_L2`` is ``t * eps_{L1 n L2}``
when the intersection has the expected rank, where ``t`` is the order of the
torsion of ``Z^m / (L1 + L2)``, and zero otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod


# -- integer normal forms ----------------------------------------------------

def hnf_rows(rows: list[list[int]]) -> list[list[int]]:
    """Row Hermite normal form: echelon, positive pivots, entries above each
    pivot reduced into ``[0, pivot)``, zero rows dropped."""
    A = [list(r) for r in rows]
    if not A:
        return []
    ncols = len(A[0])
    out: list[list[int]] = []
    for col in range(ncols):
        live = [r for r in A if r[col]]
        if not live:
            continue
        # Euclid on the column until a single nonzero row remains
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            piv = live[0]
            for r in live[1:]:
                q = r[col] // piv[col]
                for k in range(col, ncols):
                    r[k] -= q * piv[k]
            live = [r for r in live if r[col]]
        piv = live[0]
        A = [r for r in A if r is not piv]
        if piv[col] < 0:
            piv = [-x for x in piv]
        for r in out:
            q = r[col] // piv[col]
            if q:
                for k in range(col, ncols):
                    r[k] -= q * piv[k]
        out.append(piv)
    return out


def smith_invariants(rows: list[list[int]]) -> list[int]:
    """Nonzero invariant factors ``d1 | d2 | ...`` of an integer matrix."""
    A = [list(r) for r in rows if any(r)]
    out = []
    while A:
        ncols = len(A[0])
        # move a smallest nonzero entry to (0, 0)
        _, i, j = min((abs(x), i, j) for i, r in enumerate(A) for j, x in enumerate(r) if x)
        A[0], A[i] = A[i], A[0]
        for r in A:
            r[0], r[j] = r[j], r[0]
        p = A[0][0]
        dirty = False
        for r in A[1:]:
            q = r[0] // p
            if q:
                for k in range(ncols):
                    r[k] -= q * A[0][k]
            dirty |= r[0] != 0
        for k in range(1, ncols):
            q = A[0][k] // p
            if q:
                for r in A:
                    r[k] -= q * r[0]
            dirty |= A[0][k] != 0
        if dirty:
            continue
        # pivot isolated; enforce divisibility into the remaining block
        bad = next(((i, k) for i in range(1, len(A)) for k in range(1, ncols)
                    if A[i][k] % p), None)
        if bad is not None:
            i, _ = bad
            for k in range(ncols):
                A[0][k] += A[i][k]
            continue
        out.append(abs(p))
        A = [r[1:] for r in A[1:] if any(r[1:])]
        if A and not A[0]:
            A = []
    return out


def integer_kernel(rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Z-basis of ``{x in Z^ncols : A x = 0}`` via unimodular column operations."""
    # work on the augmented transpose [A^T | I]; row ops there are column ops on A
    aug = [[rows[i][j] for i in range(len(rows))] + [int(j == k) for k in range(ncols)]
           for j in range(ncols)]
    nr = len(rows)
    for col in range(nr):
        live = [r for r in aug if r[col] and not any(r[:col])]
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            piv = live[0]
            for r in live[1:]:
                q = r[col] // piv[col]
                for k in range(len(r)):
                    r[k] -= q * piv[k]
            live = [r for r in live if r[col]]
    return [r[nr:] for r in aug if not any(r[:nr])]


# -- saturated lattices -------------------------------------------------------

@dataclass(frozen=True)
class SaturatedLattice:
    """Saturated sublattice of ``Z^m``; ``basis`` holds the HNF rows."""

    m: int
    basis: tuple

    @property
    def rank(self) -> int:
        return len(self.basis)

    @classmethod
    def span(cls, m: int, vectors) -> "SaturatedLattice":
        """Saturation of the span of ``vectors`` (lists of length ``m``)."""
        vecs = [list(v) for v in vectors]
        if any(len(v) != m for v in vecs):
            raise ValueError("ambient rank mismatch")
        # (V tensor Q) n Z^m = kernel of the kernel of V
        perp = integer_kernel(vecs, m) if vecs else [[int(i == j) for j in range(m)]
                                                     for i in range(m)]
        sat = integer_kernel(perp, m) if perp else [[int(i == j) for j in range(m)]
                                                    for i in range(m)]
        return cls(m, tuple(tuple(r) for r in hnf_rows(sat)))

    @classmethod
    def full(cls, m: int) -> "SaturatedLattice":
        return cls(m, tuple(tuple(int(i == j) for j in range(m)) for i in range(m)))

    @classmethod
    def zero(cls, m: int) -> "SaturatedLattice":
        return cls(m, ())

    def is_saturated(self) -> bool:
        return all(d == 1 for d in smith_invariants([list(b) for b in self.basis]))

    def to_json(self) -> list:
        return [list(b) for b in self.basis]


def intersect(L1: SaturatedLattice, L2: SaturatedLattice) -> SaturatedLattice:
    if L1.m != L2.m:
        raise ValueError("ambient rank mismatch")
    m, k1 = L1.m, L1.rank
    if k1 == 0 or L2.rank == 0:
        return SaturatedLattice.zero(m)
    # x B1 = y B2  <=>  (x, -y) in ker [B1; B2]^T
    stacked = [list(b) for b in L1.basis] + [[-x for x in b] for b in L2.basis]
    cols = [[stacked[i][j] for i in range(len(stacked))] for j in range(m)]
    ker = integer_kernel(cols, len(stacked))
    vecs = [[sum(x[i] * L1.basis[i][j] for i in range(k1)) for j in range(m)] for x in ker]
    return SaturatedLattice(m, tuple(tuple(r) for r in hnf_rows(vecs)))


def sum_torsion(L1: SaturatedLattice, L2: SaturatedLattice) -> int:
    """Order of the torsion subgroup of ``Z^m / (L1 + L2)``."""
    return prod(smith_invariants([list(b) for b in L1.basis + L2.basis]))


# -- ring elements --------------------------------------------------------------

@dataclass(frozen=True)
class RingElement:
    m: int
    terms: tuple  # sorted ((lattice basis, Fraction), ...), no zero coefficients

    @classmethod
    def from_dict(cls, m: int, d: dict) -> "RingElement":
        items = sorted(((L.basis, Fraction(c)) for L, c in d.items() if c))
        return cls(m, tuple(items))

    @classmethod
    def eps(cls, L: SaturatedLattice, coeff=1) -> "RingElement":
        return cls.from_dict(L.m, {L: coeff})

    @classmethod
    def one(cls, m: int) -> "RingElement":
        return cls.eps(SaturatedLattice.full(m))

    def as_dict(self) -> dict:
        return {SaturatedLattice(self.m, b): c for b, c in self.terms}

    def __add__(self, other: "RingElement") -> "RingElement":
        if self.m != other.m:
            raise ValueError("ambient rank mismatch")
        d = self.as_dict()
        for L, c in other.as_dict().items():
            d[L] = d.get(L, 0) + c
        return RingElement.from_dict(self.m, d)

    def __mul__(self, other: "RingElement") -> "RingElement":
        return ring_multiply(self, other)

    def to_json(self) -> list:
        return [[str(c), [list(b) for b in basis]] for basis, c in self.terms]


def eps_product(L1: SaturatedLattice, L2: SaturatedLattice) -> RingElement:
    if L1.m != L2.m:
        raise ValueError("ambient rank mismatch")
    m = L1.m
    meet = intersect(L1, L2)
    if meet.rank != L1.rank + L2.rank - m:
        return RingElement(m, ())
    return RingElement.eps(meet, sum_torsion(L1, L2))


def ring_multiply(x: RingElement, y: RingElement) -> RingElement:
    if x.m != y.m:
        raise ValueError("ambient rank mismatch")
    out: dict = {}
    for L1, c1 in x.as_dict().items():
        for L2, c2 in y.as_dict().items():
            for L, c in eps_product(L1, L2).as_dict().items():
                out[L] = out.get(L, 0) + c1 * c2 * c
    return RingElement.from_dict(x.m, out)
