"""Sparse exact nullspace over Q.

Rows are dicts ``column -> Fraction``.  Elimination keeps every pivot row
monic with all entries to the right of its pivot; the final back-substitution
produces a reduced echelon form from which the nullspace is read off.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable


class SparseEchelon:
    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, dict[int, Fraction]] = {}

    def add_row(self, row: dict) -> bool:
        """Reduce ``row`` against the current pivots; return True if it was new."""
        row = {c: Fraction(v) for c, v in row.items() if v}
        while row:
            col = min(row)
            piv = self.pivots.get(col)
            if piv is None:
                inv = 1 / row[col]
                self.pivots[col] = {c: v * inv for c, v in row.items()}
                return True
            f = row[col]
            for c, v in piv.items():
                nv = row.get(c, 0) - f * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        return False

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def nullspace(self) -> list[dict[int, Fraction]]:
        # back-substitute so each pivot row has zeros in all other pivot columns
        reduced: dict[int, dict[int, Fraction]] = {}
        for col in sorted(self.pivots, reverse=True):
            row = dict(self.pivots[col])
            for c in [c for c in row if c != col and c in reduced]:
                f = row.pop(c)
                for c2, v in reduced[c].items():
                    if c2 == c:
                        continue
                    nv = row.get(c2, 0) - f * v
                    if nv:
                        row[c2] = nv
                    else:
                        row.pop(c2, None)
            reduced[col] = row
        basis = []
        for free in range(self.ncols):
            if free in reduced:
                continue
            vec = {free: Fraction(1)}
            for col, row in reduced.items():
                v = row.get(free)
                if v:
                    vec[col] = -v
            basis.append(vec)
        return basis


def nullspace(rows: Iterable[dict], ncols: int) -> list[dict[int, Fraction]]:
    ech = SparseEchelon(ncols)
    for r in rows:
        ech.add_row(r)
    return ech.nullspace()
