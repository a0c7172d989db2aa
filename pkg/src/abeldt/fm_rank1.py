"""Fourier-Mukai orbits of rank-one classes ``(1, 0, -beta, -n)``."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .gamma import GammaVector, SL2Matrix, discriminant, sl2_act
from .qseries import conj_dt, in_formula_domain
from .semihomog import Decomposition, decompose, slope
from .wallcross import WallCrossCase, NO_WALL, classify, wall_crossing_term

DEFAULT_BOUND = 20


@dataclass(frozen=True)
class CurveClass:
    beta: int
    n: int

    def as_gamma(self) -> GammaVector:
        return GammaVector(1, 0, -self.beta, -self.n)

    @property
    def disc(self) -> int:
        return 4 * self.beta ** 3 - self.n ** 2


@dataclass(frozen=True)
class CubicUnitSolution:
    c: int
    d: int

    def residual(self, cc: CurveClass) -> int:
        c, d = self.c, self.d
        return d ** 3 - 3 * cc.beta * c * c * d - cc.n * c ** 3 - 1


def cubic_unit_solutions(cc: CurveClass, bound: int = DEFAULT_BOUND) -> list[CubicUnitSolution]:
    """All ``(c, d)`` in the box ``|c|, |d| <= bound`` with
    ``d^3 - 3 beta c^2 d - n c^3 = 1``."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    beta, n = cc.beta, cc.n
    out = []
    for c in range(-bound, bound + 1):
        b3 = 3 * beta * c * c
        nc3 = n * c ** 3 + 1
        for d in range(-bound, bound + 1):
            if d * (d * d - b3) == nc3:
                out.append(CubicUnitSolution(c, d))
    return out


def _check(cc: CurveClass, s: CubicUnitSolution):
    if s.residual(cc) != 0:
        raise ValueError(f"{s} does not solve the cubic unit equation for {cc}")


def fm_image(cc: CurveClass, s: CubicUnitSolution) -> CurveClass:
    _check(cc, s)
    b, n, c, d = cc.beta, cc.n, s.c, s.d
    return CurveClass(
        d * d * b + n * c * d + b * b * c * c,
        6 * b * b * d * d * c + 6 * c * c * d * b * n + n + 2 * c ** 3 * n * n
        - 2 * c ** 3 * b ** 3,
    )


def reconstruct_g(cc: CurveClass, s: CubicUnitSolution) -> SL2Matrix:
    """The autoequivalence ``g = (a b; c d)`` carrying ``cc`` to its image."""
    _check(cc, s)
    b, n, c, d = cc.beta, cc.n, s.c, s.d
    g = SL2Matrix(d * d - b * c * c, n * c * c + 2 * b * c * d, c, d)
    image = fm_image(cc, s)
    assert sl2_act(g, cc.as_gamma()) == image.as_gamma(), "reconstructed g is wrong"
    return g


@dataclass
class QuestReport:
    curve: CurveClass
    bound: int
    decomposition: Decomposition
    solutions: list = field(default_factory=list)
    open_interval_hits: list = field(default_factory=list)
    boundary_hits: list = field(default_factory=list)
    boundary_violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.open_interval_hits and not self.boundary_violations

    def to_json(self) -> dict:
        pair = lambda s: [s.c, s.d]
        return {
            "beta": self.curve.beta, "n": self.curve.n, "bound": self.bound,
            "decomposition": self.decomposition.to_json(),
            "solutions": [pair(s) for s in self.solutions],
            "open_interval_hits": [pair(s) for s in self.open_interval_hits],
            "boundary_hits": [
                {"c": s.c, "d": s.d, "image": [im.beta, im.n]}
                for s, im in self.boundary_hits
            ],
            "boundary_violations": [pair(s) for s in self.boundary_violations],
            "ok": self.ok,
        }


def check_quest(cc: CurveClass, bound: int = DEFAULT_BOUND) -> QuestReport:
    """Finite-box search for solutions with ``-d/c`` strictly between the slopes."""
    if not (cc.beta != 0 or cc.n > 0):
        raise ValueError("requires beta != 0 or n > 0")
    dec = decompose(cc.as_gamma())
    if dec is None:
        raise ValueError(f"{cc.as_gamma()} is not decomposable")
    lo, hi = slope(dec.gamma1), slope(dec.gamma2)
    report = QuestReport(cc, bound, dec)
    for s in cubic_unit_solutions(cc, bound):
        report.solutions.append(s)
        if s.c == 0:
            continue
        x = Fraction(-s.d, s.c)
        below_hi = hi.is_infinite or x < hi.value
        if lo.value < x and below_hi:
            report.open_interval_hits.append(s)
        if lo.value <= x and below_hi:
            image = fm_image(cc, s)
            report.boundary_hits.append((s, image))
            if not (image.beta == 0 and image.n <= 0):
                report.boundary_violations.append(s)
    return report


@dataclass(frozen=True)
class Verdict:
    curve: CurveClass
    solution: CubicUnitSolution
    image: CurveClass
    case: WallCrossCase
    decomposition: Optional[Decomposition]
    lhs: Fraction
    rhs: Fraction

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {
            "solution": [self.solution.c, self.solution.d],
            "image": [self.image.beta, self.image.n],
            "case": self.case.to_json(),
            "decomposition": None if self.decomposition is None else self.decomposition.to_json(),
            "C_difference": str(self.lhs), "expected": str(self.rhs), "ok": self.ok,
        }


def wallcross_consistency(cc: CurveClass, s: CubicUnitSolution) -> Verdict:
    """Compare ``C(beta, n) - C(beta', n')`` with the predicted jump.

    Classes without a decomposition have no wall, so the jump must be zero.
    """
    g = reconstruct_g(cc, s)
    image = fm_image(cc, s)
    dec = decompose(cc.as_gamma())
    case = NO_WALL if dec is None else classify(g, dec)
    rhs = wall_crossing_term(dec) if case.wall else Fraction(0)
    lhs = conj_dt(cc.beta, cc.n) - conj_dt(image.beta, image.n)
    return Verdict(cc, s, image, case, dec, lhs, rhs)


@dataclass
class SweepResult:
    pairs: int = 0
    disc_failures: list = field(default_factory=list)
    invariance_checked: int = 0
    invariance_failures: list = field(default_factory=list)
    consistency_checked: int = 0
    wall_cases: int = 0
    consistency_failures: list = field(default_factory=list)


def orbit_sweep(betas=range(1, 7), ns=range(-40, 41), bound: int = DEFAULT_BOUND) -> SweepResult:
    """Discriminant and ``C`` invariance plus wall-crossing consistency over a grid."""
    res = SweepResult()
    for beta in betas:
        for n in ns:
            cc = CurveClass(beta, n)
            decomposable = cc.disc < 0 and decompose(cc.as_gamma()) is not None
            for s in cubic_unit_solutions(cc, bound):
                res.pairs += 1
                image = fm_image(cc, s)
                if image.disc != cc.disc or discriminant(image.as_gamma()) != cc.disc:
                    res.disc_failures.append((cc, s))
                if in_formula_domain(beta, n) and in_formula_domain(image.beta, image.n):
                    res.invariance_checked += 1
                    if conj_dt(beta, n) != conj_dt(image.beta, image.n):
                        res.invariance_failures.append((cc, s))
                if decomposable:
                    v = wallcross_consistency(cc, s)
                    res.consistency_checked += 1
                    res.wall_cases += v.case.wall
                    if not v.ok:
                        res.consistency_failures.append(v)
    return res
