"""End-to-end checks with fixed tolerances and time budgets.

Each ``check_*`` function returns a :class:`CheckResult`; :func:`run_all` runs
them in order.  The same functions back ``abeldt verify`` and the acceptance
tests, so both always agree.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import spin
from .brute import enumerate_decompositions
from .fm_rank1 import CubicUnitSolution, CurveClass, fm_image, orbit_sweep, reconstruct_g
from .gamma import (IDENTITY, GammaVector, S, SL2Matrix, T, discriminant, euler_pairing,
                    matmul, sl2_act, sl2_matrix_rep)
from .lattice import RingElement, SaturatedLattice
from .qseries import a_coefficients, conj_dt
from .semihomog import SemihomClass, decompose, slope
from .walls import Circle, central_charge, on_wall, sample_wall, walls_for
from .wallcross import divisors

DEFAULT_SEED = 20240601


@dataclass
class CheckResult:
    name: str
    passed: bool
    expected: str
    actual: str
    seconds: float = 0.0
    budget: float | None = None
    details: list = field(default_factory=list)

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def line(self) -> str:
        return f"{self.status} {self.name}: expected {self.expected}; got {self.actual} ({self.seconds:.2f}s)"

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "expected": self.expected,
                "actual": self.actual, "seconds": round(self.seconds, 3),
                "budget": self.budget, "details": self.details[:20]}


def _timed(name: str, budget: float | None):
    """Decorator: time the body and fold the budget into ``passed``."""
    def wrap(fn: Callable[..., tuple]):
        def run(*args, **kwargs) -> CheckResult:
            t0 = time.perf_counter()
            ok, expected, actual, details = fn(*args, **kwargs)
            dt = time.perf_counter() - t0
            if budget is not None and dt >= budget:
                ok = False
                details = list(details) + [f"exceeded time budget {budget}s"]
            return CheckResult(name, ok, expected, actual, dt, budget, list(details))
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return wrap


def _fmt(xs) -> str:
    return "(" + ",".join(str(x) for x in xs) + ")"


# 1 ---------------------------------------------------------------------------

@_timed("a-coefficients", 1.0)
def check_a_coefficients():
    a = a_coefficients(800)
    want = (-1, 2, -8, 12, -39, 56)
    got = tuple(a(n) for n in (-1, 0, 3, 4, 7, 8))
    ok = got == want and a.limit == 199
    return ok, f"{_fmt(want)} with 199 terms", f"{_fmt(got)} with {a.limit} terms", []


# 2 ---------------------------------------------------------------------------

@_timed("rank-one anchor", None)
def check_rank_one_anchor():
    cc, s = CurveClass(1, 1), CubicUnitSolution(1, 2)
    c11 = conj_dt(1, 1)
    image = fm_image(cc, s)
    g = reconstruct_g(cc, s)  # asserts internally
    c737 = conj_dt(image.beta, image.n)
    ok = c11 == 8 and (image.beta, image.n) == (7, 37) and c737 == 8
    got = f"C(1,1)={c11}, image=({image.beta},{image.n}), C(image)={c737}, g={g.entries()}"
    return ok, "C(1,1)=8, image=(7,37), C(7,37)=8", got, []


# 3 ---------------------------------------------------------------------------

@_timed("beta=0 closed form", 5.0)
def check_beta_zero():
    bad = []
    for n in range(1, 51):
        want = Fraction((-1) ** (n - 1) * sum(k * k for k in divisors(n)), n)
        got = conj_dt(0, n)
        if got != want:
            bad.append(f"n={n}: {got} != {want}")
    return not bad, "50 exact matches", f"{50 - len(bad)} exact matches", bad


# 4 and 5 share one sweep -------------------------------------------------------

_SWEEP_CACHE: dict = {}


def _sweep():
    if "res" not in _SWEEP_CACHE:
        t0 = time.perf_counter()
        _SWEEP_CACHE["res"] = orbit_sweep(range(1, 7), range(-40, 41), 20)
        _SWEEP_CACHE["seconds"] = time.perf_counter() - t0
    return _SWEEP_CACHE["res"]


@_timed("orbit invariance sweep", 120.0)
def check_orbit_invariance():
    r = _sweep()
    ok = r.pairs > 0 and not r.disc_failures and not r.invariance_failures
    got = (f"{r.pairs} pairs, {len(r.disc_failures)} discriminant failures, "
           f"{r.invariance_checked} invariance checks, {len(r.invariance_failures)} failures")
    details = [f"disc ({c.beta},{c.n}) c={s.c} d={s.d}" for c, s in r.disc_failures]
    details += [f"C ({c.beta},{c.n}) c={s.c} d={s.d}" for c, s in r.invariance_failures]
    return ok, "0 discriminant failures, 0 invariance failures", got, details


@_timed("wall-crossing consistency", 120.0)
def check_wallcross_consistency():
    r = _sweep()
    ok = r.consistency_checked > 0 and not r.consistency_failures
    got = (f"{r.consistency_checked} checks ({r.wall_cases} across a wall), "
           f"{len(r.consistency_failures)} failures")
    details = [str(v.to_json()) for v in r.consistency_failures]
    return ok, "0 failures", got, details


# 6 ---------------------------------------------------------------------------

def _random_two_form(rng, lo=-3, hi=3) -> spin.SpinVector:
    return spin.SpinVector.from_terms(
        {s: rng.randint(lo, hi) for s in itertools.combinations(range(1, 7), 2)})


@_timed("spin solver", 60.0)
def check_spin(seed: int = DEFAULT_SEED):
    rng = random.Random(seed)
    bad = []
    dims = (spin.bilinear_nullspace_dim(), spin.quartic_nullspace_dim())
    if dims != (1, 1):
        bad.append(f"nullspace dimensions {dims}")
    top = spin.delta_spin(spin.SpinVector.from_terms({(): 1, (1, 2, 3, 4, 5, 6): 1}))
    if top != -1:
        bad.append(f"Delta(1 + x1..x6) = {top}")
    for i in range(100):
        r = rng.choice([x for x in range(-4, 5) if x])
        w = spin.exp_two_form(_random_two_form(rng)).scale(r)
        if spin.delta_spin(w) != 0:
            bad.append(f"null exponential case {i}")
        r1, r2 = rng.randint(-4, 4), rng.randint(-4, 4)
        e1 = spin.exp_two_form(_random_two_form(rng)).scale(r1)
        e2 = spin.exp_two_form(_random_two_form(rng)).scale(r2)
        if spin.delta_spin(e1 + e2) != -spin.pairing(e1, e2) ** 2:
            bad.append(f"two-exponential case {i}")
    for i in range(200):
        args = [rng.randint(-5, 5) for _ in range(8)]
        if spin.delta_spin(spin.embed_e3(*args)) != spin.e3_discriminant(*args):
            bad.append(f"product-of-curves point {args}")
        v = GammaVector(*(rng.randint(-9, 9) for _ in range(4)))
        if spin.delta_spin(spin.embed_ppav(v)) != discriminant(v):
            bad.append(f"diagonal point {list(v)}")
    got = f"dims={dims}, Delta(1+pt)={top}, {len(bad)} failures"
    return not bad, "dims=(1, 1), Delta(1+pt)=-1, 0 failures", got, bad


# 7 ---------------------------------------------------------------------------

T_MATRIX = [[1, 0, 0, 0], [1, 1, 0, 0], [1, 2, 1, 0], [1, 3, 3, 1]]
S_MATRIX = [[0, 0, 0, 1], [0, 0, -1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]]


def random_sl2(rng, length: int = 6, power: int = 3) -> SL2Matrix:
    g = IDENTITY
    for _ in range(rng.randint(0, length)):
        k = rng.randint(-power, power)
        g = g @ SL2Matrix(1, k, 0, 1) @ S
    return g


@_timed("SL2 representation", None)
def check_sl2(seed: int = DEFAULT_SEED):
    rng = random.Random(seed)
    bad = []
    if sl2_matrix_rep(T) != T_MATRIX:
        bad.append(f"rep(T) = {sl2_matrix_rep(T)}")
    if sl2_matrix_rep(S) != S_MATRIX:
        bad.append(f"rep(S) = {sl2_matrix_rep(S)}")
    for i in range(1000):
        g, h = random_sl2(rng), random_sl2(rng)
        v = GammaVector(*(rng.randint(-30, 30) for _ in range(4)))
        w = GammaVector(*(rng.randint(-30, 30) for _ in range(4)))
        if sl2_matrix_rep(g @ h) != matmul(sl2_matrix_rep(g), sl2_matrix_rep(h)):
            bad.append(f"homomorphism case {i}")
        if sl2_act(g @ h, v) != sl2_act(g, sl2_act(h, v)):
            bad.append(f"action case {i}")
        gv, gw = sl2_act(g, v), sl2_act(g, w)
        if discriminant(gv) != discriminant(v) or euler_pairing(gv, gw) != euler_pairing(v, w):
            bad.append(f"invariance case {i}")
    return not bad, "rep(T), rep(S) equal the generator matrices; 0 of 1000 failures", f"{len(bad)} failures", bad


# 8 ---------------------------------------------------------------------------

@_timed("decomposition oracle", 120.0)
def check_decomposition_oracle(box: int = 20):
    truth = enumerate_decompositions(box)
    bad, splits = [], 0
    for v in itertools.product(range(-box, box + 1), repeat=4):
        if not any(v):
            continue
        d = decompose(GammaVector(*v))
        oracle = truth.get(v, [])
        if len(oracle) > 1:
            bad.append(f"{v}: {len(oracle)} splittings")
        expect = oracle[0] if oracle else None
        if d != expect:
            bad.append(f"{v}: decompose={d} oracle={expect}")
        splits += d is not None
    got = f"{splits} splittable vectors, {len(bad)} disagreements"
    return not bad, f"{sum(map(len, truth.values()))} splittable vectors, 0 disagreements", got, bad


# 9 ---------------------------------------------------------------------------

def random_lattice(rng, m: int) -> SaturatedLattice:
    k = rng.randint(0, m)
    return SaturatedLattice.span(m, [[rng.randint(-3, 3) for _ in range(m)] for _ in range(k)])


def random_ring_element(rng, m: int, terms: int = 2) -> RingElement:
    d: dict = {}
    for _ in range(rng.randint(1, terms)):
        L = random_lattice(rng, m)
        d[L] = d.get(L, 0) + Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return RingElement.from_dict(m, d)


@_timed("ring axioms", None)
def check_ring(seed: int = DEFAULT_SEED):
    rng = random.Random(seed)
    bad, nontrivial = [], 0
    for i in range(500):
        m = rng.randint(1, 6)
        x, y, z = (random_ring_element(rng, m) for _ in range(3))
        if x * y != y * x:
            bad.append(f"commutativity case {i}")
        lhs, rhs = (x * y) * z, x * (y * z)
        if lhs != rhs:
            bad.append(f"associativity case {i}")
        nontrivial += bool(lhs.terms)
        if x * RingElement.one(m) != x:
            bad.append(f"unit case {i}")
    got = f"{len(bad)} failures ({nontrivial} nonzero triple products)"
    return not bad, "0 failures on 500 triples", got, bad


# 10 --------------------------------------------------------------------------

WALL_SAMPLE_CLASSES = (
    (2, 1, 1, 1), (1, 0, 0, -1), (0, -9, -9, -7), (1, 0, -2, -6), (2, 0, 0, 1),
)


def wall_classes(count: int = 20) -> list:
    """The fixed classes above, then sums of small semihomogeneous pairs."""
    out = [GammaVector(*v) for v in WALL_SAMPLE_CLASSES]
    summands = [SemihomClass(p, q, r) for p in (1, 2, 3) for q in range(-3, 4)
                for r in (1, -1, 2) if math.gcd(p, q) == 1] + [SemihomClass(0, 1, r) for r in (1, -2)]
    k = 0
    while len(out) < count:
        g1, g2 = summands[k % len(summands)], summands[(7 * k + 3) % len(summands)]
        k += 1
        v = g1.as_gamma() + g2.as_gamma()
        if slope(g1) != slope(g2) and not v.is_zero() and v not in out:
            out.append(v)
    return out


def _offset(p, wall, h: float):
    if isinstance(wall, Circle):
        cb, ca = float(wall.center_beta), wall.center_alpha
        db, da = p.beta - cb, p.alpha - ca
        rho = math.hypot(db, da)
        # outward unless that leaves the upper half plane
        k = 1 + h / rho if ca + (1 + h / rho) * da > 0 else 1 - h / rho
        return type(p)(cb + k * db, ca + k * da)
    # unit normal pointing upward
    return type(p)(p.beta - wall.sign * h * math.sqrt(3) / 2, p.alpha + h / 2)


@_timed("wall geometry", None)
def check_walls(samples: int = 64, tol: float = 1e-9):
    bad = []
    classes = wall_classes(20)
    for v in classes:
        d = decompose(v)
        if d is None:
            bad.append(f"{list(v)} is not decomposable")
            continue
        (wall,) = walls_for(v)
        t1 = slope(d.gamma1).value
        if isinstance(wall, Circle):
            t2 = slope(d.gamma2).value
            gap = t2 - t1
            sym = (wall.center_beta == (t1 + t2) / 2 and wall.radius_sq == gap * gap / 3
                   and wall.center_alpha_sq == gap * gap / 12
                   and all((t - wall.center_beta) ** 2 + wall.center_alpha_sq == wall.radius_sq
                           for t in (t1, t2)))
            if not sym:
                bad.append(f"{list(v)}: circle parameters {wall}")
        elif wall.intercept != t1:
            bad.append(f"{list(v)}: line intercept {wall.intercept}")
        pts = sample_wall(wall, samples)
        on = sum(on_wall(p, v, tol) for p in pts)
        off = sum(on_wall(_offset(p, wall, 0.1), v, tol) for p in pts)
        if on != samples or off:
            bad.append(f"{list(v)}: {on}/{samples} on-wall accepted, {off} offsets accepted")
    got = f"{len(classes)} classes, {len(bad)} failures"
    return not bad, "20 classes, 0 failures", got, bad


CHECKS = (
    check_a_coefficients, check_rank_one_anchor, check_beta_zero, check_orbit_invariance,
    check_wallcross_consistency, check_spin, check_sl2, check_decomposition_oracle,
    check_ring, check_walls,
)


def run_all(seed: int = DEFAULT_SEED, skip: tuple = ()) -> list[CheckResult]:
    out = []
    for chk in CHECKS:
        if chk.__name__ in skip:
            continue
        kwargs = {"seed": seed} if chk in (check_spin, check_sl2, check_ring) else {}
        out.append(chk(**kwargs))
    return out
