"""``abeldt`` command line.  Every subcommand wraps a single library call."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import spin
from .fm_rank1 import CurveClass, check_quest, cubic_unit_solutions, fm_image, reconstruct_g, \
    wallcross_consistency
from .gamma import GammaVector, SL2Matrix, discriminant, euler_pairing, sl2_act
from .lattice import RingElement, SaturatedLattice
from .qseries import a_coefficients, conj_dt
from .semihomog import decompose
from .verify import DEFAULT_SEED, check_ring, check_sl2, check_spin, run_all
from .wallcross import wall_crossing_term
from .walls import Viewport, emit_walls


class UsageError(Exception):
    pass


def rat(x) -> str:
    """Exact rendering: ``p/q``, integers without a denominator."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _ints(text: str, n: int, what: str) -> list[int]:
    try:
        parts = [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"{what} must be {n} comma-separated integers, got {text!r}")
    if len(parts) != n:
        raise UsageError(f"{what} must have {n} entries, got {len(parts)}")
    return parts


def _vec(args, name="v") -> GammaVector:
    text = getattr(args, name)
    if text is None:
        raise UsageError(f"--{name} is required")
    return GammaVector(*_ints(text, 4, f"--{name}"))


def _need(args, *names):
    for n in names:
        if getattr(args, n) is None:
            raise UsageError(f"--{n} is required")


def _out(args, doc, text: str):
    print(json.dumps(doc, sort_keys=True) if args.json else text)


# -- subcommands ------------------------------------------------------------------

def cmd_pair(args):
    x = euler_pairing(_vec(args), _vec(args, "w"))
    _out(args, {"chi": x}, rat(x))


def cmd_disc(args):
    x = discriminant(_vec(args))
    _out(args, {"disc": x}, rat(x))


def cmd_act(args):
    if args.g is None:
        raise UsageError("--g a,b,c,d is required")
    try:
        g = SL2Matrix(*_ints(args.g, 4, "--g"))
    except ValueError as e:
        raise UsageError(str(e))
    w = sl2_act(g, _vec(args))
    _out(args, w.to_json(), ",".join(map(rat, w)))


def _decompose(args):
    v = _vec(args)
    if v.is_zero():
        raise UsageError("--v must be nonzero")
    return decompose(v)


def cmd_decompose(args):
    d = _decompose(args)
    if d is None:
        _out(args, None, "none")
        return 0
    g1, g2 = d.gamma1, d.gamma2
    _out(args, d.to_json(), f"({g1.p},{g1.q},{g1.r}) + ({g2.p},{g2.q},{g2.r})")


def cmd_wallterm(args):
    d = _decompose(args)
    if d is None:
        raise UsageError("--v has no decomposition")
    x = wall_crossing_term(d)
    _out(args, {"term": rat(x)}, rat(x))


def cmd_conj_dt(args):
    _need(args, "beta", "n")
    try:
        x = conj_dt(args.beta, args.n)
    except ValueError as e:
        raise UsageError(str(e))
    _out(args, {"C": rat(x)}, rat(x))


def cmd_a_coeffs(args):
    order = args.order or 800
    try:
        a = a_coefficients(order)
    except ValueError as e:
        raise UsageError(str(e))
    doc = a.to_json()
    _out(args, doc, "\n".join(f"{n} {c}" for n, c in doc.items()))


def _curve(args) -> CurveClass:
    _need(args, "beta", "n")
    return CurveClass(args.beta, args.n)


def cmd_fm_orbit(args):
    cc = _curve(args)
    bound = args.bound or 20
    decomposable = cc.disc < 0 and decompose(cc.as_gamma()) is not None
    rows, lines, failed = [], [], False
    for s in cubic_unit_solutions(cc, bound):
        im, g = fm_image(cc, s), reconstruct_g(cc, s)
        row = {"c": s.c, "d": s.d, "image": [im.beta, im.n], "g": list(g.entries())}
        text = f"c={s.c} d={s.d} -> ({im.beta},{im.n}) g={g.entries()}"
        if decomposable:
            v = wallcross_consistency(cc, s)
            row["verdict"] = v.to_json()
            failed |= not v.ok
            text += f" {v.case.tag} {'ok' if v.ok else 'FAIL'}"
        rows.append(row)
        lines.append(text)
    _out(args, {"beta": cc.beta, "n": cc.n, "bound": bound, "solutions": rows}, "\n".join(lines))
    return 1 if failed else 0


def cmd_quest(args):
    try:
        rep = check_quest(_curve(args), args.bound or 20)
    except ValueError as e:
        raise UsageError(str(e))
    text = (f"{len(rep.solutions)} solutions, {len(rep.open_interval_hits)} in the open interval, "
            f"{len(rep.boundary_violations)} boundary violations")
    _out(args, rep.to_json(), text)
    return 0 if rep.ok else 1


def cmd_spin_solve(args):
    beta = spin.invariant_bilinear()
    quartic = spin.solve_quartic()
    doc = {"bilinear": [[rat(x) for x in row] for row in beta], "quartic": quartic.to_json()}
    _out(args, doc, f"bilinear form: 32x32, quartic: {len(quartic.coeffs)} terms")


def _report(args, results) -> int:
    if args.json:
        print(json.dumps([r.to_json() for r in results], sort_keys=True))
    else:
        for r in results:
            print(r.line())
            for d in r.details[:10]:
                print(f"    {d}")
    return 0 if all(r.passed for r in results) else 1


def cmd_spin_check(args):
    return _report(args, [check_spin(seed=args.seed)])


def _lattice(m: int, text: str) -> SaturatedLattice:
    rows = [_ints(r, m, "lattice row") for r in text.split(";") if r.strip()]
    return SaturatedLattice.span(m, rows)


def cmd_ring(args):
    """``--v`` and ``--w`` are ``;``-separated generator rows of two lattices."""
    if args.v is None or args.w is None:
        raise UsageError("--v and --w (lattice generators, rows separated by ';') are required")
    m = len(args.v.split(";")[0].split(","))
    x = RingElement.eps(_lattice(m, args.v))
    y = RingElement.eps(_lattice(m, args.w))
    prod = x * y
    text = " + ".join(f"{rat(c)}*eps{[list(b) for b in basis]}" for basis, c in prod.terms) or "0"
    _out(args, prod.to_json(), text)


def cmd_walls(args):
    v = _vec(args)
    try:
        vp = Viewport.parse(args.viewport) if args.viewport else None
    except ValueError as e:
        raise UsageError(str(e))
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(emit_walls(v, "svg", vp))
    if args.json or not args.svg:
        print(emit_walls(v, "json"))


def cmd_verify(args):
    skip = () if not args.quick else ("check_decomposition_oracle",)
    return _report(args, run_all(seed=args.seed, skip=skip))


COMMANDS = {
    "pair": cmd_pair, "disc": cmd_disc, "act": cmd_act, "decompose": cmd_decompose,
    "wallterm": cmd_wallterm, "conj-dt": cmd_conj_dt, "a-coeffs": cmd_a_coeffs,
    "fm-orbit": cmd_fm_orbit, "quest": cmd_quest, "spin-solve": cmd_spin_solve,
    "spin-check": cmd_spin_check, "ring": cmd_ring, "walls": cmd_walls, "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="abeldt", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--v")
        s.add_argument("--w")
        s.add_argument("--g")
        s.add_argument("--beta", type=int)
        s.add_argument("--n", type=int)
        s.add_argument("--bound", type=int)
        s.add_argument("--order", type=int)
        s.add_argument("--seed", type=int, default=DEFAULT_SEED)
        s.add_argument("--json", action="store_true")
        s.add_argument("--svg")
        s.add_argument("--viewport")
        if name == "verify":
            s.add_argument("--quick", action="store_true", help="skip the exhaustive box oracle")
    return p


VALUE_FLAGS = ("--v", "--w", "--g", "--viewport")


def _glue_negative_values(argv: list[str]) -> list[str]:
    """Let ``--v -1,0,0,2`` through; argparse would read the value as a flag."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def run(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_glue_negative_values(argv))
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return COMMANDS[args.command](args) or 0
    except UsageError as e:
        print(f"abeldt {args.command}: {e}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
