"""Central charges on the (alpha, beta) slice and the single wall of a class.

Wall parameters are exact: a circle is stored through ``center_beta``, the
square of ``center_alpha`` plus its sign, and ``radius^2``; a line through
``beta = sign * alpha / sqrt(3) + theta1``.  Floats only appear when points are
sampled or drawn.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .gamma import GammaVector, TauPoint
from .semihomog import Decomposition, decompose, slope

SQRT3 = math.sqrt(3.0)


def _cmul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def central_charge(tau: TauPoint, v: GammaVector) -> tuple:
    """``Z_tau(v) = -chi(e^{tau H}, v)`` as a (real, imag) pair.

    Components are exact when ``tau`` has rational coordinates.
    """
    t = (tau.beta, tau.alpha)
    t2 = _cmul(t, t)
    t3 = _cmul(t2, t)
    re = -(v.v3 - 3 * t[0] * v.v2 + 3 * t2[0] * v.v1 - t3[0] * v.v0)
    im = -(-3 * t[1] * v.v2 + 3 * t2[1] * v.v1 - t3[1] * v.v0)
    return (re, im)


@dataclass(frozen=True)
class Circle:
    center_beta: Fraction
    center_alpha_sq: Fraction
    center_alpha_sign: int  # +1 above the real axis, -1 below
    radius_sq: Fraction
    u_ratio_positive: bool

    @property
    def center_alpha(self) -> float:
        return self.center_alpha_sign * math.sqrt(self.center_alpha_sq)

    @property
    def radius(self) -> float:
        return math.sqrt(self.radius_sq)

    def to_json(self) -> dict:
        return {
            "kind": "circle",
            "center_beta": str(self.center_beta),
            "center_alpha_squared": str(self.center_alpha_sq),
            "center_alpha_sign": self.center_alpha_sign,
            "radius_squared": str(self.radius_sq),
            "center_alpha": self.center_alpha,
            "radius": self.radius,
            "style": "dotted" if self.u_ratio_positive else "solid",
        }


@dataclass(frozen=True)
class Line:
    """``beta = sign * alpha / sqrt(3) + theta1`` for ``alpha > 0``."""

    sign: int
    intercept: Fraction
    u_ratio_positive: bool

    def beta_at(self, alpha: float) -> float:
        return self.sign * alpha / SQRT3 + float(self.intercept)

    def to_json(self) -> dict:
        return {
            "kind": "line",
            "slope": f"{'+' if self.sign > 0 else '-'}sqrt(3)/3",
            "intercept": str(self.intercept),
            "style": "dotted" if self.u_ratio_positive else "solid",
        }


Wall = Union[Circle, Line]


def wall_of(dec: Decomposition) -> Wall:
    g1, g2 = dec.gamma1, dec.gamma2
    u1 = g1.u
    t1 = slope(g1).value
    if slope(g2).is_infinite:
        u2 = g2.r
        positive = (u1 > 0) == (u2 > 0)
        return Line(1 if positive else -1, t1, positive)
    u2 = g2.u
    t2 = slope(g2).value
    positive = (u1 > 0) == (u2 > 0)
    gap = t1 - t2
    # (alpha +- gap sqrt3/6)^2 + (beta - (t1+t2)/2)^2 = gap^2/3 with -+ u1/u2 > 0;
    # u1/u2 > 0 takes the lower sign, so center_alpha = gap*sqrt3/6 < 0
    return Circle(
        center_beta=(t1 + t2) / 2,
        center_alpha_sq=gap * gap / 12,
        center_alpha_sign=-1 if positive else 1,
        radius_sq=gap * gap / 3,
        u_ratio_positive=positive,
    )


def walls_for(v: GammaVector) -> list:
    dec = decompose(v)
    return [] if dec is None else [wall_of(dec)]


def on_wall(tau: TauPoint, v: GammaVector, tol: float = 1e-9) -> bool:
    """``Z(gamma2)`` is a positive real multiple of ``Z(gamma1)``, up to ``tol``.

    The imaginary part of ``Z1 * conj(Z2)`` is compared relative to ``|Z1||Z2|``.
    Float coordinates are converted to exact fractions first: near the real
    axis both charges are tiny and expanding the cubics in floats cancels badly.
    """
    dec = decompose(v)
    if dec is None:
        raise ValueError(f"{v} has no decomposition, hence no wall")
    exact = TauPoint(Fraction(tau.beta), Fraction(tau.alpha))
    a1, b1 = central_charge(exact, dec.gamma1.as_gamma())
    a2, b2 = central_charge(exact, dec.gamma2.as_gamma())
    re, im = a1 * a2 + b1 * b2, b1 * a2 - a1 * b2
    scale_sq = (a1 * a1 + b1 * b1) * (a2 * a2 + b2 * b2)
    if scale_sq == 0:
        return False
    return im * im <= Fraction(tol) ** 2 * scale_sq and re > 0


def side_of_wall(tau: TauPoint, wall: Wall) -> int:
    """+1 outside the circle (or left of the line), -1 inside (right), 0 on it."""
    b, a = tau.beta, tau.alpha
    if isinstance(wall, Circle):
        da = float(a) - wall.center_alpha
        val = (float(b) - float(wall.center_beta)) ** 2 + da * da - float(wall.radius_sq)
        return (val > 0) - (val < 0)
    val = wall.beta_at(float(a)) - float(b)
    return (val > 0) - (val < 0)


def sample_wall(wall: Wall, count: int, alpha_max: float = 4.0) -> list:
    """``count`` points of the wall inside the upper half plane."""
    pts = []
    if isinstance(wall, Circle):
        r, ca, cb = wall.radius, wall.center_alpha, float(wall.center_beta)
        # arc above alpha = 0: angles where ca + r sin(phi) > 0
        lo = math.asin(max(-1.0, min(1.0, -ca / r)))
        hi = math.pi - lo
        for k in range(count):
            phi = lo + (hi - lo) * (k + 0.5) / count
            pts.append(TauPoint(cb + r * math.cos(phi), ca + r * math.sin(phi)))
    else:
        for k in range(count):
            a = alpha_max * (k + 0.5) / count
            pts.append(TauPoint(wall.beta_at(a), a))
    return pts


@dataclass(frozen=True)
class BetaBound:
    """``beta_0(alpha) = constant + alpha_coeff * alpha / sqrt(3)``."""

    constant: Fraction
    alpha_coeff: Fraction = Fraction(0)

    def at(self, alpha) -> float:
        return float(self.constant) + float(self.alpha_coeff) * float(alpha) / SQRT3

    def to_json(self) -> dict:
        return {"constant": str(self.constant), "alpha_over_sqrt3": str(self.alpha_coeff)}


def gieseker_beta_bound(d: Decomposition) -> BetaBound:
    t1 = slope(d.gamma1).value
    if slope(d.gamma2).is_infinite:
        return BetaBound(t1, Fraction(-1))
    t2 = slope(d.gamma2).value
    return BetaBound(Fraction(7, 6) * t1 - t2 / 6)


# -- emission -------------------------------------------------------------------

WALLS_SCHEMA = {
    "type": "object",
    "required": ["v", "walls"],
    "properties": {
        "v": {"type": "array", "items": {"type": "integer"}, "minItems": 4, "maxItems": 4},
        "walls": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["kind", "style"],
                "properties": {
                    "kind": {"enum": ["circle", "line"]},
                    "style": {"enum": ["dotted", "solid"]},
                },
            },
        },
    },
}


@dataclass(frozen=True)
class Viewport:
    beta_min: float
    beta_max: float
    alpha_max: float

    def __post_init__(self):
        if not (self.beta_max > self.beta_min and self.alpha_max > 0):
            raise ValueError(f"degenerate viewport {self}")

    @classmethod
    def parse(cls, text: str) -> "Viewport":
        parts = [float(x) for x in text.split(",")]
        if len(parts) != 3:
            raise ValueError("viewport is beta_min,beta_max,alpha_max")
        return cls(*parts)


DEFAULT_VIEWPORT = Viewport(-3.0, 3.0, 3.0)


def walls_json(v: GammaVector) -> dict:
    return {"v": list(v), "walls": [w.to_json() for w in walls_for(v)]}


def walls_svg(v: GammaVector, viewport: Optional[Viewport] = None) -> str:
    vp = viewport or DEFAULT_VIEWPORT
    width = vp.beta_max - vp.beta_min
    # flip alpha so the upper half plane points up
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{vp.beta_min:g} 0 {width:g} {vp.alpha_max:g}">',
        f'<g transform="translate(0,{vp.alpha_max:g}) scale(1,-1)">',
        f'<clipPath id="vp"><rect x="{vp.beta_min:g}" y="0" width="{width:g}" '
        f'height="{vp.alpha_max:g}"/></clipPath>',
        f'<line x1="{vp.beta_min:g}" y1="0" x2="{vp.beta_max:g}" y2="0" '
        f'stroke="black" stroke-width="{width / 400:g}"/>',
    ]
    sw = width / 300
    for w in walls_for(v):
        dash = f' stroke-dasharray="{sw * 3:g},{sw * 3:g}"' if w.u_ratio_positive else ""
        if isinstance(w, Circle):
            lines.append(
                f'<circle cx="{float(w.center_beta):.12g}" cy="{w.center_alpha:.12g}" '
                f'r="{w.radius:.12g}" fill="none" stroke="black" stroke-width="{sw:g}"'
                f'{dash} clip-path="url(#vp)"/>')
        else:
            a_top = vp.alpha_max
            lines.append(
                f'<line x1="{float(w.intercept):.12g}" y1="0" x2="{w.beta_at(a_top):.12g}" '
                f'y2="{a_top:.12g}" stroke="black" stroke-width="{sw:g}"{dash} '
                f'clip-path="url(#vp)"/>')
    lines += ["</g>", "</svg>", ""]
    return "\n".join(lines)


def emit_walls(v: GammaVector, fmt: str = "json", viewport: Optional[Viewport] = None) -> str:
    if fmt == "json":
        return json.dumps(walls_json(v), sort_keys=True)
    if fmt == "svg":
        return walls_svg(v, viewport)
    raise ValueError(f"unknown format {fmt!r}")
