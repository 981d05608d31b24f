"""Geometric oracle in the hyperboloid model.

Points live on the sheet x0^2 - x1^2 - x2^2 = 1, x0 >= 1, with the
Minkowski pairing <u, v> = u0 v0 - u1 v1 - u2 v2.  Distance, midpoint and
angle are closed-form here, which is what makes this an independent check
of the trigonometric formulas.  Points are renormalized onto the sheet
after arithmetic so that drift does not build up over deep subdivision.
"""

import math
from typing import NamedTuple

from .shape import EdgeLengths
from . import hyptrig


class InvalidPointError(ValueError):
    """Point pair is not on the hyperboloid (Minkowski product below 1)."""


class HPoint(NamedTuple):
    x0: float
    x1: float
    x2: float


class PlacedTriangle(NamedTuple):
    """Vertices in slot order: p_a at slot A, p_b at slot B, p_c at slot C."""

    p_a: HPoint
    p_b: HPoint
    p_c: HPoint


def minkowski(u: HPoint, v: HPoint) -> float:
    return u.x0 * v.x0 - u.x1 * v.x1 - u.x2 * v.x2


def _renorm(x0: float, x1: float, x2: float) -> HPoint:
    s = math.sqrt(x0 * x0 - x1 * x1 - x2 * x2)
    return HPoint(x0 / s, x1 / s, x2 / s)


def _pair_gap(u: HPoint, v: HPoint) -> float:
    # <u, v> - 1 computed difference-first; exact cancellation of the large
    # coordinate products would otherwise cost half the digits for nearby points
    d0, d1, d2 = u.x0 - v.x0, u.x1 - v.x1, u.x2 - v.x2
    return (d1 * d1 + d2 * d2 - d0 * d0) / 2


def dist(u: HPoint, v: HPoint) -> float:
    """Geodesic distance arccosh(<u, v>)."""
    q = _pair_gap(u, v)
    if q < 0:
        if q < -1e-12:
            raise InvalidPointError(f"Minkowski product {1 + q!r} is below 1")
        q = 0.0
    return math.asinh(math.sqrt(q * (q + 2)))


def midpoint(u: HPoint, v: HPoint) -> HPoint:
    """Geodesic midpoint (u + v) / sqrt(2 + 2<u, v>)."""
    return _renorm(u.x0 + v.x0, u.x1 + v.x1, u.x2 + v.x2)


def angle_at(v: HPoint, p: HPoint, q: HPoint) -> float:
    """Angle at v between the geodesics toward p and toward q.

    Uses the tangent-space projections of p and q at v; their induced
    inner product is <v,p><v,q> - <p,q> with squared norms <v,p>^2 - 1.
    """
    gp = minkowski(v, p)
    gq = minkowski(v, q)
    npp = gp * gp - 1.0
    nqq = gq * gq - 1.0
    if npp <= 0 or nqq <= 0:
        raise InvalidPointError("angle_at needs points distinct from the vertex")
    ct = (gp * gq - minkowski(p, q)) / math.sqrt(npp * nqq)
    return math.acos(max(-1.0, min(1.0, ct)))


def place(e: EdgeLengths) -> PlacedTriangle:
    """Realize edge lengths as hyperboloid points.

    Slot A sits at the origin (1,0,0), slot B at distance c along the
    first axis, slot C at distance b in the direction making angle A.
    """
    A = hyptrig.angles_from_edges(e.a, e.b, e.c)[0]
    p_a = HPoint(1.0, 0.0, 0.0)
    p_b = HPoint(math.cosh(e.c), math.sinh(e.c), 0.0)
    p_c = HPoint(math.cosh(e.b), math.sinh(e.b) * math.cos(A), math.sinh(e.b) * math.sin(A))
    return PlacedTriangle(p_a, p_b, p_c)


def to_disk(u: HPoint, model: str = "klein") -> tuple[float, float]:
    """Project onto the Klein disk (x1/x0, x2/x0) or Poincare disk (x1/(1+x0), x2/(1+x0))."""
    if model == "klein":
        return u.x1 / u.x0, u.x2 / u.x0
    if model == "poincare":
        return u.x1 / (1 + u.x0), u.x2 / (1 + u.x0)
    raise ValueError(f"unknown disk model {model!r}")


def geodesic_point(u: HPoint, v: HPoint, t: float) -> HPoint:
    """Point at parameter t in [0, 1] along the geodesic from u to v."""
    d = dist(u, v)
    if d < 1e-15:
        return _renorm(u.x0 + t * (v.x0 - u.x0), u.x1 + t * (v.x1 - u.x1),
                       u.x2 + t * (v.x2 - u.x2))
    wu = math.sinh((1 - t) * d) / math.sinh(d)
    wv = math.sinh(t * d) / math.sinh(d)
    return _renorm(wu * u.x0 + wv * v.x0, wu * u.x1 + wv * v.x1, wu * u.x2 + wv * v.x2)
