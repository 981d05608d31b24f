"""Scalar hyperbolic trigonometry for triangles.

Every formula is evaluated in a half-argument sinh/tanh form so that
nothing cancels catastrophically when edges get small; iterated medial
subdivision drives edges below 1e-12 within a few dozen steps, where the
naive cosh-difference forms lose all precision.
"""

import math

# Values may overshoot a domain bound by at most this much (relative) and
# get clamped; anything worse is treated as a caller bug.
CLAMP_TOL = 1e-9

# Angle sums this close to pi count as Euclidean (shape classification
# uses the same threshold); no finite edge lengths exist there.
EUCLIDEAN_SUM_ATOL = 1e-12


class DomainError(ValueError):
    """Input is outside the geometric domain (bad edges or angles)."""


class InconsistentInputError(ValueError):
    """Inputs are individually valid but jointly impossible."""


def _check_edges(a: float, b: float, c: float) -> None:
    for name, x in (("a", a), ("b", b), ("c", c)):
        if not x > 0:
            raise DomainError(f"edge {name}={x!r} must be positive")
    if a >= b + c:
        raise DomainError(f"edge a={a!r} violates the triangle inequality (a >= b + c)")
    if b >= c + a:
        raise DomainError(f"edge b={b!r} violates the triangle inequality (b >= c + a)")
    if c >= a + b:
        raise DomainError(f"edge c={c!r} violates the triangle inequality (c >= a + b)")


def _clamp_unit(x: float, what: str) -> float:
    if x > 1.0:
        if x > 1.0 + CLAMP_TOL:
            raise InconsistentInputError(f"{what} = {x!r} exceeds 1")
        return 1.0
    if x < -1.0:
        if x < -1.0 - CLAMP_TOL:
            raise InconsistentInputError(f"{what} = {x!r} is below -1")
        return -1.0
    return x


def angles_from_edges(a: float, b: float, c: float) -> tuple[float, float, float]:
    """Angles of the hyperbolic triangle with edges (a, b, c), a opposite A.

    cos A = (s_b^2 + s_c^2 - s_a^2 + 2 s_b^2 s_c^2) / (2 s_b s_c c_b c_c)
    with s_t = sinh(t/2), c_t = cosh(t/2), which is the law of cosines
    rewritten free of the cosh-difference cancellation.
    """
    _check_edges(a, b, c)
    sa, sb, sc = math.sinh(a / 2), math.sinh(b / 2), math.sinh(c / 2)
    ca, cb, cc = math.cosh(a / 2), math.cosh(b / 2), math.cosh(c / 2)

    def one(sa, sb, sc, cb, cc):
        num = sb * sb + sc * sc - sa * sa + 2 * sb * sb * sc * sc
        den = 2 * sb * sc * cb * cc
        return math.acos(_clamp_unit(num / den, "cos(angle)"))

    return (one(sa, sb, sc, cb, cc),
            one(sb, sc, sa, cc, ca),
            one(sc, sa, sb, ca, cb))


def edges_from_angles(A: float, B: float, C: float) -> tuple[float, float, float]:
    """Edges of the hyperbolic triangle with angles (A, B, C).

    Inverse of angles_from_edges: cosh a = (cos A + cos B cos C)/(sin B sin C),
    evaluated as sinh^2(a/2) = sin(S/2) sin(A + S/2) / (sin B sin C) with
    S = pi - A - B - C, so tiny defects do not cancel.
    """
    for name, x in (("A", A), ("B", B), ("C", C)):
        if not x > 0:
            raise DomainError(f"angle {name}={x!r} must be positive")
    S = math.pi - A - B - C
    if S <= EUCLIDEAN_SUM_ATOL:
        raise DomainError(f"angle sum {A + B + C!r} is not hyperbolic")

    def one(A, B, C):
        val = math.sin(S / 2) * math.sin(A + S / 2) / (math.sin(B) * math.sin(C))
        return 2 * math.asinh(math.sqrt(val))

    return one(A, B, C), one(B, C, A), one(C, A, B)


def defect_area(A: float, B: float, C: float) -> float:
    """Area as the angle defect pi - A - B - C."""
    S = math.pi - A - B - C
    if S < 0:
        if S < -CLAMP_TOL:
            raise DomainError(f"angle sum {A + B + C!r} exceeds pi")
        S = 0.0
    return S


def cagnoli_area(a: float, b: float, c: float, A: float) -> float:
    """Area from two edges and the included-opposite angle.

    sin(S/2) = sinh(b/2) sinh(c/2) sin A / cosh(a/2).
    """
    _check_edges(a, b, c)
    rhs = math.sinh(b / 2) * math.sinh(c / 2) * math.sin(A) / math.cosh(a / 2)
    return 2 * math.asin(_clamp_unit(rhs, "sin(S/2)"))


def keogh_area(m_b: float, m_c: float, alpha: float) -> float:
    """Parent-triangle area from two midlines and the medial angle between them.

    sin(S/2) = sinh(m_b) sinh(m_c) sin(alpha), where m_b and m_c meet at the
    midpoint of edge a and alpha is the medial triangle's angle there.
    """
    if not (m_b > 0 and m_c > 0):
        raise DomainError("midlines must be positive")
    rhs = math.sinh(m_b) * math.sinh(m_c) * math.sin(alpha)
    return 2 * math.asin(_clamp_unit(rhs, "sin(S/2)"))


def law_of_sines_ratio(a: float, A: float) -> float:
    """sin A / sinh a; the same for all three edge/opposite-angle pairs."""
    if not a > 0:
        raise DomainError(f"edge {a!r} must be positive")
    return math.sin(A) / math.sinh(a)


class MedialData:
    """Midline data of a hyperbolic triangle.

    mu scales cosh of the half-edges down to cosh of the midlines
    (cosh m_x = cosh(x/2) * mu); l_x is the perpendicular distance from
    the triangle's vertices to the line through midline m_x (all three
    vertices are equidistant from it), tied to the edge by the Lambert
    quadrilateral relation sinh(x/2) = sinh(m_x) cosh(l_x).
    """

    __slots__ = ("mu", "m_a", "m_b", "m_c", "l_a", "l_b", "l_c")

    def __init__(self, mu, m_a, m_b, m_c, l_a, l_b, l_c):
        self.mu = mu
        self.m_a = m_a
        self.m_b = m_b
        self.m_c = m_c
        self.l_a = l_a
        self.l_b = l_b
        self.l_c = l_c

    @property
    def midlines(self) -> tuple[float, float, float]:
        return self.m_a, self.m_b, self.m_c

    @property
    def feet(self) -> tuple[float, float, float]:
        return self.l_a, self.l_b, self.l_c

    def __repr__(self):
        return (f"MedialData(mu={self.mu!r}, m=({self.m_a!r}, {self.m_b!r}, "
                f"{self.m_c!r}), l=({self.l_a!r}, {self.l_b!r}, {self.l_c!r}))")


def medial_data(a: float, b: float, c: float) -> MedialData:
    """Midlines and Lambert foot distances of the triangle (a, b, c).

    mu = (1 - T)/(1 + T) with
    T = tanh((a+b+c)/4) tanh((a+b-c)/4) tanh((c+a-b)/4) tanh((b+c-a)/4);
    cosh m_x = cosh(x/2) mu, computed as
    sinh^2(m_x/2) = cosh^2(x/4) (tanh^2(x/4) - T)/(1 + T), and
    sinh l_x = 2 cosh(x/2) sqrt(T) / ((1 + T) sinh m_x).
    """
    _check_edges(a, b, c)
    T = (math.tanh((a + b + c) / 4) * math.tanh((a + b - c) / 4)
         * math.tanh((c + a - b) / 4) * math.tanh((b + c - a) / 4))
    mu = (1 - T) / (1 + T)
    sqrtT = math.sqrt(T)
    ms = []
    ls = []
    for x in (a, b, c):
        th = math.tanh(x / 4)
        h = math.cosh(x / 4) ** 2 * (th * th - T) / (1 + T)  # sinh^2(m/2)
        assert h >= 0, "cosh(m) < 1 is impossible for a valid triangle"
        m = 2 * math.asinh(math.sqrt(h))
        sinh_m = 2 * math.sqrt(h * (1 + h))
        ls.append(math.asinh(2 * math.cosh(x / 2) * sqrtT / ((1 + T) * sinh_m)))
        ms.append(m)
    return MedialData(mu, ms[0], ms[1], ms[2], ls[0], ls[1], ls[2])


class TraceCoords:
    """Doubled cosh coordinates (x, y, z) = (2cosh a, 2cosh b, 2cosh c)."""

    __slots__ = ("x", "y", "z")

    def __init__(self, x, y, z):
        self.x = x
        self.y = y
        self.z = z

    @classmethod
    def from_edges(cls, a: float, b: float, c: float) -> "TraceCoords":
        return cls(2 * math.cosh(a), 2 * math.cosh(b), 2 * math.cosh(c))

    def __repr__(self):
        return f"TraceCoords({self.x!r}, {self.y!r}, {self.z!r})"


def _heron_sinh_sq(p: float, q: float, r: float) -> float:
    # Heron-like symmetric form in p = sinh^2(a/2) etc.; the only remaining
    # cancellation is the intrinsic one at flat (degenerate) triangles.
    return 2 * (p * q + q * r + r * p) - p * p - q * q - r * r + 4 * p * q * r


def trace_parent_area(tc: TraceCoords) -> float:
    """Parent area from trace coordinates of its medial triangle's edges.

    4 cos^2(S/2) = x^2 + y^2 + z^2 - xyz for (x, y, z) built from the
    medial edges; evaluated through sinh^2 half-edges so values near the
    degenerate x = y = z = 2 corner stay accurate.
    """
    p = (tc.x - 2) / 4
    q = (tc.y - 2) / 4
    r = (tc.z - 2) / 4
    if min(p, q, r) < 0:
        if min(p, q, r) < -CLAMP_TOL:
            raise InconsistentInputError("trace coordinates below 2 are not hyperbolic")
        p, q, r = max(p, 0.0), max(q, 0.0), max(r, 0.0)
    H = _heron_sinh_sq(p, q, r)
    # rhs of the trace identity is 4 - 16H; it must land in (0, 4]
    if H < 0:
        if H < -CLAMP_TOL:
            raise InconsistentInputError("trace identity right side exceeds 4")
        H = 0.0
    s = 2 * math.sqrt(H)  # sin(S/2)
    return 2 * math.asin(_clamp_unit(s, "sin(S/2)"))


def _sin_angles(a: float, b: float, c: float) -> tuple[float, float, float]:
    # sin of each angle straight from the edges: sin A = sqrt(H) / (2
    # sqrt(q r (1+q)(1+r))) in sinh^2 half-edge variables.  Full relative
    # accuracy even for sliver angles, where acos would cost ~eps/angle^2.
    p = math.sinh(a / 2) ** 2
    q = math.sinh(b / 2) ** 2
    r = math.sinh(c / 2) ** 2
    root = math.sqrt(max(0.0, _heron_sinh_sq(p, q, r)))
    return (root / (2 * math.sqrt(q * r * (1 + q) * (1 + r))),
            root / (2 * math.sqrt(r * p * (1 + r) * (1 + p))),
            root / (2 * math.sqrt(p * q * (1 + p) * (1 + q))))


def area_from_edges(a: float, b: float, c: float) -> float:
    """Area of the triangle (a, b, c) from its own edges.

    cos^2(S/2) = (x+y+z+2)^2 / ((x+2)(y+2)(z+2)) with x = 2cosh a etc.;
    evaluated as S = 2 atan(sqrt(H) / (2 + p + q + r)) in sinh^2 half-edge
    variables, which is the same identity with the cancellation removed.
    """
    _check_edges(a, b, c)
    p = math.sinh(a / 2) ** 2
    q = math.sinh(b / 2) ** 2
    r = math.sinh(c / 2) ** 2
    H = _heron_sinh_sq(p, q, r)
    if H < 0:
        if H < -CLAMP_TOL * max(1.0, p * p, q * q, r * r):
            raise InconsistentInputError("area ratio exceeds 1")
        H = 0.0
    return 2 * math.atan(math.sqrt(H) / (2 + p + q + r))
