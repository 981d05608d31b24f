"""The four subdivision maps on shapes, orbit traces, and the limit map.

Joining the three edge midpoints cuts a triangle into four cells; each
map sends the shape to one cell, with vertex slots ordered so that all
four maps are the identity on Euclidean shapes:

    map A -> corner at A: slots (A, M_c, M_b)
    map B -> corner at B: slots (M_c, B, M_a)
    map C -> corner at C: slots (M_b, M_a, C)
    map M -> medial cell: slots (M_a, M_b, M_c)

where M_x is the midpoint of edge x.  Child edges follow from the slot
order: the corner cell at A has edges (m_a, b/2, c/2), and the medial
cell has the three midlines (m_a, m_b, m_c).
"""

import math
from dataclasses import dataclass

from . import hyptrig, plane_model
from .shape import AngleShape, EdgeLengths, ShapeRecord, project_euclidean
from ._fmt import csv_line

LETTERS = ("A", "B", "C", "M")

ORBIT_CSV_COLUMNS = ("n", "letter", "A", "B", "C", "a", "b", "c", "S",
                     "ln_sin_A", "sinh_a2", "sinh_b2", "sinh_c2")


class ConvergenceError(RuntimeError):
    """The iteration cap was hit; for valid inputs this signals a bug."""


def _check_letter(letter: str) -> None:
    if letter not in LETTERS:
        raise ValueError(f"unknown letter {letter!r}; expected one of {LETTERS}")


def child_edges(letter: str, e: EdgeLengths) -> EdgeLengths:
    """Edge lengths of the chosen subdivision cell, in slot order."""
    _check_letter(letter)
    md = hyptrig.medial_data(e.a, e.b, e.c)
    if letter == "M":
        return EdgeLengths(md.m_a, md.m_b, md.m_c)
    if letter == "A":
        return EdgeLengths(md.m_a, e.b / 2, e.c / 2)
    if letter == "B":
        return EdgeLengths(e.a / 2, md.m_b, e.c / 2)
    return EdgeLengths(e.a / 2, e.b / 2, md.m_c)


def apply(letter: str, s: ShapeRecord) -> ShapeRecord:
    """Apply one subdivision map to a shape.

    Euclidean shapes are fixed by all four maps.  Hyperbolic child angles
    are recomputed from the child's own edges.
    """
    _check_letter(letter)
    if s.is_euclidean:
        return s
    e = child_edges(letter, s.edges)
    angles = AngleShape(*hyptrig.angles_from_edges(*e.as_tuple()))
    return ShapeRecord(angles, e, hyptrig.defect_area(*angles.as_tuple()))


_CHILD_SLOTS = {
    # child vertex triple in slot order, from (p_a, p_b, p_c, m_a, m_b, m_c)
    "A": (0, 5, 4),
    "B": (5, 1, 3),
    "C": (4, 3, 2),
    "M": (3, 4, 5),
}


def apply_oracle(letter: str, e: EdgeLengths) -> EdgeLengths:
    """Subdivide by actually placing the triangle and measuring the child.

    The triangle is realized in the hyperboloid model, genuine geodesic
    midpoints are taken, and child edges measured with the model metric;
    an independent route that must agree with child_edges.
    """
    _check_letter(letter)
    tri = plane_model.place(e)
    pts = (tri.p_a, tri.p_b, tri.p_c,
           plane_model.midpoint(tri.p_b, tri.p_c),
           plane_model.midpoint(tri.p_c, tri.p_a),
           plane_model.midpoint(tri.p_a, tri.p_b))
    i, j, k = _CHILD_SLOTS[letter]
    v_a, v_b, v_c = pts[i], pts[j], pts[k]
    return EdgeLengths(plane_model.dist(v_b, v_c),
                       plane_model.dist(v_c, v_a),
                       plane_model.dist(v_a, v_b))


@dataclass(frozen=True)
class OrbitStep:
    n: int
    letter: str | None  # None on the starting entry
    angles: AngleShape
    edges: EdgeLengths | None
    area: float
    ln_sin_a: float
    sinh_half_edges: tuple[float, float, float] | None


@dataclass(frozen=True)
class OrbitTrace:
    steps: tuple[OrbitStep, ...]

    def csv_lines(self):
        yield csv_line(ORBIT_CSV_COLUMNS)
        for st in self.steps:
            edges = st.edges.as_tuple() if st.edges else (None, None, None)
            sh = st.sinh_half_edges or (None, None, None)
            yield csv_line((st.n, st.letter if st.letter else "-",
                            st.angles.A, st.angles.B, st.angles.C,
                            edges[0], edges[1], edges[2], st.area,
                            st.ln_sin_a, sh[0], sh[1], sh[2]))

    def to_csv(self) -> str:
        return "\n".join(self.csv_lines()) + "\n"


def _orbit_step(n: int, letter: str | None, s: ShapeRecord) -> OrbitStep:
    sh = None
    if s.edges is not None:
        sh = tuple(math.sinh(x / 2) for x in s.edges.as_tuple())
    return OrbitStep(n, letter, s.angles, s.edges, s.area,
                     math.log(math.sin(s.angles.A)), sh)


def orbit(word, s0: ShapeRecord) -> OrbitTrace:
    """Trace the orbit of s0 under a finite word of letters."""
    steps = [_orbit_step(0, None, s0)]
    s = s0
    for n, letter in enumerate(word, start=1):
        s = apply(letter, s)
        steps.append(_orbit_step(n, letter, s))
    return OrbitTrace(tuple(steps))


@dataclass(frozen=True)
class LimitResult:
    angles: AngleShape  # Euclidean
    iterations: int
    residual: float


def limit_shape_info(seq, s0: ShapeRecord, tol: float = 1e-13,
                     max_iter: int = 10_000) -> LimitResult:
    """Follow an infinite letter sequence until the shape is Euclidean to tol.

    Stops once the area and the per-step angle change both drop below tol,
    then projects onto angle sum pi.  seq is any iterable of letters; an
    eventually periodic sequence object works directly.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    if s0.is_euclidean:
        return LimitResult(s0.angles, 0, 0.0)
    s = s0
    n = 0
    for letter in seq:
        if n >= max_iter:
            raise ConvergenceError(f"no convergence within {max_iter} steps")
        prev = s.angles
        s = apply(letter, s)
        n += 1
        step = max(abs(s.angles.A - prev.A), abs(s.angles.B - prev.B),
                   abs(s.angles.C - prev.C))
        if s.area < tol and step < tol:
            return LimitResult(project_euclidean(s.angles), n, max(s.area, step))
    raise ValueError("letter sequence ended before convergence")


def limit_shape(seq, s0: ShapeRecord, tol: float = 1e-13) -> AngleShape:
    """Euclidean limit shape of s0 along an infinite letter sequence."""
    return limit_shape_info(seq, s0, tol).angles
