"""Triangle shape values: ordered angle triples, edge triples, records.

The shape space is the set of ordered similarity classes: hyperbolic
shapes have angle sum below pi, Euclidean shapes have angle sum exactly
pi (within EUCLIDEAN_ATOL) and carry no edge lengths.
"""

import math
from dataclasses import dataclass

from . import hyptrig
from .hyptrig import DomainError

# Angle sums within this of pi classify as Euclidean (binary64 round-off
# scale; same band edges_from_angles refuses to invert).
EUCLIDEAN_ATOL = hyptrig.EUCLIDEAN_SUM_ATOL


@dataclass(frozen=True)
class AngleShape:
    """Ordered angle triple (A, B, C) in radians."""

    A: float
    B: float
    C: float

    def __post_init__(self):
        for name, x in (("A", self.A), ("B", self.B), ("C", self.C)):
            if not x > 0:
                raise DomainError(f"angle {name}={x!r} must be positive")
        if self.angle_sum() > math.pi + EUCLIDEAN_ATOL:
            raise DomainError(f"angle sum {self.angle_sum()!r} exceeds pi")

    def angle_sum(self) -> float:
        return self.A + self.B + self.C

    @property
    def is_euclidean(self) -> bool:
        return abs(self.angle_sum() - math.pi) <= EUCLIDEAN_ATOL

    def as_tuple(self) -> tuple[float, float, float]:
        return self.A, self.B, self.C


@dataclass(frozen=True)
class EdgeLengths:
    """Ordered hyperbolic edge triple (a, b, c), a opposite A."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        hyptrig._check_edges(self.a, self.b, self.c)

    def as_tuple(self) -> tuple[float, float, float]:
        return self.a, self.b, self.c


@dataclass(frozen=True)
class ShapeRecord:
    """A shape with consistent angles, edges (hyperbolic only) and area."""

    angles: AngleShape
    edges: EdgeLengths | None
    area: float

    @property
    def is_euclidean(self) -> bool:
        return self.edges is None

    def to_json_dict(self) -> dict:
        return {
            "angles": list(self.angles.as_tuple()),
            "edges": list(self.edges.as_tuple()) if self.edges else None,
            "area": self.area,
        }


def shape_from_edges(a: float, b: float, c: float) -> ShapeRecord:
    """Build the hyperbolic shape realized by edge lengths (a, b, c)."""
    edges = EdgeLengths(a, b, c)
    angles = AngleShape(*hyptrig.angles_from_edges(a, b, c))
    return ShapeRecord(angles, edges, hyptrig.defect_area(*angles.as_tuple()))


def shape_from_angles(A: float, B: float, C: float) -> ShapeRecord:
    """Build the shape with angles (A, B, C); Euclidean ones carry no edges."""
    angles = AngleShape(A, B, C)
    if angles.is_euclidean:
        return ShapeRecord(angles, None, 0.0)
    edges = EdgeLengths(*hyptrig.edges_from_angles(A, B, C))
    return ShapeRecord(angles, edges, hyptrig.defect_area(A, B, C))


def metric_distance(s1: AngleShape, s2: AngleShape) -> float:
    """Euclidean distance between angle triples."""
    return math.sqrt((s1.A - s2.A) ** 2 + (s1.B - s2.B) ** 2 + (s1.C - s2.C) ** 2)


def project_euclidean(s: AngleShape) -> AngleShape:
    """Projectively rescale an angle triple onto angle sum pi.

    Euclidean inputs return unchanged (making the map exactly
    idempotent); otherwise the last component is recomputed as
    pi - A - B so the output sum lands on pi.
    """
    if s.is_euclidean:
        return s
    t = s.angle_sum()
    A = s.A * math.pi / t
    B = s.B * math.pi / t
    return AngleShape(A, B, math.pi - A - B)
