"""Tests for shape values and the angle-space metric."""

import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from trisub import hyptrig
from trisub.hyptrig import DomainError
from trisub.shape import (AngleShape, EUCLIDEAN_ATOL, metric_distance,
                          project_euclidean, shape_from_angles,
                          shape_from_edges)
from trisub.subdivision import apply


def test_shape_from_edges_equilateral():
    rec = shape_from_edges(1, 1, 1)
    assert not rec.is_euclidean
    assert rec.angles.A == rec.angles.B == rec.angles.C
    assert rec.area > 0


def test_shape_from_edges_isosceles_447():
    rec = shape_from_edges(4, 4, 7)
    assert rec.angles.A == pytest.approx(rec.angles.B, abs=1e-14)
    assert rec.edges.as_tuple() == (4, 4, 7)


def test_shape_from_edges_invalid():
    with pytest.raises(DomainError):
        shape_from_edges(1, 2, 5)


def test_shape_from_angles_euclidean_has_no_edges():
    rec = shape_from_angles(math.pi / 3, math.pi / 3, math.pi / 3)
    assert rec.is_euclidean
    assert rec.edges is None
    assert rec.area == 0.0


def test_shape_from_angles_hyperbolic_round_trip():
    rec = shape_from_angles(0.5, 0.5, 0.5)
    assert rec.edges is not None
    back = hyptrig.angles_from_edges(*rec.edges.as_tuple())
    assert max(abs(x - 0.5) for x in back) < 1e-12


def test_shape_from_angles_rejects_oversum():
    with pytest.raises(DomainError):
        shape_from_angles(2, 2, 2)
    with pytest.raises(DomainError):
        shape_from_angles(1.0, -0.5, 1.0)


def test_record_invariants_sampled():
    rng = random.Random(9)
    for _ in range(200):
        while True:
            a, b, c = (rng.uniform(0.01, 5) for _ in range(3))
            if a < b + c and b < c + a and c < a + b:
                break
        rec = shape_from_edges(a, b, c)
        back = hyptrig.angles_from_edges(*rec.edges.as_tuple())
        assert max(abs(x - y) for x, y in
                   zip(back, rec.angles.as_tuple())) < 1e-10
        assert rec.area == hyptrig.defect_area(*rec.angles.as_tuple())


def test_metric_distance_basics():
    s = shape_from_edges(1, 2, 2.5).angles
    t = shape_from_edges(0.5, 0.5, 0.7).angles
    assert metric_distance(s, s) == 0.0
    assert metric_distance(s, t) == metric_distance(t, s)
    assert metric_distance(s, t) > 0


def test_metric_distance_noncontraction_witness():
    fixed = AngleShape(math.pi / 3, math.pi / 3, math.pi / 3)
    rec = shape_from_edges(4, 4, 7)
    child = apply("M", rec)
    assert metric_distance(rec.angles, fixed) < metric_distance(child.angles, fixed)


def test_projection_examples():
    out = project_euclidean(AngleShape(math.pi / 6, math.pi / 6, math.pi / 6))
    assert out.as_tuple() == pytest.approx((math.pi / 3,) * 3, abs=1e-15)
    assert out.angle_sum() == pytest.approx(math.pi, abs=0)

    eu = AngleShape(1.0, 1.0, math.pi - 2.0)
    again = project_euclidean(eu)
    assert max(abs(x - y) for x, y in zip(eu.as_tuple(), again.as_tuple())) < 1e-15


def test_projection_idempotent_and_projective():
    rng = random.Random(4)
    for _ in range(200):
        A = rng.uniform(0.05, 1.2)
        B = rng.uniform(0.05, 1.2)
        C = rng.uniform(0.05, min(1.2, math.pi - A - B - 0.05))
        s = AngleShape(A, B, C)
        p = project_euclidean(s)
        assert p.is_euclidean
        pp = project_euclidean(p)
        assert pp.as_tuple() == p.as_tuple()  # bit-exact fixed point
        # argwise projective scaling
        ratio = p.A / s.A
        assert p.B / s.B == pytest.approx(ratio, rel=1e-12)
        assert p.C / s.C == pytest.approx(ratio, rel=1e-12)


def test_euclidean_classification_threshold():
    s = AngleShape(1.0, 1.0, math.pi - 2.0 + 0.5 * EUCLIDEAN_ATOL)
    assert s.is_euclidean
    h = AngleShape(1.0, 1.0, math.pi - 2.0 - 1e-6)
    assert not h.is_euclidean


def test_json_dict_shape():
    rec = shape_from_edges(1, 1, 1)
    d = rec.to_json_dict()
    assert set(d) == {"angles", "edges", "area"}
    assert len(d["angles"]) == 3 and len(d["edges"]) == 3
    eu = shape_from_angles(math.pi / 3, math.pi / 3, math.pi / 3)
    assert eu.to_json_dict()["edges"] is None


@settings(max_examples=100, deadline=None)
@given(st.floats(0.05, 1.4), st.floats(0.05, 1.4), st.floats(0.05, 1.4))
def test_projection_always_euclidean(A, B, C):
    if A + B + C >= math.pi - 1e-9:
        return
    p = project_euclidean(AngleShape(A, B, C))
    assert p.is_euclidean
    assert min(p.as_tuple()) > 0
