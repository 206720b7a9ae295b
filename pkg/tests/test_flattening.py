import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from totalsphere.errors import AtBlowup, AtObserver
from totalsphere.flattening import (
    DiscPoint, TheodoliteAngles, blowup_point, disc_distance, flatten, flatten_array,
    from_theodolite, measuring_line, to_natural, to_theodolite, unflatten, wrap_angle,
)
from totalsphere.sphere import B, F, L, R, U, UnitDirection, angle_between

PI = math.pi

lam_open = st.floats(1e-9, PI - 1e-6)
theta = st.floats(-PI, PI)
direction = st.tuples(*[st.floats(-1, 1)] * 3).filter(lambda v: math.hypot(*v) > 1e-3).map(
    UnitDirection.from_vector)


def test_flatten_examples():
    assert flatten(F) == DiscPoint(0.0, 0.0)
    p = flatten(R)
    assert p.lam == PI / 2 and p.theta == 0.0
    p = flatten(U)
    assert p.lam == PI / 2 and p.theta == PI / 2
    p = flatten(UnitDirection.from_vector((1, 1, 0)))
    assert abs(p.lam - PI / 4) < 1e-15 and p.theta == 0.0
    with pytest.raises(AtBlowup):
        flatten(B)
    with pytest.raises(AtBlowup):
        flatten(UnitDirection.from_vector((1e-12, -1, 0)))


def test_flatten_matches_vector_form():
    d = UnitDirection.from_vector((0.3, -0.2, 0.7))
    u, w = flatten(d).xy
    h = math.hypot(d.x, d.z)
    lam = math.acos(d.y)
    assert abs(u - d.x / h * lam) < 1e-12 and abs(w - d.z / h * lam) < 1e-12


def test_unflatten_examples():
    assert unflatten(DiscPoint(0, 0)) == F
    for t in (-3.0, 0.0, 1.0, PI):
        assert unflatten(DiscPoint(PI, t)) == B
    d = unflatten(DiscPoint(PI / 2, PI))
    assert all(abs(a - b) < 1e-15 for a, b in zip(d, L))


def test_disc_point_invariants():
    assert DiscPoint(0.0, 2.0).theta == 0.0
    assert DiscPoint(1.0, -PI).theta == PI
    assert DiscPoint(PI, 0.3).is_blowup
    assert not DiscPoint(PI - 1e-8, 0.3).is_blowup
    with pytest.raises(ValueError):
        DiscPoint(4.0, 0.0)
    with pytest.raises(ValueError):
        DiscPoint.from_xy(3.0, 3.0)
    assert blowup_point(1.0).is_blowup


@given(direction)
def test_round_trip_direction(d):
    if angle_between(d, B) < 1e-6:
        return
    back = unflatten(flatten(d))
    assert all(abs(a - b) <= 1e-12 for a, b in zip(back, d))


@given(lam_open, theta)
def test_round_trip_disc(lam, th):
    p = DiscPoint(lam, th)
    q = flatten(unflatten(p))
    assert abs(q.lam - p.lam) <= 1e-12
    assert abs(wrap_angle(q.theta - p.theta)) * max(p.lam, 1e-300) <= 1e-12 or p.lam < 1e-12


@given(theta, st.floats(0, PI), st.floats(0, PI))
def test_measuring_line_isometry(th, l1, l2):
    p, q = DiscPoint(l1, th), DiscPoint(l2, th)
    assert abs(disc_distance(p, q) - abs(l1 - l2)) <= 1e-12
    assert abs(angle_between(unflatten(p), unflatten(q)) - abs(l1 - l2)) <= 1e-12


@given(direction)
def test_azimuth_is_projection_azimuth(d):
    if math.hypot(d.x, d.z) < 1e-9:
        return
    assert abs(wrap_angle(flatten(d).theta - math.atan2(d.z, d.x))) <= 1e-12


def test_circles_through_f_flatten_to_diameters():
    n = UnitDirection.from_vector((0.6, 0, -0.8))
    e1 = F
    e2 = np.cross(n.as_tuple(), e1.as_tuple())
    t = np.linspace(-PI + 1e-3, PI - 1e-3, 200)
    pts = flatten_array(np.cos(t)[:, None] * np.array(e1.as_tuple()) + np.sin(t)[:, None] * e2)
    cross_z = pts[:, 0] * e2[2] - pts[:, 1] * e2[0]
    assert np.abs(cross_z).max() < 1e-10


def test_to_natural_examples():
    c = to_natural((0, 2, 0))
    assert (c.rho, c.lam, c.theta) == (2.0, 0.0, 0.0)
    c = to_natural((1, 0, 0))
    assert (c.rho, c.lam, c.theta) == (1.0, PI / 2, 0.0)
    c = to_natural((0, -1, -1))
    assert abs(c.rho - math.sqrt(2)) < 1e-15
    assert abs(c.lam - 3 * PI / 4) < 1e-15 and abs(c.theta + PI / 2) < 1e-15
    with pytest.raises(AtObserver):
        to_natural((0, 0, 0))


def test_theodolite_examples():
    assert from_theodolite(TheodoliteAngles(0, 0)) == F
    d = from_theodolite(TheodoliteAngles(PI / 2, 0))
    assert all(abs(a - b) < 1e-15 for a, b in zip(d, R))
    d = from_theodolite(TheodoliteAngles(PI / 4, 0))
    assert abs(d.x - math.sqrt(0.5)) < 1e-15 and abs(d.y - math.sqrt(0.5)) < 1e-15
    assert abs(flatten(d).lam - PI / 4) < 1e-15


@given(st.floats(-PI / 2 + 1e-6, PI / 2 - 1e-6))
def test_elevation_is_distance_on_vertical(zeta):
    p = flatten(from_theodolite(TheodoliteAngles(0.0, zeta)))
    assert abs(p.lam - abs(zeta)) <= 1e-12


@given(st.floats(-PI + 1e-6, PI), st.floats(-PI / 2 + 1e-6, PI / 2 - 1e-6))
def test_theodolite_round_trip(xi, zeta):
    a = to_theodolite(from_theodolite(TheodoliteAngles(xi, zeta)))
    assert abs(wrap_angle(a.xi - xi)) < 1e-9 and abs(a.zeta - zeta) < 1e-12


def test_measuring_lines():
    m = measuring_line(0.0)
    a, b = m.ends
    assert unflatten(a) == B and unflatten(b) == B
    assert m.point_at(PI / 2).xy == (PI / 2, 0.0)
    assert all(abs(x - y) < 1e-15 for x, y in zip(unflatten(m.point_at(-PI / 2)), L))
    v = measuring_line(PI / 2)
    assert all(abs(x - y) < 1e-15 for x, y in zip(unflatten(v.point_at(PI / 2)), U))
    m = measuring_line(PI / 6)
    p, q = m.point_at(0.3), m.point_at(0.3 - PI)
    assert all(abs(x + y) < 1e-12 for x, y in zip(unflatten(p), unflatten(q)))
    (f0, r0), (f1, r1) = m.radii()
    assert f0.lam == 0.0 and r0.is_blowup and r1.is_blowup


def test_equator_radius_exact():
    for t in np.linspace(-PI, PI, 97):
        assert flatten(UnitDirection(math.cos(t), 0.0, math.sin(t))).lam == PI / 2
