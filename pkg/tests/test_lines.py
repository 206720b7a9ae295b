import math

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from totalsphere import analysis
from totalsphere.constructions import (
    Arc, StraightSegment, classify_line, construct_anterior_point, fat_line, fat_line_from_knots,
    frontal_line_anterior, frontal_posterior_line_image, line_image, measuring_line_points,
    plane_image, receding_line_image, segment_image,
)
from totalsphere.errors import (
    AnteriorNotMeridian, FrontalLine, NotFrontal, NotPosterior, ThroughObserver, TooFewKnots,
)
from totalsphere.flattening import PI, DiscPoint, flatten, unflatten
from totalsphere.sphere import (
    F, U, SpaceLine, SpacePlane, SpaceSegment, UnitDirection, anterior_orientation, antipode,
)

# Bound on drawn-vs-exact error for the well-conditioned lines used below.
# Nearly central circles can be far worse: evenly spaced azimuths crowd the
# knots next to F and leave the posterior middle bare.
ARC_BOUND_DEG = 2.0

coord = st.floats(-5, 5)
vec = st.tuples(coord, coord, coord)


def _sinc(r):
    return math.sin(r) / r if r > 1e-12 else 1.0


def on_piece(piece, p, tol=1e-9):
    return piece.distance([p])[0] <= tol


def test_classify_line():
    assert classify_line(SpaceLine((1, 1, 1), (2, 2, 2))) == "degenerate"
    assert classify_line(SpaceLine((1, 0, 0), (0, 1, 0))) == "central"
    assert classify_line(SpaceLine((0, 1, 0), (1, 0, 1))) == "frontal"
    assert classify_line(SpaceLine((0, 1, 0), (1, 1, 0))) == "receding"


def test_horizontal_frontal_line_in_front():
    l = SpaceLine((0, 1, -1), (1, 0, 0))
    p = line_image(l)
    assert p.kind == "frontal" and p.construction.third_source == "sagittal"
    arc, = p.anterior
    assert isinstance(arc, Arc) and p.posterior == []
    assert np.allclose(arc.start, (PI / 2, 0), atol=1e-12)
    assert np.allclose(arc.end, (-PI / 2, 0), atol=1e-12)
    sag = flatten(UnitDirection.from_vector((0, 1, -1)))
    assert on_piece(arc, sag.xy)
    assert abs(sag.lam - PI / 4) < 1e-15
    assert analysis.error_by_part(p)["all"].max_deg < ARC_BOUND_DEG
    assert [part for part, _ in p.completion] == ["posterior"]


def test_frontal_line_behind_is_fat_line():
    p = frontal_posterior_line_image(SpaceLine((0, -1, -1), (1, 0, 0)))
    assert p.anterior == [] and len(p.posterior) == 1
    fl = p.posterior[0]
    assert len(fl.knots) == 8
    assert np.allclose(fl.start, (PI / 2, 0), atol=1e-12)
    assert analysis.error_by_part(p)["posterior"].max_deg < ARC_BOUND_DEG


def test_frontal_errors():
    with pytest.raises(NotFrontal):
        frontal_line_anterior(SpaceLine((0, 1, 0), (1, 1, 0)))
    with pytest.raises(ThroughObserver):
        frontal_line_anterior(SpaceLine((0, 0, 0), (1, 0, 0)))
    with pytest.raises(NotPosterior):
        frontal_posterior_line_image(SpaceLine((0, 1, -1), (1, 0, 0)))
    with pytest.raises(FrontalLine):
        receding_line_image(SpaceLine((0, 1, -1), (1, 0, 0)))


def test_frontal_through_central_ray_is_diameter():
    piece = frontal_line_anterior(SpaceLine((0, 1, 0), (0, 0, 1)))
    assert isinstance(piece, StraightSegment)
    assert np.allclose(sorted([piece.start, piece.end]), [(0, -PI / 2), (0, PI / 2)], atol=1e-12)


def test_frontal_on_observer_plane_is_equator():
    p = line_image(SpaceLine((3, 0, 0), (0, 0, 1)))
    assert p.construction.kind == "equator"
    arc, = p.anterior
    assert abs(arc.radius - PI / 2) < 1e-15 and abs(abs(arc.sweep) - PI) < 1e-12


def test_receding_line_uses_vanishing_point():
    l = SpaceLine((2, 1, -1), (1, 1, 0.5))
    p = receding_line_image(l)
    assert p.construction.third_source == "vanishing"
    v = flatten(anterior_orientation(l.dir))
    assert on_piece(p.construction.arc, v.xy)
    assert np.allclose(p.endpoints[0].xy, v.xy, atol=1e-12)
    assert [part for part, _ in p.image] == ["anterior", "posterior"]
    assert analysis.error_by_part(p)["all"].max_deg < ARC_BOUND_DEG


def test_central_lines_are_exact():
    p = line_image(SpaceLine((1, 0, -1), (0, 1, 0)))
    assert p.construction.kind == "central"
    assert all(isinstance(s, StraightSegment) for s in p.pieces)
    assert analysis.error_by_part(p)["all"].max_error < 1e-12


def test_line_through_observer_rejected():
    with pytest.raises(ThroughObserver):
        line_image(SpaceLine((1, 2, 3), (1, 2, 3)))


@settings(max_examples=40, deadline=None)
@given(vec, vec)
def test_line_image_endpoints_are_vanishing_points(p, d):
    assume(math.hypot(*d) > 0.5)
    l = SpaceLine(p, d)
    assume(classify_line(l) in ("receding", "frontal"))
    img = line_image(l)
    start, end = img.endpoints
    for q, v in ((start, l.dir), (end, tuple(-c for c in l.dir))):
        if v[1] > -1 + 1e-9:
            assert math.dist(q.xy, flatten(UnitDirection.from_vector(v)).xy) < 1e-9
    # the drawn path meets each end's measuring line; only an arc through
    # the vanishing point itself hits it exactly
    for q, c in ((start, img.pieces[0].start), (end, img.pieces[-1].end)):
        if q.is_blowup:
            continue
        # c lies on the measuring line through q, measured on the sphere since
        # the disc stretches azimuth errors without bound near the rim; circles
        # flat enough to be drawn as diameters miss by about the flatness tolerance
        assert abs(c[0] * math.sin(q.theta) - c[1] * math.cos(q.theta)) * _sinc(math.hypot(*c)) < 1e-6
        if img.construction.third_source == "vanishing" and math.dist(q.xy, img.construction.third.xy) < 1e-12:
            assert math.dist(c, q.xy) < 1e-9


def test_segment_behind_observer():
    s = segment_image(SpaceSegment((1, -1, 0.3), (-1, -1, 0.3)))
    assert [part for part, _ in s.image] == ["posterior"]
    a, b = s.endpoints
    assert math.dist(a.xy, flatten(UnitDirection.from_vector((1, -1, 0.3))).xy) < 1e-12
    assert math.dist(b.xy, flatten(UnitDirection.from_vector((-1, -1, 0.3))).xy) < 1e-12
    assert analysis.error_by_part(s)["all"].max_deg < ARC_BOUND_DEG


def test_segment_crossing_observer_plane():
    s = segment_image(SpaceSegment((0.1, -1, 0), (0.1, 1, 0)))
    assert s.construction.kind == "central"
    assert [part for part, _ in s.image] == ["posterior", "anterior"]


def test_plane_image():
    p = plane_image(SpacePlane((0, 0, -1), U))
    assert p.construction.kind == "central" and not p.degenerate
    p = plane_image(SpacePlane((0, 2, 0), F))
    assert p.construction.kind == "equator"
    p = plane_image(SpacePlane((0, 0, 0), (0, 1, 1)))
    assert p.degenerate
    assert analysis.error_by_part(p)["all"].max_deg < ARC_BOUND_DEG


def test_construct_anterior_point_near_exact():
    d = UnitDirection.from_vector((0.3, 0.8, 0.4))
    got = construct_anterior_point(d)
    want = flatten(d)
    assert math.degrees(math.dist(got.xy, want.xy)) < 0.5
    assert construct_anterior_point(F) == DiscPoint(0.0, 0.0)
    with pytest.raises(NotFrontal):
        construct_anterior_point((0, -1, 0.2))


# fat lines

def test_fat_line_from_knots():
    knots = [(math.cos(t), math.sin(t)) for t in np.linspace(0, PI, 5)]
    fl = fat_line_from_knots(knots)
    assert len(fl.arcs) == 3
    assert fl.fatness < 1e-12
    assert fl.start == knots[0] and fl.end == knots[-1]
    r = fl.reversed()
    assert r.start == knots[-1]
    with pytest.raises(TooFewKnots):
        fat_line_from_knots([(0, 0), (1, 0), (1, 0)])


def test_measuring_line_points_even_azimuths():
    arc = Arc((0, 0), 1.0, 0.0, PI / 2)
    pts = measuring_line_points(arc, 4)
    ang = [math.degrees(math.atan2(p[1], p[0])) for p in pts]
    assert np.allclose(ang, [0, 30, 60, 90])
    pts = measuring_line_points(arc, azimuths=[math.radians(45), math.radians(120)])
    assert len(pts) == 3
    with pytest.raises(TooFewKnots):
        measuring_line_points(arc, 2)
    with pytest.raises(AnteriorNotMeridian):
        measuring_line_points(StraightSegment((-1, 0), (1, 0)))


def test_fat_line_knots_are_antipodes_of_arc_points():
    arc = line_image(SpaceLine((0, 1, -1), (1, 0, 0))).anterior[0]
    fl = fat_line(arc, 8)
    front = measuring_line_points(arc, 8)
    assert len(fl.knots) == 8
    for y, k in zip(front, fl.knots):
        want = flatten(antipode(unflatten(DiscPoint.from_xy(*y))))
        assert math.dist(k, want.xy) < 1e-9


def test_fat_line_rejects_posterior_input():
    with pytest.raises(AnteriorNotMeridian):
        fat_line(Arc((0, 0), 2.0, 0.0, 1.0))


def test_fat_line_refines_with_more_knots():
    arc = line_image(SpaceLine((0, 1, -1), (1, 0, 0))).anterior[0]
    trace = analysis.sample_antipodal_trace(arc)
    errs = [analysis.angular_error(fat_line(arc, k), trace).max_error for k in (4, 8, 16)]
    assert errs[0] > errs[1] > errs[2]


@pytest.mark.parametrize("d", [(1, 0, 0), (1, 1, 0.25), (1, 1e-7, 1)])
def test_line_grazing_observer_falls_back_to_diameter(d):
    img = line_image(SpaceLine((0, 1e-7, 0), d))
    assert img.construction.kind == "central"
    assert all(isinstance(p, StraightSegment) for p in img.pieces)


def test_nearly_frontal_crossing_behind_is_mirrored():
    # p.y = 0 but the sagittal crossing sits just behind the observer
    l = SpaceLine((1.49106, 0.0, -5.26886e-06), (4.0447, 5.89e-12, 0.0))
    img = line_image(l)
    assert img.construction.third_source == "sagittal"
    assert img.construction.third.lam < PI / 2
    assert all(np.hypot(*p.sample(65).T).max() <= PI / 2 + 1e-9 for p in img.anterior)


@pytest.mark.parametrize("p, d", [
    ((0.5, -1.0, -4.002e-08), (-3.55048, -9.3371e-07, -2.8176e-05)),
    ((-2.44342, 0.5, 0.0), (1.0, -2.07688e-07, 7.71111e-07)),
    ((4.9046e-10, 2.0, 2.0), (7.5495e-05, -3.0379e-08, 2.04554)),
    ((-3.2884e-11, -3.5558e-07, -2.5527), (-1.8712e-07, 0.5, 2.56608)),
])
def test_nearly_degenerate_lines_still_draw(p, d):
    img = line_image(SpaceLine(p, d))
    assert img.pieces
    start, end = img.endpoints
    assert math.dist(start.xy, flatten(UnitDirection.from_vector(d)).xy) < 1e-9
