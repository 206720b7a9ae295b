"""Plotting antipodes and mirror images inside the perspective disc.

All of these work on the flat drawing alone (ruler, compass, pin); none of
them goes back to the sphere.
"""

from __future__ import annotations

import math

from ..errors import AtObserver, BlowupInput, CenterHasNoUniqueAntipode
from ..flattening import EPS_BLOWUP, HALF_PI, PI, DiscPoint, wrap_angle


class BlowupToken:
    """Stands for the whole blowup circle, i.e. the single direction B."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "BLOWUP"


BLOWUP = BlowupToken()
CENTER = DiscPoint(0.0, 0.0)


def _check(p: DiscPoint) -> None:
    if p.lam <= EPS_BLOWUP:
        raise CenterHasNoUniqueAntipode("the antipode of F is the whole blowup")
    if p.is_blowup:
        raise BlowupInput("blowup points all map to B, whose antipode is F")


def antipode_in_disc(p: DiscPoint) -> DiscPoint:
    """Antipode by the marked ruler: from P walk through F a distance equal
    to the disc radius."""
    _check(p)
    return DiscPoint(PI - p.lam, wrap_angle(p.theta + PI))


def antipode_in_disc_freehand(p: DiscPoint) -> DiscPoint:
    """Antipode by transporting |FP| back from the blowup.

    P_B is where ray P->F meets the blowup; the antipode sits |FP| from P_B
    toward F. Also checks the companion identity |antipode F| = |P (-P_B)|.
    """
    _check(p)
    u, w = p.xy
    fp = math.hypot(u, w)
    ux, uy = u / fp, w / fp
    pb = (-PI * ux, -PI * uy)
    q = (pb[0] + fp * ux, pb[1] + fp * uy)
    lhs = math.hypot(*q)
    rhs = math.hypot(u - PI * ux, w - PI * uy)
    if abs(lhs - rhs) > 1e-9:
        raise ArithmeticError(f"|antipode F| = {lhs} but |P (-P_B)| = {rhs}")
    return DiscPoint.from_xy(*q)


def antipode_or_blowup(p: DiscPoint):
    """Like antipode_in_disc, but total: F gives BLOWUP, blowup points give F."""
    if p.lam <= EPS_BLOWUP:
        return BLOWUP
    if p.is_blowup:
        return CENTER
    return antipode_in_disc(p)


def blowup_along(p: DiscPoint) -> DiscPoint:
    """P_B: the blowup point met by continuing ray P->F past F."""
    _check(p)
    return DiscPoint(PI, p.theta + PI)


def measuring_line_order(p: DiscPoint) -> list[float]:
    """Signed positions along P's measuring line (positive toward P) of
    -P_B, P, F, antipode, P_B."""
    q = antipode_in_disc(p)
    return [PI, p.lam, 0.0, -q.lam, -PI]


def equator_point(x: float, z: float) -> DiscPoint:
    """Image of a point on the observer's plane, by the back orthogonal view:
    the ray from F through (x, z) cut by the disc equator."""
    h = math.hypot(x, z)
    if h == 0.0:
        raise AtObserver("point on the observer's plane coincides with the observer")
    return DiscPoint(HALF_PI, math.atan2(z, x))


def reflect_across_observer_plane(p: DiscPoint) -> DiscPoint:
    """Mirror a point through the observer's plane by the midpoint rule.

    M is where ray F->P crosses the disc equator; the result Q makes M the
    midpoint of PQ.
    """
    u, w = p.xy
    r = math.hypot(u, w)
    if r <= EPS_BLOWUP:
        raise CenterHasNoUniqueAntipode("F mirrors to B")
    m = (HALF_PI * u / r, HALF_PI * w / r)
    return DiscPoint.from_xy(2 * m[0] - u, 2 * m[1] - w)
