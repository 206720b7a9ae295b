"""Curves of constant elevation ("parallels") in the perspective disc."""

from __future__ import annotations

import math

import numpy as np

from ..errors import PoleElevation, TooFewKnots
from ..flattening import HALF_PI, PI, DiscPoint
from ..sphere import R, U, CircleSpan
from .antipodes import reflect_across_observer_plane
from .fatline import DEFAULT_K, fat_line_from_knots, measuring_line_points
from .lines import CircleConstruction, LineImagePath
from .primitives import arc_through

HORIZON_TOL = 1e-12


def _check_zeta(zeta: float) -> None:
    if not abs(zeta) < HALF_PI - 1e-12:
        raise PoleElevation(f"elevation {math.degrees(zeta):.6g} deg is a pole, not a parallel")


def parallel_anchor_points(zeta: float) -> tuple[DiscPoint, DiscPoint, DiscPoint]:
    """P_R, P and P_L: the equator crossings and the sagittal point of a
    parallel, all read off measuring lines."""
    _check_zeta(zeta)
    up = math.copysign(HALF_PI, zeta)
    return DiscPoint(HALF_PI, zeta), DiscPoint(abs(zeta), up), DiscPoint(HALF_PI, math.copysign(PI, zeta) - zeta)


def parallel_image(zeta: float, K: int = DEFAULT_K, azimuths=None) -> LineImagePath:
    """Image of the parallel at elevation `zeta` (radians), starting at P_R.

    The anterior half is the arc P_R P P_L. Its measuring-line points are
    mirrored through the observer's plane (midpoint rule) and joined by a
    fat line that runs from P_L back round to P_R. The horizon is a circle
    through F and comes out exact.
    """
    _check_zeta(zeta)
    if abs(zeta) <= HORIZON_TOL:
        cons = CircleConstruction.build(U)
        image, split = cons.pieces(CircleSpan(R, U, 2 * PI), K)
        ends = (DiscPoint(HALF_PI, 0.0), DiscPoint(HALF_PI, 0.0))
        return LineImagePath("parallel", image, ends, [], split, cons, zeta=0.0)
    pr, p, pl = parallel_anchor_points(zeta)
    arc = arc_through(pr.xy, p.xy, pl.xy)
    front = measuring_line_points(arc, K, azimuths)
    back = [reflect_across_observer_plane(DiscPoint.from_xy(*y)).xy for y in reversed(front)]
    posterior = fat_line_from_knots(back)
    image = [("anterior", arc), ("posterior", posterior)]
    return LineImagePath("parallel", image, (pr, pr), [], False, None, zeta=zeta)


def exact_parallel_points(zeta: float, K: int) -> list[DiscPoint]:
    """Exact anterior points of a parallel on K measuring lines spread evenly
    between P_R and P_L (the values a theodolite would give)."""
    _check_zeta(zeta)
    if K < 2:
        raise TooFewKnots("need at least two measuring lines")
    s, c = math.sin(zeta), math.cos(zeta)
    end = math.copysign(PI, zeta) - zeta
    out = []
    for phi in np.linspace(zeta, end, K):
        x = s * math.cos(phi) / math.sin(phi)
        y = math.sqrt(max(c * c - x * x, 0.0))
        lam = math.atan2(math.hypot(x, s), y)
        out.append(DiscPoint(lam, math.atan2(s, x)))
    return out


def reflected_parallel_knots(zeta: float, K: int) -> list[DiscPoint]:
    """Posterior knots obtained from exact anterior points by the midpoint rule."""
    return [reflect_across_observer_plane(p) for p in exact_parallel_points(zeta, K)]
