"""Fat lines: chains of overlapping three-point arcs through plotted knots."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import AnteriorNotMeridian, TooFewKnots
from ..flattening import HALF_PI, DiscPoint
from .antipodes import antipode_in_disc
from .primitives import StraightSegment, arc_through, ray_hits

DEFAULT_K = 8
TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class FatLine:
    arcs: tuple
    knots: tuple
    fatness: float

    @property
    def start(self):
        return self.knots[0]

    @property
    def end(self):
        return self.knots[-1]

    def distance(self, pts) -> np.ndarray:
        return np.min([a.distance(pts) for a in self.arcs], axis=0)

    def sample(self, n: int) -> np.ndarray:
        per = max(2, n // len(self.arcs))
        return np.concatenate([a.sample(per) for a in self.arcs])

    def reversed(self) -> "FatLine":
        return FatLine(tuple(a.reversed() for a in reversed(self.arcs)),
                       tuple(reversed(self.knots)), self.fatness)


def _dedupe(knots, tol=1e-12):
    out = []
    for k in knots:
        k = (float(k[0]), float(k[1]))
        if not out or math.hypot(k[0] - out[-1][0], k[1] - out[-1][1]) > tol:
            out.append(k)
    return out


def _spread(a, b, k_from, k_to, n=48) -> float:
    """Largest gap between arcs a and b over their shared stretch k_from..k_to."""
    fa = a.param_of(k_from), a.param_of(k_to)
    fb = b.param_of(k_from), b.param_of(k_to)
    sa = a.sub(*fa).sample(n)
    sb = b.sub(*fb).sample(n)
    return float(max(b.distance(sa).max(), a.distance(sb).max()))


def fat_line_from_knots(knots) -> FatLine:
    knots = _dedupe(knots)
    if len(knots) < 3:
        raise TooFewKnots(f"a fat line needs at least 3 distinct knots, got {len(knots)}")
    arcs = tuple(arc_through(knots[i], knots[i + 1], knots[i + 2]) for i in range(len(knots) - 2))
    fat = 0.0
    for i in range(len(arcs) - 1):
        fat = max(fat, _spread(arcs[i], arcs[i + 1], knots[i + 1], knots[i + 2]))
    return FatLine(arcs, tuple(knots), fat)


def _azimuth(p) -> float:
    return math.atan2(p[1], p[0])


def azimuth_sweep(piece) -> tuple[float, float]:
    """Start azimuth and signed azimuth sweep of a primitive as seen from F."""
    a0 = _azimuth(piece.start)
    a1 = _azimuth(piece.end)
    am = _azimuth(piece.point_at(0.5))
    ccw = (a1 - a0) % TWO_PI
    if (am - a0) % TWO_PI <= ccw:
        return a0, ccw
    return a0, ccw - TWO_PI


def measuring_line_points(piece, K: int = DEFAULT_K, azimuths=None) -> list[tuple[float, float]]:
    """Where measuring lines cut `piece`, ordered along it; the piece's ends
    are always included.

    Without `azimuths`, K lines are spread evenly over the azimuth span.
    """
    if isinstance(piece, StraightSegment) and piece.distance([(0.0, 0.0)])[0] < 1e-9:
        raise AnteriorNotMeridian("a path through F has no antipodal curve in the disc")
    a0, sweep = azimuth_sweep(piece)
    if azimuths is None:
        if K < 3:
            raise TooFewKnots(f"K must be at least 3, got {K}")
        wanted = [(k / (K - 1), a0 + sweep * k / (K - 1)) for k in range(1, K - 1)]
    else:
        wanted = []
        for phi in azimuths:
            off = (phi - a0) % TWO_PI if sweep >= 0 else (a0 - phi) % TWO_PI
            if 0.0 < off < abs(sweep):
                wanted.append((off / abs(sweep), phi))
    pts = [(0.0, piece.start)]
    for guess, phi in wanted:
        hits = ray_hits(piece, phi)
        if hits:
            pts.append(min(hits, key=lambda h: abs(h[0] - guess)))
        elif azimuths is None:
            # line grazes the piece: mark the point by eye along the arc
            pts.append((guess, piece.point_at(guess)))
    pts.append((1.0, piece.end))
    pts.sort(key=lambda fp: fp[0])
    return [p for _, p in pts]


def _check_anterior(piece, tol=1e-9):
    r = np.hypot(*piece.sample(65).T)
    # points on huge arcs carry rounding of order radius * eps
    slack = tol + 4e-16 * getattr(piece, "radius", 0.0)
    if r.max() > HALF_PI + slack:
        raise AnteriorNotMeridian("path leaves the anterior disc")


def fat_line(anterior, K: int = DEFAULT_K, azimuths=None) -> FatLine:
    """Posterior counterpart of an anterior path.

    Cuts the anterior path with measuring lines, takes the antipode of each
    cut with the marked ruler, and threads arcs through successive triples.
    """
    _check_anterior(anterior)
    front = measuring_line_points(anterior, K, azimuths)
    knots = [antipode_in_disc(DiscPoint.from_xy(*y)).xy for y in front]
    return fat_line_from_knots(knots)
