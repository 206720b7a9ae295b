"""Drawing primitives in disc coordinates (radians): circle arcs and
straight segments, plus the intersections a compass-and-ruler user makes."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import DuplicatePoints

TWO_PI = 2.0 * math.pi
COLLINEARITY_TOL = 1e-9
FLATNESS_TOL = 1e-7  # sagitta / chord below which an arc is drawn straight

Point2 = tuple[float, float]


def _angle_of(c, p) -> float:
    return math.atan2(p[1] - c[1], p[0] - c[0])


@dataclass(frozen=True)
class StraightSegment:
    a: Point2
    b: Point2

    def __post_init__(self):
        object.__setattr__(self, "a", (float(self.a[0]), float(self.a[1])))
        object.__setattr__(self, "b", (float(self.b[0]), float(self.b[1])))

    @property
    def start(self) -> Point2:
        return self.a

    @property
    def end(self) -> Point2:
        return self.b

    @property
    def length(self) -> float:
        return math.hypot(self.b[0] - self.a[0], self.b[1] - self.a[1])

    def point_at(self, f: float) -> Point2:
        return (self.a[0] + f * (self.b[0] - self.a[0]), self.a[1] + f * (self.b[1] - self.a[1]))

    def param_of(self, p) -> float:
        dx, dy = self.b[0] - self.a[0], self.b[1] - self.a[1]
        return ((p[0] - self.a[0]) * dx + (p[1] - self.a[1]) * dy) / (dx * dx + dy * dy)

    def sub(self, f0: float, f1: float) -> "StraightSegment":
        return StraightSegment(self.point_at(f0), self.point_at(f1))

    def reversed(self) -> "StraightSegment":
        return StraightSegment(self.b, self.a)

    def sample(self, n: int) -> np.ndarray:
        f = np.linspace(0.0, 1.0, n)[:, None]
        return np.asarray(self.a) + f * (np.asarray(self.b) - np.asarray(self.a))

    def distance(self, pts) -> np.ndarray:
        pts = np.asarray(pts, dtype=float).reshape(-1, 2)
        a = np.asarray(self.a)
        d = np.asarray(self.b) - a
        dd = float(d @ d)
        if dd == 0.0:
            return np.hypot(*(pts - a).T)
        f = np.clip((pts - a) @ d / dd, 0.0, 1.0)
        return np.hypot(*(pts - a - f[:, None] * d).T)


@dataclass(frozen=True)
class Arc:
    """Circle arc from `start_angle` to `end_angle` (angles about `center`).

    For counter-clockwise arcs end_angle > start_angle, for clockwise arcs
    end_angle < start_angle; |end - start| < 2 pi.
    """

    center: Point2
    radius: float
    start_angle: float
    end_angle: float

    def __post_init__(self):
        if not self.radius > 1e-12:
            raise ValueError("arc radius must be positive")
        object.__setattr__(self, "center", (float(self.center[0]), float(self.center[1])))

    @property
    def ccw(self) -> bool:
        return self.end_angle >= self.start_angle

    @property
    def sweep(self) -> float:
        return self.end_angle - self.start_angle

    def _at_angle(self, a: float) -> Point2:
        return (self.center[0] + self.radius * math.cos(a), self.center[1] + self.radius * math.sin(a))

    @property
    def start(self) -> Point2:
        return self._at_angle(self.start_angle)

    @property
    def end(self) -> Point2:
        return self._at_angle(self.end_angle)

    @property
    def length(self) -> float:
        return abs(self.sweep) * self.radius

    def point_at(self, f: float) -> Point2:
        return self._at_angle(self.start_angle + f * self.sweep)

    def param_of(self, p) -> float:
        """Fraction along the arc of the angular position of `p`. Values
        outside [0, 1] mean the point's angle lies beyond an end; they are
        folded to the nearer end of the complementary gap."""
        a = _angle_of(self.center, p)
        sw = self.sweep
        if sw >= 0:
            off = (a - self.start_angle) % TWO_PI
        else:
            off = (self.start_angle - a) % TWO_PI
        span = abs(sw)
        if span == 0.0:
            return 0.0
        if off <= span:
            return off / span
        gap = TWO_PI - span
        return 1.0 + (off - span) / span if off - span < gap / 2 else -(TWO_PI - off) / span

    def sub(self, f0: float, f1: float) -> "Arc":
        return Arc(self.center, self.radius,
                   self.start_angle + f0 * self.sweep, self.start_angle + f1 * self.sweep)

    def reversed(self) -> "Arc":
        return Arc(self.center, self.radius, self.end_angle, self.start_angle)

    def sample(self, n: int) -> np.ndarray:
        a = self.start_angle + np.linspace(0.0, 1.0, n) * self.sweep
        return np.stack([self.center[0] + self.radius * np.cos(a),
                         self.center[1] + self.radius * np.sin(a)], axis=-1)

    def distance(self, pts) -> np.ndarray:
        pts = np.asarray(pts, dtype=float).reshape(-1, 2)
        rel = pts - np.asarray(self.center)
        r = np.hypot(rel[:, 0], rel[:, 1])
        ang = np.arctan2(rel[:, 1], rel[:, 0])
        if self.sweep >= 0:
            off = np.mod(ang - self.start_angle, TWO_PI)
        else:
            off = np.mod(self.start_angle - ang, TWO_PI)
        inside = off <= abs(self.sweep)
        radial = np.abs(r - self.radius)
        ends = np.minimum(np.hypot(*(pts - np.asarray(self.start)).T),
                          np.hypot(*(pts - np.asarray(self.end)).T))
        return np.where(inside, radial, ends)


def triangle_area(p1, p2, p3) -> float:
    return 0.5 * abs((p2[0] - p1[0]) * (p3[1] - p1[1]) - (p2[1] - p1[1]) * (p3[0] - p1[0]))


def arc_through(p1, p2, p3, collinearity_tol: float = COLLINEARITY_TOL) -> Arc | StraightSegment:
    """Arc from p1 through p2 to p3.

    The centre is where the perpendicular bisectors of p1p2 and p2p3 meet.
    Nearly collinear triples give the straight segment p1 -> p3, as do
    arcs so flat that their centre could not be located reliably.
    """
    pts = [(float(p[0]), float(p[1])) for p in (p1, p2, p3)]
    for i in range(3):
        for j in range(i + 1, 3):
            if math.hypot(pts[i][0] - pts[j][0], pts[i][1] - pts[j][1]) <= 1e-12:
                raise DuplicatePoints(f"points {pts[i]} and {pts[j]} coincide")
    (x1, y1), (x2, y2), (x3, y3) = pts
    area = triangle_area(*pts)
    chord = math.hypot(x3 - x1, y3 - y1)
    if area < collinearity_tol or 2.0 * area < FLATNESS_TOL * chord * chord:
        return StraightSegment(pts[0], pts[2])
    # bisector of p1p2: (p2-p1).c = (|p2|^2-|p1|^2)/2, same for p2p3
    a11, a12 = x2 - x1, y2 - y1
    a21, a22 = x3 - x2, y3 - y2
    b1 = 0.5 * (x2 * x2 - x1 * x1 + y2 * y2 - y1 * y1)
    b2 = 0.5 * (x3 * x3 - x2 * x2 + y3 * y3 - y2 * y2)
    det = a11 * a22 - a12 * a21
    cx = (b1 * a22 - b2 * a12) / det
    cy = (a11 * b2 - a21 * b1) / det
    c = (cx, cy)
    r = math.hypot(x1 - cx, y1 - cy)
    a1 = _angle_of(c, pts[0])
    a3 = _angle_of(c, pts[2])
    if det > 0:  # p1 -> p2 -> p3 turns left: counter-clockwise
        end = a1 + (a3 - a1) % TWO_PI
    else:
        end = a1 - (a1 - a3) % TWO_PI
    return Arc(c, r, a1, end)


def ray_hits(piece, phi: float, tol: float = 1e-9) -> list[tuple[float, Point2]]:
    """Intersections of the ray from the disc centre at azimuth `phi` with a
    primitive, as (param, point) pairs sorted by param."""
    e = (math.cos(phi), math.sin(phi))
    out = []
    if isinstance(piece, Arc):
        c, r = piece.center, piece.radius
        b = e[0] * c[0] + e[1] * c[1]
        dc = math.hypot(c[0], c[1])
        k = (dc - r) * (dc + r)
        disc = b * b - k
        if disc < 0:
            if disc < -tol:
                return []
            disc = 0.0
        sq = math.sqrt(disc)
        # stable roots of t^2 - 2bt + k: huge flat arcs otherwise lose digits
        big = b + math.copysign(sq, b)
        small = k / big if big != 0.0 else 0.0
        for t in sorted((big, small)):
            if t < -tol:
                continue
            p = (t * e[0], t * e[1])
            f = piece.param_of(p)
            if -tol <= f <= 1 + tol:
                out.append((min(max(f, 0.0), 1.0), p))
    else:
        a, bb = piece.a, piece.b
        d = (bb[0] - a[0], bb[1] - a[1])
        den = e[0] * d[1] - e[1] * d[0]
        if abs(den) < 1e-15:
            return []
        # a + f d = t e
        f = (e[1] * a[0] - e[0] * a[1]) / den
        t = (d[0] * a[1] - d[1] * a[0]) / -den
        if t >= -tol and -tol <= f <= 1 + tol:
            f = min(max(f, 0.0), 1.0)
            out.append((f, piece.point_at(f)))
    out.sort()
    return out


def circle_intersections(c1, r1, c2, r2) -> list[Point2]:
    dx, dy = c2[0] - c1[0], c2[1] - c1[1]
    d = math.hypot(dx, dy)
    if d == 0 or d > r1 + r2 or d < abs(r1 - r2):
        return []
    a = (r1 * r1 - r2 * r2 + d * d) / (2 * d)
    h = math.sqrt(max(r1 * r1 - a * a, 0.0))
    mx, my = c1[0] + a * dx / d, c1[1] + a * dy / d
    return [(mx + h * dy / d, my - h * dx / d), (mx - h * dy / d, my + h * dx / d)]


def piece_intersections(p, q) -> list[Point2]:
    """Intersections between two primitives (arc/segment)."""
    out = []
    if isinstance(p, Arc) and isinstance(q, Arc):
        cands = circle_intersections(p.center, p.radius, q.center, q.radius)
    elif isinstance(p, StraightSegment) and isinstance(q, StraightSegment):
        (x1, y1), (x2, y2) = p.a, p.b
        (x3, y3), (x4, y4) = q.a, q.b
        den = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4)
        if abs(den) < 1e-15:
            return []
        t = ((x1 - x3) * (y3 - y4) - (y1 - y3) * (x3 - x4)) / den
        cands = [(x1 + t * (x2 - x1), y1 + t * (y2 - y1))]
    else:
        arc, seg = (p, q) if isinstance(p, Arc) else (q, p)
        a = np.asarray(seg.a)
        d = np.asarray(seg.b) - a
        rel = a - np.asarray(arc.center)
        qa, qb, qc = d @ d, 2 * rel @ d, rel @ rel - arc.radius ** 2
        disc = qb * qb - 4 * qa * qc
        if disc < 0:
            return []
        sq = math.sqrt(disc)
        cands = [tuple(a + t * d) for t in ((-qb - sq) / (2 * qa), (-qb + sq) / (2 * qa))]
    for c in cands:
        if float(p.distance([c])[0]) < 1e-7 and float(q.distance([c])[0]) < 1e-7:
            out.append((float(c[0]), float(c[1])))
    return out
