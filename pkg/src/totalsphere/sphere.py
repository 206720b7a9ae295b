"""Observer-centred geometry on the unit sphere.

The observer sits at the world origin. Axis convention: +y is the central
ray of sight (F), +x points right (R), +z points up (U).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import AtObserver, OffCircle, ThroughObserver

DEGENERACY_TOL = 1e-9

Vec3 = tuple[float, float, float]


def dot(a, b) -> float:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def cross(a, b) -> Vec3:
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def norm(a) -> float:
    return math.sqrt(dot(a, a))


def sub(a, b) -> Vec3:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def angle_between(a, b) -> float:
    """Angle between two vectors, accurate near 0 and pi (atan2 form)."""
    return math.atan2(norm(cross(a, b)), dot(a, b))


@dataclass(frozen=True)
class UnitDirection:
    x: float
    y: float
    z: float

    @classmethod
    def from_vector(cls, v, tol: float = 0.0) -> "UnitDirection":
        n = norm(v)
        if n <= tol or n == 0.0:
            raise AtObserver(f"zero-length vector {tuple(v)!r}")
        return cls(v[0] / n, v[1] / n, v[2] / n)

    def __iter__(self):
        yield self.x
        yield self.y
        yield self.z

    def __getitem__(self, i):
        return (self.x, self.y, self.z)[i]

    def __len__(self):
        return 3

    def __neg__(self) -> "UnitDirection":
        return UnitDirection(-self.x, -self.y, -self.z)

    def as_tuple(self) -> Vec3:
        return (self.x, self.y, self.z)


F = UnitDirection(0.0, 1.0, 0.0)
B = UnitDirection(0.0, -1.0, 0.0)
R = UnitDirection(1.0, 0.0, 0.0)
L = UnitDirection(-1.0, 0.0, 0.0)
U = UnitDirection(0.0, 0.0, 1.0)
D = UnitDirection(0.0, 0.0, -1.0)

REFERENCE_DIRECTIONS = {"F": F, "B": B, "L": L, "R": R, "U": U, "D": D}


def direction_of(point, tolerance: float = DEGENERACY_TOL) -> UnitDirection:
    """Ray of sight from the observer through `point`."""
    n = norm(point)
    if n <= tolerance:
        raise AtObserver(f"point {tuple(point)!r} is at the observer")
    return UnitDirection(point[0] / n, point[1] / n, point[2] / n)


def antipode(d: UnitDirection) -> UnitDirection:
    return -d


def anterior_orientation(d) -> UnitDirection:
    """Pick the sign of a line direction that points into the anterior side.

    Ties on the observer's plane go to +x, then +z.
    """
    d = UnitDirection(*d)
    for c in (d.y, d.x, d.z):
        if abs(c) > DEGENERACY_TOL:
            return d if c > 0 else -d
    return d


@dataclass(frozen=True)
class SpaceLine:
    point: Vec3
    dir: UnitDirection

    def __post_init__(self):
        object.__setattr__(self, "point", tuple(float(c) for c in self.point))
        if not isinstance(self.dir, UnitDirection):
            object.__setattr__(self, "dir", UnitDirection.from_vector(self.dir))

    def at(self, t: float) -> Vec3:
        p, d = self.point, self.dir
        return (p[0] + t * d.x, p[1] + t * d.y, p[2] + t * d.z)

    def foot(self) -> Vec3:
        """Point of the line nearest the observer."""
        return self.at(-dot(self.point, self.dir))


@dataclass(frozen=True)
class SpaceSegment:
    a: Vec3
    b: Vec3

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(float(c) for c in self.a))
        object.__setattr__(self, "b", tuple(float(c) for c in self.b))

    def line(self) -> SpaceLine:
        return SpaceLine(self.a, UnitDirection.from_vector(sub(self.b, self.a)))


@dataclass(frozen=True)
class SpacePlane:
    point: Vec3
    normal: UnitDirection

    def __post_init__(self):
        object.__setattr__(self, "point", tuple(float(c) for c in self.point))
        if not isinstance(self.normal, UnitDirection):
            object.__setattr__(self, "normal", UnitDirection.from_vector(self.normal))


@dataclass(frozen=True)
class GreatCircle:
    normal: UnitDirection
    degenerate: bool = False

    def same_as(self, other: "GreatCircle", tol: float = 1e-12) -> bool:
        return norm(cross(self.normal, other.normal)) <= tol

    def contains(self, d, tol: float = 1e-9) -> bool:
        return abs(dot(self.normal, d)) <= tol


@dataclass(frozen=True)
class SphereLineImage:
    v_plus: UnitDirection
    v_minus: UnitDirection
    circle: GreatCircle | None
    degenerate: bool


def vanishing_points_of_line(l: SpaceLine, tol: float = DEGENERACY_TOL) -> SphereLineImage:
    c = cross(l.point, l.dir)
    if norm(c) <= tol:
        # the line passes through O: its image is just the two antipodal points
        return SphereLineImage(l.dir, -l.dir, None, True)
    return SphereLineImage(l.dir, -l.dir, GreatCircle(UnitDirection.from_vector(c)), False)


def vanishing_line_of_plane(h: SpacePlane, tol: float = DEGENERACY_TOL) -> GreatCircle:
    """Vanishing circle of a plane; `degenerate` is set when the plane contains O."""
    through_o = abs(dot(h.point, h.normal)) < tol
    return GreatCircle(h.normal, degenerate=through_o)


@dataclass(frozen=True)
class CircleSpan:
    """A connected piece of a great circle: start direction rotated about
    `normal` by `sweep` radians (right-hand rule)."""

    start: UnitDirection
    normal: UnitDirection
    sweep: float
    _q: Vec3 = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if abs(dot(self.start, self.normal)) > 1e-9:
            raise OffCircle("span start is not on the circle's plane")
        object.__setattr__(self, "_q", cross(self.normal, self.start))

    def at(self, t: float) -> UnitDirection:
        c, s = math.cos(t), math.sin(t)
        a, q = self.start, self._q
        return UnitDirection.from_vector((c * a.x + s * q[0], c * a.y + s * q[1], c * a.z + s * q[2]))

    @property
    def end(self) -> UnitDirection:
        return self.at(self.sweep)

    def reversed(self) -> "CircleSpan":
        return CircleSpan(self.end, self.normal, -self.sweep)


def span_between(a, b, normal=None, via=None) -> CircleSpan:
    """Span from `a` to `b` along their great circle.

    Without `via` the minor arc is taken; `via` selects the side that
    contains that direction. Equal endpoints mean the full circle.
    """
    a = UnitDirection(*a)
    b = UnitDirection(*b)
    if normal is None:
        c = cross(a, b)
        if norm(c) <= 1e-12:
            if via is None:
                raise OffCircle("endpoints are parallel or antipodal; the circle needs `normal` or `via`")
            c = cross(a, via)
        normal = UnitDirection.from_vector(c)
    else:
        normal = UnitDirection(*normal)
    q = cross(normal, a)
    if abs(dot(b, normal)) > 1e-9:
        raise OffCircle("end direction is not on the circle")
    tb = math.atan2(dot(b, q), dot(b, a))
    if norm(sub(a, b)) <= 1e-12:
        tb = 2 * math.pi
    elif tb < 0:
        tb += 2 * math.pi
    if via is not None:
        if abs(dot(via, normal)) > 1e-9:
            raise OffCircle("via direction is not on the circle")
        tv = math.atan2(dot(via, q), dot(via, a))
        if tv < 0:
            tv += 2 * math.pi
        if tv > tb:
            tb -= 2 * math.pi
    elif math.pi < tb < 2 * math.pi:
        tb -= 2 * math.pi
    return CircleSpan(a, normal, tb)


def line_span(l: SpaceLine) -> CircleSpan:
    """The meridian of a line, from its vanishing direction +dir back to -dir."""
    img = vanishing_points_of_line(l)
    if img.degenerate:
        raise ThroughObserver("line passes through the observer")
    foot = direction_of(l.foot())
    return span_between(img.v_plus, img.v_minus, normal=img.circle.normal, via=foot)


def line_completion_span(l: SpaceLine) -> CircleSpan:
    """The other half of the line's great circle (from -dir back to +dir)."""
    img = vanishing_points_of_line(l)
    foot = direction_of(l.foot())
    return span_between(img.v_minus, img.v_plus, normal=img.circle.normal, via=-foot)


def segment_span(s: SpaceSegment, tol: float = DEGENERACY_TOL) -> CircleSpan:
    da = direction_of(s.a, tol)
    db = direction_of(s.b, tol)
    n = cross(s.a, s.b)
    if norm(n) <= tol * max(norm(s.a), norm(s.b), 1.0):
        raise ThroughObserver("segment is collinear with the observer")
    return span_between(da, db, normal=UnitDirection.from_vector(n))
