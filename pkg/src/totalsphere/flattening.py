"""Azimuthal-equidistant flattening of the sphere of directions.

A direction at angle ``lam`` from F and azimuth ``theta`` (from R toward U)
lands at distance ``lam`` from the disc centre, along azimuth ``theta``. The
disc has radius pi; its boundary is the blowup of B.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AtBlowup, AtObserver
from .sphere import B, DEGENERACY_TOL, UnitDirection

PI = math.pi
TWO_PI = 2.0 * math.pi
HALF_PI = 0.5 * math.pi
EPS_BLOWUP = 1e-9


def wrap_angle(a: float) -> float:
    """Wrap to (-pi, pi]."""
    r = math.remainder(a, TWO_PI)
    return PI if r <= -PI else r


@dataclass(frozen=True)
class DiscPoint:
    lam: float
    theta: float = 0.0

    def __post_init__(self):
        lam = float(self.lam)
        if not (-1e-12 <= lam <= PI + 1e-9):
            raise ValueError(f"lambda {lam!r} outside [0, pi]")
        lam = min(max(lam, 0.0), PI)
        theta = 0.0 if lam == 0.0 else wrap_angle(float(self.theta))
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "theta", theta)

    @property
    def is_blowup(self) -> bool:
        return self.lam >= PI - EPS_BLOWUP

    @property
    def xy(self) -> tuple[float, float]:
        return (self.lam * math.cos(self.theta), self.lam * math.sin(self.theta))

    @classmethod
    def from_xy(cls, u: float, w: float) -> "DiscPoint":
        lam = math.hypot(u, w)
        if lam > PI + 1e-9:
            raise ValueError(f"({u}, {w}) lies outside the perspective disc")
        return cls(min(lam, PI), math.atan2(w, u) if lam > 0 else 0.0)


@dataclass(frozen=True)
class NaturalCoords:
    rho: float
    lam: float
    theta: float


@dataclass(frozen=True)
class TheodoliteAngles:
    xi: float
    zeta: float


def flatten(d) -> DiscPoint:
    x, y, z = d
    h = math.hypot(x, z)
    lam = math.atan2(h, y)
    if PI - lam < EPS_BLOWUP:
        raise AtBlowup("direction is at B; give the approach azimuth explicitly")
    return DiscPoint(lam, math.atan2(z, x) if h > 0.0 else 0.0)


def blowup_point(theta: float) -> DiscPoint:
    """The point of the blowup circle approached along azimuth `theta`."""
    return DiscPoint(PI, theta)


def unflatten(p: DiscPoint) -> UnitDirection:
    if p.is_blowup:
        return B
    s = math.sin(p.lam)
    return UnitDirection(s * math.cos(p.theta), math.cos(p.lam), s * math.sin(p.theta))


def flatten_array(dirs) -> np.ndarray:
    """Vectorised flatten of an (N, 3) array of unit vectors to (N, 2) cartesian
    disc coordinates. Directions at B are not rejected here."""
    dirs = np.asarray(dirs, dtype=float)
    x, y, z = dirs[..., 0], dirs[..., 1], dirs[..., 2]
    h = np.hypot(x, z)
    lam = np.arctan2(h, y)
    theta = np.arctan2(z, x)
    return np.stack([lam * np.cos(theta), lam * np.sin(theta)], axis=-1)


def polar_array(dirs) -> tuple[np.ndarray, np.ndarray]:
    dirs = np.asarray(dirs, dtype=float)
    x, y, z = dirs[..., 0], dirs[..., 1], dirs[..., 2]
    h = np.hypot(x, z)
    return np.arctan2(h, y), np.where(h > 0, np.arctan2(z, x), 0.0)


def unflatten_array(lam, theta) -> np.ndarray:
    lam = np.asarray(lam, dtype=float)
    theta = np.asarray(theta, dtype=float)
    s = np.sin(lam)
    out = np.stack([s * np.cos(theta), np.cos(lam), s * np.sin(theta)], axis=-1)
    out[lam >= PI - EPS_BLOWUP] = (0.0, -1.0, 0.0)
    return out


def unflatten_xy(xy) -> np.ndarray:
    xy = np.asarray(xy, dtype=float)
    lam = np.hypot(xy[..., 0], xy[..., 1])
    return unflatten_array(lam, np.arctan2(xy[..., 1], xy[..., 0]))


def to_natural(point, tolerance: float = DEGENERACY_TOL) -> NaturalCoords:
    x, y, z = point
    rho = math.sqrt(x * x + y * y + z * z)
    if rho <= tolerance:
        raise AtObserver("the observer has no spherical coordinates")
    h = math.hypot(x, z)
    # same angle as arccos(y / rho) but well conditioned near F and B
    lam = math.atan2(h, y)
    theta = wrap_angle(math.atan2(z, x)) if h > 0.0 else 0.0
    return NaturalCoords(rho, lam, theta)


def from_theodolite(a: TheodoliteAngles) -> UnitDirection:
    cz = math.cos(a.zeta)
    return UnitDirection(cz * math.sin(a.xi), cz * math.cos(a.xi), math.sin(a.zeta))


def to_theodolite(d) -> TheodoliteAngles:
    x, y, z = d
    return TheodoliteAngles(math.atan2(x, y), math.atan2(z, math.hypot(x, y)))


@dataclass(frozen=True)
class MeasuringLine:
    """A diameter of the disc. Signed distance along it equals the angle at
    the observer measured through F."""

    theta: float

    @property
    def ends(self) -> tuple[DiscPoint, DiscPoint]:
        return (DiscPoint(PI, self.theta), DiscPoint(PI, self.theta + PI))

    def radii(self) -> tuple[tuple[DiscPoint, DiscPoint], tuple[DiscPoint, DiscPoint]]:
        f = DiscPoint(0.0, 0.0)
        a, b = self.ends
        return ((f, a), (f, b))

    def point_at(self, s: float) -> DiscPoint:
        """Point at signed distance `s` in [-pi, pi] from the centre."""
        if s >= 0:
            return DiscPoint(s, self.theta)
        return DiscPoint(-s, self.theta + PI)


def measuring_line(theta: float) -> MeasuringLine:
    return MeasuringLine(wrap_angle(theta))


def disc_distance(p: DiscPoint, q: DiscPoint) -> float:
    (a, b), (c, d) = p.xy, q.xy
    return math.hypot(a - c, b - d)
