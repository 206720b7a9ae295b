"""Exact sampling of flattened curves, error measurement of drawn paths, and
the reflecting-sphere comparison."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import EmptyInput, InvalidParams, ObserverInsideSphere, OffCircle, SpanMismatch
from .flattening import EPS_BLOWUP, PI, DiscPoint, flatten_array
from .sphere import B, CircleSpan, GreatCircle, cross, dot, span_between

DEFAULT_SAMPLES = 1024
SPAN_TOL = 0.05  # radians of disc distance allowed between path ends and the oracle


@dataclass
class SampledCurve:
    """Exact image samples in cartesian disc coordinates.

    `breaks` lists indices where a new connected piece starts; the
    flattening is only discontinuous at B, so these are the places the
    curve runs through B.
    """

    points: np.ndarray
    params: np.ndarray
    source: str = "custom"
    breaks: list[int] = field(default_factory=list)

    def __len__(self):
        return len(self.points)

    @property
    def disc_points(self) -> list[DiscPoint]:
        return [DiscPoint.from_xy(u, w) for u, w in self.points]

    def pieces(self) -> list[np.ndarray]:
        cuts = [0] + list(self.breaks) + [len(self.points)]
        return [self.points[a:b] for a, b in zip(cuts, cuts[1:]) if b > a]

    def reversed(self) -> "SampledCurve":
        n = len(self.points)
        return SampledCurve(self.points[::-1].copy(), self.params[::-1].copy(), self.source,
                            sorted(n - b for b in self.breaks))

    def select(self, mask) -> "SampledCurve":
        mask = np.asarray(mask, dtype=bool)
        idx = np.flatnonzero(mask)
        gaps = [k for k in range(1, len(idx)) if idx[k] != idx[k - 1] + 1]
        old = set(self.breaks)
        brk = sorted(set(gaps) | {k for k in range(1, len(idx)) if idx[k] in old})
        return SampledCurve(self.points[idx], self.params[idx], self.source, brk)


def _span_dirs(span: CircleSpan, t: np.ndarray) -> np.ndarray:
    a = np.asarray(span.start.as_tuple())
    q = np.asarray(cross(span.normal, span.start))
    return np.cos(t)[:, None] * a + np.sin(t)[:, None] * q


def sample_span(span: CircleSpan, n: int = DEFAULT_SAMPLES, source: str = "meridian") -> SampledCurve:
    """n samples evenly spaced in arc angle along a great-circle span."""
    if n < 2:
        raise InvalidParams("need at least two samples")
    t = np.linspace(0.0, span.sweep, n)
    dirs = _span_dirs(span, t)
    near_b = np.arccos(np.clip(-dirs[:, 1], -1.0, 1.0)) < EPS_BLOWUP
    keep = ~near_b
    pts = flatten_array(dirs)
    curve = SampledCurve(pts, t, source)
    breaks = []
    if abs(dot(B, span.normal)) < 1e-12:
        # the circle runs through B: cut where the span passes it
        q = cross(span.normal, span.start)
        tb = math.atan2(dot(B, q), dot(B, span.start))
        s = 1.0 if span.sweep >= 0 else -1.0
        tb = (s * tb) % (2 * PI)
        while tb < abs(span.sweep):
            k = int(np.searchsorted(s * t, tb, side="right"))
            if 0 < k < n:
                breaks.append(k)
            tb += 2 * PI
    curve.breaks = sorted(set(breaks))
    if not keep.all():
        curve = curve.select(keep)
    return curve


def sample_meridian(c: GreatCircle, from_dir, to_dir, n: int = DEFAULT_SAMPLES, via=None) -> SampledCurve:
    """Flattened samples of great circle `c` from one direction to another.

    Equal end directions give the whole circle; `via` picks the side.
    """
    for d in (from_dir, to_dir) + ((via,) if via is not None else ()):
        if not c.contains(d, 1e-9):
            raise OffCircle(f"direction {tuple(d)!r} is not on the circle")
    normal = c.normal
    if via is not None:
        # respect the side through `via` regardless of the normal's sign
        span = span_between(from_dir, to_dir, normal=normal, via=via)
    else:
        span = span_between(from_dir, to_dir, normal=normal)
    return sample_span(span, n, "meridian")


def sample_parallel(zeta: float, n: int = DEFAULT_SAMPLES, part: str = "full") -> SampledCurve:
    """Exact image of the parallel at elevation `zeta`, from its right equator
    crossing forward over F and round the back (`part`: full, anterior,
    posterior)."""
    spans = {"full": (0.5 * PI, -1.5 * PI), "anterior": (0.5 * PI, -0.5 * PI), "posterior": (-0.5 * PI, -1.5 * PI)}
    if part not in spans:
        raise InvalidParams(f"unknown part {part!r}")
    xi = np.linspace(*spans[part], n)
    cz, sz = math.cos(zeta), math.sin(zeta)
    dirs = np.stack([cz * np.sin(xi), cz * np.cos(xi), np.full_like(xi, sz)], axis=-1)
    curve = SampledCurve(flatten_array(dirs), xi, "parallel")
    if abs(sz) < 1e-15 and part != "anterior":
        k = int(np.searchsorted(-xi, PI, side="right"))
        curve.breaks = [k] if 0 < k < n else []
        near_b = np.abs(np.abs(xi) - PI) < EPS_BLOWUP
        if near_b.any():
            curve = curve.select(~near_b)
    return curve


def sample_antipodal_trace(piece, n: int = DEFAULT_SAMPLES) -> SampledCurve:
    """Antipodes of a drawn anterior piece: the curve a fat line built from
    it is trying to follow."""
    pts = piece.sample(n)
    r = np.hypot(pts[:, 0], pts[:, 1])
    keep = r > EPS_BLOWUP
    pts, r = pts[keep], r[keep]
    th = np.arctan2(pts[:, 1], pts[:, 0]) + PI
    out = np.stack([(PI - r) * np.cos(th), (PI - r) * np.sin(th)], axis=-1)
    return SampledCurve(out, np.linspace(0.0, 1.0, n)[keep], "antipodal")


@dataclass(frozen=True)
class ErrorReport:
    max_error: float
    mean_error: float
    argmax_parameter: float
    samples: int

    @property
    def max_deg(self) -> float:
        return math.degrees(self.max_error)

    @property
    def mean_deg(self) -> float:
        return math.degrees(self.mean_error)

    def row(self) -> str:
        return (f"max_deg={self.max_deg:.6f} mean_deg={self.mean_deg:.6f} "
                f"at_param={self.argmax_parameter:.6f} samples={self.samples}")


def _pieces_of(constructed) -> list:
    if hasattr(constructed, "image"):
        return [p for _, p in constructed.image]
    if hasattr(constructed, "arcs"):
        return list(constructed.arcs)
    if isinstance(constructed, (list, tuple)):
        out = []
        for c in constructed:
            out.extend(_pieces_of(c))
        return out
    return [constructed]


def path_distance(constructed, pts) -> np.ndarray:
    pieces = _pieces_of(constructed)
    if not pieces:
        raise EmptyInput("constructed path has no pieces")
    pts = np.asarray(pts, dtype=float).reshape(-1, 2)
    return np.min([p.distance(pts) for p in pieces], axis=0)


def polyline_distance(poly: np.ndarray, pts) -> np.ndarray:
    """Distance from points to a polyline (no segment across breaks)."""
    pts = np.asarray(pts, dtype=float).reshape(-1, 2)
    a, b = poly[:-1], poly[1:]
    if len(a) == 0:
        return np.hypot(*(pts - poly[0]).T)
    d = b - a
    dd = np.einsum("ij,ij->i", d, d)
    dd[dd == 0] = 1.0
    rel = pts[:, None, :] - a[None, :, :]
    f = np.clip(np.einsum("kij,ij->ki", rel, d) / dd, 0.0, 1.0)
    near = a[None] + f[..., None] * d[None]
    return np.hypot(*(pts[:, None, :] - near).transpose(2, 0, 1)).min(axis=1)


def _curve_distance(curve: SampledCurve, pts) -> np.ndarray:
    return np.min([polyline_distance(p, pts) for p in curve.pieces()], axis=0)


def angular_error(constructed, exact: SampledCurve, span_tol: float | None = SPAN_TOL) -> ErrorReport:
    """Disc distance from each exact sample to the nearest point of the drawn
    path. With `span_tol` set, both curves must start and end together."""
    if exact is None or len(exact) == 0:
        raise EmptyInput("exact curve has no samples")
    pieces = _pieces_of(constructed)
    if not pieces:
        raise EmptyInput("constructed path has no pieces")
    err = path_distance(pieces, exact.points)
    if span_tol is not None:
        ends = np.array([p.start for p in pieces] + [p.end for p in pieces], dtype=float)
        gap = _curve_distance(exact, ends).max()
        first_last = err[[0, -1]].max()
        if max(gap, first_last) > span_tol:
            raise SpanMismatch(f"drawn path and exact curve cover different spans (gap {gap:.3g})")
    k = int(np.argmax(err))
    return ErrorReport(float(err[k]), float(err.mean()), float(exact.params[k]), len(exact))


def exact_curve_for(path, n: int = DEFAULT_SAMPLES) -> SampledCurve:
    """The oracle matching a drawn image (line, segment, plane or parallel)."""
    if path.zeta is not None:
        return sample_parallel(path.zeta, n)
    if path.span is None:
        raise EmptyInput("path carries no span to sample")
    return sample_span(path.span, n)


def error_by_part(path, n: int = DEFAULT_SAMPLES) -> dict[str, ErrorReport]:
    """Errors of a drawn image against its exact curve, overall and per half."""
    exact = exact_curve_for(path, n)
    out = {"all": angular_error(path, exact)}
    dirs_y = np.cos(np.hypot(exact.points[:, 0], exact.points[:, 1]))
    for part, mask in (("anterior", dirs_y >= -1e-12), ("posterior", dirs_y <= 1e-12)):
        pieces = [p for q, p in path.image if q == part]
        if pieces and mask.any():
            out[part] = angular_error(pieces, exact.select(mask), span_tol=None)
    return out


def reflection_limit_map(lam: float, theta: float) -> tuple[float, float]:
    """Where a direction lands in the image of a far-away mirror ball
    (unit rim)."""
    if not 0.0 <= lam <= PI:
        raise InvalidParams(f"lambda {lam} outside [0, pi]")
    s = math.sin(lam / 2)
    return (s * math.cos(theta), s * math.sin(theta))


def reflection_fov(r: float, d: float) -> float:
    """Field of view in degrees seen in a mirror ball of radius r whose
    centre is at distance d."""
    if not r > 0 or not d > 0:
        raise InvalidParams("radius and distance must be positive")
    if r > d:
        raise ObserverInsideSphere("observer is inside the sphere")
    return 360.0 - math.degrees(2.0 * math.asin(r / d))


@dataclass(frozen=True)
class RadialProfiles:
    """Radius against angle from F for the equidistant disc and for the
    mirror-ball limit. With `normalized` both rims are 1."""

    rows: tuple
    normalized: bool

    @property
    def bounded(self) -> bool:
        """sin(l/2) <= l/2 <= l on every row (raw profiles)."""
        return all(math.sin(l / 2) <= l / 2 + 1e-15 and l / 2 <= l for l, _, _ in self.rows)

    @property
    def monotone(self) -> bool:
        eq = [r[1] for r in self.rows]
        rf = [r[2] for r in self.rows]
        return all(b > a for a, b in zip(eq, eq[1:])) and all(b > a for a, b in zip(rf, rf[1:]))


def compare_radial_profiles(n: int, normalized: bool = False) -> RadialProfiles:
    if n < 2:
        raise InvalidParams("need at least two rows")
    rows = []
    for lam in np.linspace(0.0, PI, n):
        lam = float(lam)
        eq = lam / PI if normalized else lam
        rows.append((lam, eq, math.sin(lam / 2)))
    return RadialProfiles(tuple(rows), normalized)
