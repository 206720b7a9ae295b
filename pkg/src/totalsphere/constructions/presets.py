"""Ready-made grid scenes: a central floor grid, a tiled cubic room seen from
its centre, and a square rotated on a horizontal plane."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..errors import InvalidParams
from ..flattening import DiscPoint, flatten, to_theodolite
from ..sphere import F, L, R, U, D, SpaceLine, SpaceSegment, UnitDirection, cross, norm
from .fatline import DEFAULT_K
from .lines import LineImagePath, line_construction, line_image, segment_image
from .primitives import ray_hits

PRESET_DEFAULTS = {
    "central_grid": {"n": 5, "spacing": 1.0, "height": 1.0},
    "cubic_room": {"edge": 2.0, "div": 4},
    "rotated_square": {"cx": -2.0, "cy": -2.0, "cz": -1.0, "yaw_deg": 60.0, "side": 1.0},
}
INT_PARAMS = {"n", "div"}


@dataclass(frozen=True)
class Marker:
    """A labelled vanishing point. `point` is None for B, which is the whole
    blowup circle."""

    label: str
    point: DiscPoint | None
    xi_deg: float | None = None


@dataclass(frozen=True)
class PresetItem:
    geometry: SpaceLine | SpaceSegment
    role: str
    third: DiscPoint | None = None


@dataclass
class Preset:
    kind: str
    params: dict
    items: list[PresetItem]
    markers: list[Marker] = field(default_factory=list)


@dataclass
class PresetImage:
    preset: Preset
    paths: list[tuple[PresetItem, LineImagePath]]

    @property
    def markers(self) -> list[Marker]:
        return self.preset.markers


def _axis_markers(labels: str) -> list[Marker]:
    dirs = {"F": F, "L": L, "R": R, "U": U, "D": D}
    return [Marker(c, None if c == "B" else flatten(dirs[c])) for c in labels]


def resolve_params(kind: str, params: dict | None) -> dict:
    if kind not in PRESET_DEFAULTS:
        raise InvalidParams(f"unknown preset {kind!r}")
    out = dict(PRESET_DEFAULTS[kind])
    for k, v in (params or {}).items():
        if k not in out:
            raise InvalidParams(f"preset {kind} has no parameter {k!r}")
        if k in INT_PARAMS:
            if float(v) != int(float(v)):
                raise InvalidParams(f"{k} must be an integer")
            v = int(float(v))
        out[k] = float(v) if k not in INT_PARAMS else v
    return out


def _positive(params, *names):
    for n in names:
        if not params[n] > 0:
            raise InvalidParams(f"{n} must be positive, got {params[n]}")


def central_grid(n: int, spacing: float, height: float) -> Preset:
    """Floor grid of squares under the observer, aligned with F and R.

    Receding lines are the n lines x = const nearest the observer (one of
    them straight underneath). Frontal rows are located where the diagonal g
    (45 degrees to the right, through the point below the observer) crosses
    the receding lines, so their third points come off g's anterior arc.
    """
    params = {"n": n, "spacing": spacing, "height": height}
    if n < 1:
        raise InvalidParams("n must be at least 1")
    _positive(params, "spacing", "height")
    h, s = height, spacing
    first = -((n - 1) // 2)
    idx = range(first, first + n)
    items = [PresetItem(SpaceLine((i * s, 0.0, -h), F), "receding") for i in idx]
    g = SpaceLine((0.0, 0.0, -h), (1.0, 1.0, 0.0))
    items.append(PresetItem(g, "diagonal"))
    arc = line_construction(g).arc
    m = max(abs(i) for i in idx)
    for j in range(-m, m + 1):
        y = j * s
        if j == 0:
            items.append(PresetItem(SpaceLine((0.0, 0.0, -h), R), "frontal"))
            continue
        # G = (y, y, -h) on g; behind the observer use its antipodal direction
        phi = math.atan2(-h, y) if y > 0 else math.atan2(h, -y)
        hits = ray_hits(arc, phi)
        third = DiscPoint.from_xy(*hits[0][1]) if hits else None
        items.append(PresetItem(SpaceLine((0.0, y, -h), R), "frontal", third))
    return Preset("central_grid", params, items, _axis_markers("FLRB"))


def cubic_room(edge: float, div: int) -> Preset:
    """Tile lines of all six walls of a cube centred on the observer."""
    params = {"edge": edge, "div": div}
    _positive(params, "edge")
    if div < 1:
        raise InvalidParams("div must be at least 1")
    a = edge / 2
    ticks = [-a + k * edge / div for k in range(div + 1)]
    seen = set()
    items = []
    for face in range(3):
        for sign in (-1.0, 1.0):
            others = [ax for ax in range(3) if ax != face]
            for run, fixed in (others, others[::-1]):
                for c in ticks:
                    p, q = [0.0] * 3, [0.0] * 3
                    p[face] = q[face] = sign * a
                    p[fixed] = q[fixed] = c
                    p[run], q[run] = -a, a
                    key = tuple(round(v, 12) for v in p + q)
                    if key in seen:
                        continue
                    seen.add(key)
                    items.append(PresetItem(SpaceSegment(tuple(p), tuple(q)), "edge"))
    return Preset("cubic_room", params, items, _axis_markers("FBLRUD"))


def rotated_square(cx: float, cy: float, cz: float, yaw_deg: float, side: float) -> Preset:
    """Square on the plane z = cz, one side turned `yaw_deg` from F toward R.

    Its sides vanish on the horizontal measuring line at yaw, yaw - 180,
    yaw - 90 and yaw + 90 degrees.
    """
    params = {"cx": cx, "cy": cy, "cz": cz, "yaw_deg": yaw_deg, "side": side}
    _positive(params, "side")
    psi = math.radians(yaw_deg)
    d1 = (math.sin(psi), math.cos(psi), 0.0)
    d2 = (math.cos(psi), -math.sin(psi), 0.0)
    hs = side / 2
    corners = [
        tuple(c + hs * (u1 * e1 + u2 * e2) for c, e1, e2 in zip((cx, cy, cz), d1, d2))
        for u1, u2 in ((-1, -1), (1, -1), (1, 1), (-1, 1))
    ]
    items, markers = [], []
    for k in range(4):
        p = corners[k]
        d = d1 if k % 2 == 0 else d2
        if norm(cross(p, d)) <= 1e-9:
            raise InvalidParams("a side of the square runs through the observer")
        items.append(PresetItem(SpaceLine(p, d), "side"))
    for k in range(4):
        items.append(PresetItem(SpaceSegment(corners[k], corners[(k + 1) % 4]), "edge"))
    for d in (d1, d2):
        for sgn in (1.0, -1.0):
            u = UnitDirection(*(sgn * c for c in d))
            xi = math.degrees(to_theodolite(u).xi)
            markers.append(Marker(f"{xi:g}", flatten(u), xi))
    return Preset("rotated_square", params, items, markers)


_BUILDERS = {"central_grid": central_grid, "cubic_room": cubic_room, "rotated_square": rotated_square}


def preset_entities(kind: str, params: dict | None = None) -> Preset:
    return _BUILDERS[kind](**resolve_params(kind, params))


def generate_preset(kind: str, params: dict | None = None, K: int = DEFAULT_K) -> PresetImage:
    preset = preset_entities(kind, params)
    paths = []
    for item in preset.items:
        if isinstance(item.geometry, SpaceSegment):
            paths.append((item, segment_image(item.geometry, K, third=item.third)))
        else:
            paths.append((item, line_image(item.geometry, K, third=item.third)))
    return PresetImage(preset, paths)
