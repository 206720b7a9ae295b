"""Scene files: one entity per line.

    point x y z
    segment x1 y1 z1 x2 y2 z2
    line px py pz dx dy dz
    plane px py pz nx ny nz
    parallel zeta_deg
    preset central_grid n=5 spacing=1 height=1

Any line may end with ``style=<token>``; ``#`` starts a comment. Coordinates
are relative to the observer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .constructions.presets import resolve_params
from .errors import InvalidParams, ParseError

STYLE_TOKENS = ("black", "gray", "accent", "dashed")

Vec3 = tuple[float, float, float]


@dataclass(frozen=True)
class Point3:
    point: Vec3
    style: str | None = None
    lineno: int = 0
    kind = "point"


@dataclass(frozen=True)
class Segment3:
    a: Vec3
    b: Vec3
    style: str | None = None
    lineno: int = 0
    kind = "segment"


@dataclass(frozen=True)
class Line3:
    point: Vec3
    dir: Vec3
    style: str | None = None
    lineno: int = 0
    kind = "line"


@dataclass(frozen=True)
class Plane3:
    point: Vec3
    normal: Vec3
    style: str | None = None
    lineno: int = 0
    kind = "plane"


@dataclass(frozen=True)
class ParallelSpec:
    zeta_deg: float
    style: str | None = None
    lineno: int = 0
    kind = "parallel"


@dataclass(frozen=True)
class PresetSpec:
    name: str
    params: dict = field(default_factory=dict)
    style: str | None = None
    lineno: int = 0
    kind = "preset"


@dataclass
class Scene:
    entities: list = field(default_factory=list)


ARITY = {"point": 3, "segment": 6, "line": 6, "plane": 6, "parallel": 1}


def _number(tok: str, lineno: int) -> float:
    try:
        v = float(tok)
    except ValueError:
        raise ParseError(lineno, f"not a number: {tok!r}") from None
    if not math.isfinite(v):
        raise ParseError(lineno, f"not a finite number: {tok!r}")
    return v


def _nonzero(v: Vec3, what: str, lineno: int) -> Vec3:
    if math.hypot(*v) == 0.0:
        raise ParseError(lineno, f"zero-length {what}")
    return v


def _parse_preset(args: list[str], lineno: int) -> tuple[str, dict]:
    if not args:
        raise ParseError(lineno, "preset needs a kind")
    name, params = args[0], {}
    for tok in args[1:]:
        key, eq, val = tok.partition("=")
        if not eq or not key:
            raise ParseError(lineno, f"expected key=value, got {tok!r}")
        params[key] = _number(val, lineno)
    try:
        params = resolve_params(name, params)
    except InvalidParams as e:
        raise ParseError(lineno, str(e)) from None
    return name, params


def parse_line(raw: str, lineno: int):
    """Parse one line; returns None for blanks and comments."""
    toks = raw.split("#", 1)[0].split()
    if not toks:
        return None
    style = None
    if toks[-1].startswith("style="):
        style = toks.pop()[len("style="):]
        if style not in STYLE_TOKENS:
            raise ParseError(lineno, f"unknown style {style!r} (use one of {', '.join(STYLE_TOKENS)})")
    key, args = toks[0], toks[1:]
    if key == "preset":
        name, params = _parse_preset(args, lineno)
        return PresetSpec(name, params, style, lineno)
    if key not in ARITY:
        raise ParseError(lineno, f"unknown keyword {key!r}")
    if len(args) != ARITY[key]:
        raise ParseError(lineno, f"{key} takes {ARITY[key]} numbers, got {len(args)}")
    v = [_number(t, lineno) for t in args]
    if key == "point":
        return Point3(tuple(v), style, lineno)
    if key == "parallel":
        if not abs(v[0]) < 90.0:
            raise ParseError(lineno, "parallel elevation must lie strictly between -90 and 90 degrees")
        return ParallelSpec(v[0], style, lineno)
    p, q = tuple(v[:3]), tuple(v[3:])
    if key == "segment":
        if p == q:
            raise ParseError(lineno, "zero-length segment")
        return Segment3(p, q, style, lineno)
    if key == "line":
        return Line3(p, _nonzero(q, "direction", lineno), style, lineno)
    return Plane3(p, _nonzero(q, "normal", lineno), style, lineno)


def parse_scene(text: str) -> Scene:
    scene = Scene()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        ent = parse_line(raw, lineno)
        if ent is not None:
            scene.entities.append(ent)
    return scene
