"""Turn a parsed scene into styled drawables and write them out as SVG."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from xml.sax.saxutils import escape

import numpy as np

from . import analysis
from .constructions import (
    Arc, FatLine, StraightSegment, equator_point, generate_preset, line_image,
    parallel_image, plane_image, segment_image,
)
from .constructions.lines import LineImagePath
from .errors import GeometryError, InvalidParams
from .flattening import EPS_BLOWUP, PI, flatten
from .scene import Line3, ParallelSpec, Plane3, Point3, PresetSpec, Scene, Segment3
from .sphere import (
    DEGENERACY_TOL, SpaceLine, SpacePlane, SpaceSegment, angle_between, direction_of,
    line_completion_span, segment_span, vanishing_points_of_line,
)

MODES = ("exact", "construction", "both")
COLORS = {"black": "#000000", "gray": "#888888", "accent": "#c0392b", "dashed": "#000000"}
DASH = "6 4"


@dataclass(frozen=True)
class RenderOptions:
    mode: str = "construction"
    disc_radius_px: int = 500
    samples_per_curve: int = 256
    measuring_lines_K: int = 8
    frame_equator: bool = False
    frame_labels: bool = False
    grid_step_deg: int | None = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise InvalidParams(f"mode must be one of {MODES}")
        if int(self.disc_radius_px) != self.disc_radius_px or self.disc_radius_px < 1:
            raise InvalidParams("disc_radius_px must be a positive integer")
        if self.samples_per_curve < 16:
            raise InvalidParams("samples_per_curve must be at least 16")
        if self.measuring_lines_K < 3:
            raise InvalidParams("measuring_lines_K must be at least 3")
        if self.grid_step_deg is not None and not 0 < self.grid_step_deg <= 180:
            raise InvalidParams("grid_step_deg must lie in (0, 180]")


@dataclass(frozen=True)
class Drawable:
    """One stroke: `shape` is an Arc, a StraightSegment or an (N, 2) array."""

    shape: object
    style: str
    layer: str
    entity: int


@dataclass(frozen=True)
class Mark:
    """A labelled dot. `xy` None stands for B itself, drawn as the blowup."""

    label: str
    xy: tuple[float, float] | None
    style: str
    entity: int


@dataclass(frozen=True)
class Diagnostic:
    entity: int
    lineno: int
    message: str

    def __str__(self):
        return f"line {self.lineno}: {self.message}"


@dataclass
class RenderPlan:
    drawables: list = field(default_factory=list)
    marks: list = field(default_factory=list)
    diagnostics: list = field(default_factory=list)
    entity_count: int = 0

    @property
    def all_failed(self) -> bool:
        return self.entity_count > 0 and len({d.entity for d in self.diagnostics}) == self.entity_count


def _flat_pieces(pieces) -> list:
    out = []
    for p in pieces:
        out.extend(p.arcs if isinstance(p, FatLine) else [p])
    return out


class _Planner:
    def __init__(self, opts: RenderOptions):
        self.opts = opts
        self.out = RenderPlan()

    @property
    def exact(self) -> bool:
        return self.opts.mode in ("exact", "both")

    @property
    def construction(self) -> bool:
        return self.opts.mode in ("construction", "both")

    def exact_style(self, style: str) -> str:
        return "accent" if self.opts.mode == "both" else style

    def draw(self, shapes, style, layer, idx):
        for s in shapes:
            self.out.drawables.append(Drawable(s, style, layer, idx))

    def draw_curve(self, curve, style, idx):
        self.draw([p for p in curve.pieces() if len(p) > 1], style, "exact", idx)

    def mark_direction(self, d, label, style, idx, construct_equator=False):
        if angle_between(d, (0.0, -1.0, 0.0)) < EPS_BLOWUP:
            # B: no approach azimuth, the whole rim stands for it
            self.out.marks.append(Mark(label or "B", None, "accent", idx))
            return
        if construct_equator and abs(d[1]) <= DEGENERACY_TOL:
            p = equator_point(d[0], d[2])
        else:
            p = flatten(d)
        self.out.marks.append(Mark(label, p.xy, style, idx))

    def path(self, img: LineImagePath, style, idx, exact_curve=None, completion_span=None):
        n = self.opts.samples_per_curve
        if self.construction:
            self.draw(_flat_pieces(img.pieces), style, "construction", idx)
            self.draw(_flat_pieces([p for _, p in img.completion]), "dashed", "construction", idx)
        if self.exact:
            curve = exact_curve if exact_curve is not None else analysis.exact_curve_for(img, n)
            self.draw_curve(curve, self.exact_style(style), idx)
            if completion_span is not None:
                self.draw_curve(analysis.sample_span(completion_span, n), "dashed", idx)

    # entity handlers

    def point(self, e: Point3, idx):
        d = direction_of(e.point)
        self.mark_direction(d, "", e.style or "black", idx, construct_equator=self.construction)

    def line(self, e: Line3, idx):
        K = self.opts.measuring_lines_K
        l = SpaceLine(e.point, e.dir)
        img = vanishing_points_of_line(l)
        if img.degenerate:
            # a line through O is seen end-on: just its two vanishing points
            for d in (img.v_plus, img.v_minus):
                self.mark_direction(d, "", e.style or "black", idx)
            return
        path = line_image(l, K)
        self.path(path, e.style or "black", idx, completion_span=line_completion_span(l))

    def segment(self, e: Segment3, idx):
        s = SpaceSegment(e.a, e.b)
        segment_span(s)
        self.path(segment_image(s, self.opts.measuring_lines_K), e.style or "black", idx)

    def plane(self, e: Plane3, idx):
        self.path(plane_image(SpacePlane(e.point, e.normal), self.opts.measuring_lines_K),
                  e.style or "gray", idx)

    def parallel(self, e: ParallelSpec, idx):
        zeta = math.radians(e.zeta_deg)
        self.path(parallel_image(zeta, self.opts.measuring_lines_K), e.style or "black", idx)

    def preset(self, e: PresetSpec, idx):
        res = generate_preset(e.name, e.params, self.opts.measuring_lines_K)
        style = e.style or "black"
        for item, path in res.paths:
            comp = None
            if isinstance(item.geometry, SpaceLine):
                comp = line_completion_span(item.geometry)
            st = "gray" if item.role == "diagonal" else style
            self.path(path, st, idx, completion_span=comp)
        for m in res.markers:
            if m.point is None:
                self.out.marks.append(Mark(m.label, None, "accent", idx))
            else:
                self.out.marks.append(Mark(m.label, m.point.xy, "accent", idx))


_HANDLERS = {
    Point3: "point", Line3: "line", Segment3: "segment", Plane3: "plane",
    ParallelSpec: "parallel", PresetSpec: "preset",
}


def plan(scene: Scene, opts: RenderOptions | None = None) -> RenderPlan:
    """Route every entity to its construction (and/or the exact sampler).

    Geometric failures are recorded per entity in `diagnostics`; the
    remaining entities are still planned.
    """
    opts = opts or RenderOptions()
    p = _Planner(opts)
    p.out.entity_count = len(scene.entities)
    for idx, ent in enumerate(scene.entities):
        before = (len(p.out.drawables), len(p.out.marks))
        try:
            getattr(p, _HANDLERS[type(ent)])(ent, idx)
        except GeometryError as exc:
            del p.out.drawables[before[0]:]
            del p.out.marks[before[1]:]
            p.out.diagnostics.append(Diagnostic(idx, ent.lineno, f"{ent.kind}: {exc}"))
    return p.out


# SVG output


def _f(v: float) -> str:
    s = f"{v:.6f}"
    return "0.000000" if s == "-0.000000" else s


class _Canvas:
    def __init__(self, opts: RenderOptions):
        self.R = float(opts.disc_radius_px)
        self.margin = self.R / 10
        self.c = self.R + self.margin
        self.k = self.R / PI

    def xy(self, p) -> tuple[str, str]:
        return _f(self.c + self.k * p[0]), _f(self.c - self.k * p[1])

    def length(self, v: float) -> str:
        return _f(self.k * v)


def _stroke(style: str, width: float = 1.0) -> str:
    attrs = f'fill="none" stroke="{COLORS.get(style, COLORS["black"])}" stroke-width="{_f(width)}"'
    if style == "dashed":
        attrs += f' stroke-dasharray="{DASH}"'
    return attrs


def _shape_svg(cv: _Canvas, shape, style: str) -> str | None:
    if isinstance(shape, Arc):
        if shape.length <= 1e-12:
            return None
        x0, y0 = cv.xy(shape.start)
        x1, y1 = cv.xy(shape.end)
        large = 1 if abs(shape.sweep) > PI else 0
        sweep = 0 if shape.ccw else 1  # screen y points down
        r = cv.length(shape.radius)
        return f'<path d="M {x0} {y0} A {r} {r} 0 {large} {sweep} {x1} {y1}" {_stroke(style)}/>'
    if isinstance(shape, StraightSegment):
        x0, y0 = cv.xy(shape.start)
        x1, y1 = cv.xy(shape.end)
        return f'<path d="M {x0} {y0} L {x1} {y1}" {_stroke(style)}/>'
    pts = " ".join(",".join(cv.xy(p)) for p in np.asarray(shape))
    return f'<polyline points="{pts}" {_stroke(style)}/>'


def _text(cv: _Canvas, p, label: str, dx: float = 6.0, dy: float = -6.0) -> str:
    x, y = cv.xy(p)
    size = _f(max(cv.R / 30, 6.0))
    return (f'<text x="{x}" y="{y}" dx="{_f(dx)}" dy="{_f(dy)}" font-family="sans-serif" '
            f'font-size="{size}">{escape(label)}</text>')


def emit_svg(plan_: RenderPlan, opts: RenderOptions | None = None) -> str:
    """Standalone SVG for a plan. Output depends only on the inputs."""
    opts = opts or RenderOptions()
    cv = _Canvas(opts)
    size = _f(2 * cv.c)
    c = _f(cv.c)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="#ffffff"/>',
        '<g id="frame">',
        f'<circle id="blowup" cx="{c}" cy="{c}" r="{_f(cv.R)}" {_stroke("black", 1.5)}/>',
    ]
    if opts.frame_equator:
        out.append(f'<circle id="equator" cx="{c}" cy="{c}" r="{_f(cv.R / 2)}" {_stroke("gray")}/>')
    if opts.grid_step_deg:
        steps = int(math.floor(180.0 / opts.grid_step_deg - 1e-9)) + 1
        for k in range(steps):
            a = math.radians(k * opts.grid_step_deg)
            p, q = (PI * math.cos(a), PI * math.sin(a)), (-PI * math.cos(a), -PI * math.sin(a))
            out.append(_shape_svg(cv, StraightSegment(p, q), "gray"))
    if opts.frame_labels:
        h = PI / 2
        for label, p in (("F", (0.0, 0.0)), ("R", (h, 0.0)), ("L", (-h, 0.0)), ("U", (0.0, h)), ("D", (0.0, -h))):
            out.append(f'<circle cx="{cv.xy(p)[0]}" cy="{cv.xy(p)[1]}" r="2.000000" fill="#000000"/>')
            out.append(_text(cv, p, label))
        rim = (PI * math.cos(-PI / 4), PI * math.sin(-PI / 4))
        out.append(_text(cv, rim, "B", 8.0, 14.0))
    out.append("</g>")
    for layer in ("exact", "construction"):
        body = []
        for d in plan_.drawables:
            if d.layer == layer:
                s = _shape_svg(cv, d.shape, d.style)
                if s is not None:
                    body.append(s)
        if body:
            out.append(f'<g id="{layer}">')
            out.extend(body)
            out.append("</g>")
    if plan_.marks:
        out.append('<g id="marks">')
        for m in plan_.marks:
            color = COLORS.get(m.style, COLORS["black"])
            if m.xy is None:
                out.append(f'<circle class="blowup-mark" cx="{c}" cy="{c}" r="{_f(cv.R)}" '
                           f'fill="none" stroke="{color}" stroke-width="3.000000" stroke-opacity="0.5"/>')
                rim = (PI * math.cos(PI / 4), PI * math.sin(PI / 4))
                out.append(_text(cv, rim, m.label or "B", 8.0, -8.0))
                continue
            x, y = cv.xy(m.xy)
            out.append(f'<circle cx="{x}" cy="{y}" r="3.000000" fill="{color}"/>')
            if m.label:
                out.append(_text(cv, m.xy, m.label))
        out.append("</g>")
    for dg in plan_.diagnostics:
        out.append(f"<!-- {escape(str(dg)).replace('--', '- -')} -->")
    out.append("</svg>")
    return "\n".join(out) + "\n"
