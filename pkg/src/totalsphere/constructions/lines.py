"""Images of lines, segments and planes built from ruler-and-compass steps.

Every great circle falls into one of three cases:

* ``equator``: the observer's plane; its image is the circle of radius pi/2.
* ``central``: circles through F and B; their images are diameters.
* ``general``: the anterior half is an arc through the two equator
  crossings E, E' and one more plotted point; the posterior half is the
  fat line of antipodes of that arc.

`CircleConstruction` holds that drawing once and can image any span of the
circle from it, so a line, its completion and a segment on it share arcs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..errors import DuplicatePoints, FrontalLine, NotFrontal, NotPosterior, OffCircle, ThroughObserver
from ..flattening import PI, DiscPoint, blowup_point, flatten
from ..sphere import (
    B, DEGENERACY_TOL, F, R, U, CircleSpan, SpaceLine, SpacePlane, SpaceSegment,
    UnitDirection, angle_between, anterior_orientation, cross, direction_of, dot,
    line_completion_span, line_span, segment_span, vanishing_line_of_plane,
    vanishing_points_of_line,
)
from .antipodes import antipode_in_disc, equator_point
from .fatline import DEFAULT_K, fat_line
from .primitives import Arc, StraightSegment, arc_through, piece_intersections, ray_hits

HALF_PI = 0.5 * math.pi
TWO_PI = 2.0 * math.pi
MIN_SPACING = math.radians(40.0)
_TINY = 1e-12
MIN_PIECE = 1e-7


def _canonical_frame(normal):
    n = UnitDirection.from_vector(normal)
    h = math.hypot(n.x, n.z)
    if h <= DEGENERACY_TOL:
        return "equator", B, R, U
    if abs(n.y) <= DEGENERACY_TOL:
        n = UnitDirection(n.x / h, 0.0, n.z / h)
        return "central", n, F, UnitDirection(*cross(n, F))
    e1 = UnitDirection(-n.z / h, 0.0, n.x / h)
    e2 = UnitDirection(*cross(n, e1))
    if e2.y < 0:
        n, e2 = -n, -e2
    return "general", n, e1, e2


def _breaks(lo: float, hi: float, offset: float, step: float) -> list[float]:
    k = math.floor((lo - offset) / step) + 1
    out = []
    while offset + k * step < hi - _TINY:
        v = offset + k * step
        if v > lo + _TINY:
            out.append(v)
        k += 1
    return out


@dataclass
class CircleConstruction:
    """The drawn image of one great circle.

    For general circles `arc` is the anterior arc E -> third -> E', where E
    is the equator crossing on the side that makes the anterior half run
    counter-clockwise about `normal`.
    """

    kind: str
    normal: UnitDirection
    e1: UnitDirection
    e2: UnitDirection
    third: DiscPoint | None = None
    third_source: str | None = None
    arc: Arc | StraightSegment | None = None
    ends: tuple[DiscPoint, DiscPoint] | None = None

    @classmethod
    def build(cls, normal, third: DiscPoint | None = None, third_source: str | None = None):
        kind, n, e1, e2 = _canonical_frame(normal)
        c = cls(kind, n, e1, e2)
        if kind != "general":
            return c
        e = equator_point(e1.x, e1.z)
        e_bar = antipode_in_disc(e)
        if third is None:
            third, third_source = flatten(e2), "apex"
        arc = arc_through(e.xy, third.xy, e_bar.xy)
        if isinstance(arc, StraightSegment):
            # the drawing cannot tell this circle from one through F
            h = math.hypot(n.x, n.z)
            n = UnitDirection(n.x / h, 0.0, n.z / h)
            return cls("central", n, F, UnitDirection(*cross(n, F)))
        c.third, c.third_source = third, third_source or "given"
        c.arc = arc
        c.ends = (e, e_bar)
        return c

    def param_of(self, d) -> float:
        """Canonical angle t with d = cos t e1 + sin t e2."""
        return math.atan2(dot(d, self.e2), dot(d, self.e1))

    def direction_at(self, t: float) -> UnitDirection:
        c, s = math.cos(t), math.sin(t)
        a, b = self.e1, self.e2
        return UnitDirection.from_vector((c * a.x + s * b.x, c * a.y + s * b.y, c * a.z + s * b.z))

    def span_interval(self, span: CircleSpan) -> tuple[float, float]:
        orient = dot(span.normal, self.normal)
        if abs(abs(orient) - 1.0) > 1e-9:
            raise OffCircle("span does not lie on this great circle")
        a = self.param_of(span.start)
        return a, a + math.copysign(1.0, orient) * span.sweep

    def full_span(self) -> CircleSpan:
        return CircleSpan(self.e1, self.normal, TWO_PI)

    # anterior arc helpers (general circles)

    def _arc_fraction(self, t: float) -> float:
        """Position along the anterior arc of the circle point at angle t in
        [0, pi], found with the measuring line through that direction."""
        if t <= _TINY:
            return 0.0
        if t >= PI - _TINY:
            return 1.0
        d = self.direction_at(t)
        if d.y > 0 and math.dist(flatten(d).xy, self.third.xy) <= 1e-12:
            # already plotted; a near-tangent measuring line would only blur it
            return self.arc.param_of(self.third.xy)
        guess = t / PI
        hits = ray_hits(self.arc, math.atan2(d.z, d.x), tol=1e-7)
        if hits:
            return min(hits, key=lambda h: abs(h[0] - guess))[0]
        return min(max(self.arc.param_of(flatten(d).xy), 0.0), 1.0)

    def anterior_piece(self, ta: float, tb: float):
        return self.arc.sub(self._arc_fraction(ta), self._arc_fraction(tb))

    def _piece(self, a: float, b: float, K: int, azimuths):
        mid = 0.5 * (a + b)
        if self.kind == "equator":
            return "anterior", Arc((0.0, 0.0), HALF_PI, a, b)
        if self.kind == "central":
            w = round(mid / TWO_PI) * TWO_PI
            u = (self.e2.x, self.e2.z)
            seg = StraightSegment(((a - w) * u[0], (a - w) * u[1]), ((b - w) * u[0], (b - w) * u[1]))
            return ("anterior" if math.cos(mid) >= 0 else "posterior"), seg
        k = math.floor(mid / PI)
        sub = self.anterior_piece(a - k * PI, b - k * PI)
        if math.dist(sub.start, sub.end) <= MIN_PIECE and b - a < HALF_PI:
            return None  # collapsed onto a point of the drawn arc
        if k % 2 == 0:
            return "anterior", sub
        return "posterior", fat_line(sub, K, azimuths)

    def pieces(self, span: CircleSpan, K: int = DEFAULT_K, azimuths=None):
        """Image of a span as an ordered list of (part, piece) pairs, plus a
        flag telling whether the span runs through B in its interior."""
        a, b = self.span_interval(span)
        lo, hi = min(a, b), max(a, b)
        through_b = False
        if self.kind == "general":
            cuts = _breaks(lo, hi, 0.0, PI)
        elif self.kind == "central":
            at_b = _breaks(lo, hi, PI, TWO_PI)
            through_b = bool(at_b)
            cuts = sorted(_breaks(lo, hi, HALF_PI, PI) + at_b)
        else:
            cuts = _breaks(lo, hi, 0.0, PI) if hi - lo > PI + 1e-9 else []
        bounds = [lo] + cuts + [hi]
        out = []
        for x0, x1 in zip(bounds, bounds[1:]):
            if x1 - x0 <= MIN_PIECE and len(bounds) > 2:
                continue  # a sliver next to a break; its knots would coincide
            piece = self._piece(x0, x1, K, azimuths)
            if piece is None:
                if len(bounds) > 2:
                    continue
                raise DuplicatePoints("span collapses to a point")
            out.append(piece)
        if a > b:
            out = [(part, p.reversed()) for part, p in reversed(out)]
        return out, through_b


def endpoint_image(span: CircleSpan, at_end: bool) -> DiscPoint:
    """Exact image of a span end; an end at B keeps its approach azimuth."""
    d = span.end if at_end else span.start
    if d.y > -1.0 + 1e-12:
        try:
            return flatten(d)
        except Exception:
            pass
    near = span.at(span.sweep * (1 - 1e-6)) if at_end else span.at(span.sweep * 1e-6)
    return blowup_point(math.atan2(near.z, near.x))


@dataclass
class LineImagePath:
    """Drawable image of a line, segment or plane.

    `image` holds (part, piece) pairs in order along the curve, part being
    ``"anterior"`` or ``"posterior"``; `completion` holds the rest of the
    great circle for lines (drawn dashed).
    """

    kind: str
    image: list
    endpoints: tuple[DiscPoint, DiscPoint] | None
    completion: list = field(default_factory=list)
    split_at_blowup: bool = False
    construction: CircleConstruction | None = None
    degenerate: bool = False
    span: CircleSpan | None = None
    zeta: float | None = None

    @property
    def anterior(self) -> list:
        return [p for part, p in self.image if part == "anterior"]

    @property
    def posterior(self) -> list:
        return [p for part, p in self.image if part == "posterior"]

    @property
    def pieces(self) -> list:
        return [p for _, p in self.image]


def classify_line(l: SpaceLine, tol: float = DEGENERACY_TOL) -> str:
    """One of ``degenerate`` (through O), ``central``, ``frontal``, ``receding``."""
    if vanishing_points_of_line(l, tol).degenerate:
        return "degenerate"
    d = l.dir
    if abs(d.x) <= tol and abs(d.z) <= tol:
        return "central"
    if abs(d.y) <= tol:
        return "frontal"
    return "receding"


def _spacing_ok(d, e1) -> bool:
    a = angle_between(d, e1)
    return min(a, PI - a) >= MIN_SPACING


def choose_third_point(l: SpaceLine, e1) -> tuple[DiscPoint | None, str]:
    """The extra point used to draw a line's anterior arc.

    Frontal lines use their sagittal-plane crossing (or the horizon crossing
    for vertical lines), receding lines their anterior vanishing point. When
    the candidate sits too close to an equator crossing the arc would be
    badly conditioned, so the next candidate is tried, and finally the
    circle's apex (returned as None).
    """
    d = l.dir
    cands = []
    if abs(d.y) <= DEGENERACY_TOL:
        p = l.point
        if abs(d.x) > DEGENERACY_TOL:
            cands.append(("sagittal", l.at(-p[0] / d.x)))
        if abs(d.z) > DEGENERACY_TOL:
            cands.append(("horizon", l.at(-p[2] / d.z)))
        for label, x in cands:
            if math.hypot(x[0], x[2]) <= DEGENERACY_TOL:
                continue  # crossing lies on the central ray: circle is central
            # judged per crossing: a nearly frontal line may cross the
            # observer's plane between them
            behind = x[1] < 0
            u = direction_of(x)
            front = -u if behind else u
            if _spacing_ok(front, e1):
                q = flatten(u) if not behind else antipode_in_disc(flatten(u))
                return q, label
    else:
        v = anterior_orientation(d)
        if _spacing_ok(v, e1):
            return flatten(v), "vanishing"
    return None, "apex"


def line_construction(l: SpaceLine, third: DiscPoint | None = None) -> CircleConstruction:
    img = vanishing_points_of_line(l)
    if img.degenerate:
        raise ThroughObserver("line passes through the observer")
    kind, _, e1, _ = _canonical_frame(img.circle.normal)
    if third is not None:
        return CircleConstruction.build(img.circle.normal, third, "given")
    if kind != "general":
        return CircleConstruction.build(img.circle.normal)
    q, src = choose_third_point(l, e1)
    return CircleConstruction.build(img.circle.normal, q, src)


def line_image(l: SpaceLine, K: int = DEFAULT_K, azimuths=None, third: DiscPoint | None = None) -> LineImagePath:
    """Image of a full line: its meridian plus the dashed completion."""
    kind = classify_line(l)
    if kind == "degenerate":
        raise ThroughObserver("line passes through the observer")
    cons = line_construction(l, third)
    span = line_span(l)
    image, split = cons.pieces(span, K, azimuths)
    completion, _ = cons.pieces(line_completion_span(l), K, azimuths)
    ends = (endpoint_image(span, False), endpoint_image(span, True))
    return LineImagePath(kind, image, ends, completion, split, cons, span=span)


def frontal_line_anterior(l: SpaceLine):
    """Anterior arc V P V' of a frontal line's great circle.

    A crossing on the central ray makes this the straight diameter; a line
    on the observer's plane gives half of the equator. For lines behind the
    observer the arc returned is the auxiliary one through the antipode.
    """
    kind = classify_line(l)
    if kind == "degenerate":
        raise ThroughObserver("line passes through the observer")
    if kind != "frontal":
        raise NotFrontal("line is not parallel to the observer's plane")
    cons = line_construction(l)
    if l.point[1] < -DEGENERACY_TOL:
        if cons.kind == "general":
            return cons.arc
        u = (cons.e2.x, cons.e2.z)
        return StraightSegment((-HALF_PI * u[0], -HALF_PI * u[1]), (HALF_PI * u[0], HALF_PI * u[1]))
    pieces, _ = cons.pieces(line_span(l))
    return pieces[0][1]


def receding_line_image(l: SpaceLine, K: int = DEFAULT_K) -> LineImagePath:
    kind = classify_line(l)
    if kind == "degenerate":
        raise ThroughObserver("line passes through the observer")
    if kind == "frontal":
        raise FrontalLine("frontal lines never cross the observer's plane; use the frontal constructions")
    return line_image(l, K)


def frontal_posterior_line_image(l: SpaceLine, K: int = DEFAULT_K) -> LineImagePath:
    kind = classify_line(l)
    if kind == "degenerate":
        raise ThroughObserver("line passes through the observer")
    if kind != "frontal":
        raise NotFrontal("line is not parallel to the observer's plane")
    if l.point[1] >= -DEGENERACY_TOL:
        raise NotPosterior("line is not behind the observer")
    return line_image(l, K)


def segment_image(s: SpaceSegment, K: int = DEFAULT_K, azimuths=None, third: DiscPoint | None = None) -> LineImagePath:
    span = segment_span(s)
    cons = line_construction(s.line(), third)
    image, split = cons.pieces(span, K, azimuths)
    ends = (endpoint_image(span, False), endpoint_image(span, True))
    return LineImagePath("segment", image, ends, [], split, cons, span=span)


def plane_image(h: SpacePlane, K: int = DEFAULT_K) -> LineImagePath:
    """The vanishing circle of a plane (for a plane through O, its whole image)."""
    circle = vanishing_line_of_plane(h)
    cons = CircleConstruction.build(circle.normal)
    span = cons.full_span()
    image, split = cons.pieces(span, K)
    return LineImagePath("plane", image, None, [], split, cons, degenerate=circle.degenerate, span=span)


def construct_anterior_point(d) -> DiscPoint:
    """Plot an anterior direction as the crossing of the images of the
    vertical and the horizontal frontal lines through it."""
    d = UnitDirection(*d)
    if d.y <= DEGENERACY_TOL:
        raise NotFrontal("direction is not anterior")
    if math.hypot(d.x, d.z) <= DEGENERACY_TOL:
        return DiscPoint(0.0, 0.0)
    vertical = frontal_line_anterior(SpaceLine(d.as_tuple(), U))
    horizontal = frontal_line_anterior(SpaceLine(d.as_tuple(), R))
    hits = piece_intersections(vertical, horizontal)
    if not hits:
        raise ArithmeticError("construction arcs do not meet")
    x, y = min(hits, key=lambda p: math.hypot(*p))
    return DiscPoint.from_xy(x, y)
