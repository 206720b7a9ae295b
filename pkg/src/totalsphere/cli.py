"""Command line front end: ``render``, ``error`` and ``table``."""

from __future__ import annotations

import argparse
import math
import sys

from . import analysis
from .constructions import generate_preset, line_image, parallel_image, plane_image, segment_image
from .errors import GeometryError, ParseError
from .render import RenderOptions, emit_svg, plan
from .scene import Line3, ParallelSpec, Plane3, PresetSpec, Segment3, parse_scene
from .sphere import SpaceLine, SpacePlane, SpaceSegment

EXIT_OK, EXIT_PARSE, EXIT_GEOMETRY = 0, 1, 2


def _read_scene(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        print(f"error: cannot read scene {path}: {e.strerror or e}", file=sys.stderr)
        return None
    try:
        return parse_scene(text)
    except ParseError as e:
        print(f"error: {path}: {e}", file=sys.stderr)
        return None


def cmd_render(args) -> int:
    scene = _read_scene(args.scene)
    if scene is None:
        return EXIT_PARSE
    try:
        opts = RenderOptions(
            mode=args.mode, disc_radius_px=args.radius_px, samples_per_curve=args.samples,
            measuring_lines_K=args.knots, frame_equator=args.frame, frame_labels=args.frame,
            grid_step_deg=args.grid_step_deg,
        )
    except GeometryError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    result = plan(scene, opts)
    for d in result.diagnostics:
        print(f"warning: {args.scene}: {d}", file=sys.stderr)
    svg = emit_svg(result, opts)
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
    except OSError as e:
        print(f"error: cannot write {args.out}: {e.strerror or e}", file=sys.stderr)
        return EXIT_PARSE
    return EXIT_GEOMETRY if result.all_failed else EXIT_OK


def _entity_paths(ent, K: int):
    """(label, path) pairs whose drawn image can be checked against the oracle."""
    if isinstance(ent, Line3):
        return [("line", line_image(SpaceLine(ent.point, ent.dir), K))]
    if isinstance(ent, Segment3):
        return [("segment", segment_image(SpaceSegment(ent.a, ent.b), K))]
    if isinstance(ent, Plane3):
        return [("plane", plane_image(SpacePlane(ent.point, ent.normal), K))]
    if isinstance(ent, ParallelSpec):
        return [("parallel", parallel_image(math.radians(ent.zeta_deg), K))]
    if isinstance(ent, PresetSpec):
        res = generate_preset(ent.name, ent.params, K)
        return [(f"{ent.name}[{k}]", p) for k, (_, p) in enumerate(res.paths)]
    return []


def cmd_error(args) -> int:
    scene = _read_scene(args.scene)
    if scene is None:
        return EXIT_PARSE
    failed = 0
    for ent in scene.entities:
        try:
            rows = []
            for label, path in _entity_paths(ent, args.knots):
                for part, rep in analysis.error_by_part(path, args.samples).items():
                    rows.append(f"line={ent.lineno} entity={label} part={part} {rep.row()}")
        except GeometryError as e:
            failed += 1
            print(f"warning: {args.scene}: line {ent.lineno}: {ent.kind}: {e}", file=sys.stderr)
            continue
        for r in rows:
            print(r)
    if scene.entities and failed == len(scene.entities):
        return EXIT_GEOMETRY
    return EXIT_OK


def cmd_table(args) -> int:
    if args.profiles < 2:
        print("error: --profiles must be at least 2", file=sys.stderr)
        return EXIT_PARSE
    prof = analysis.compare_radial_profiles(args.profiles, normalized=args.normalized)
    for lam, eq, rf in prof.rows:
        print(f"lambda={lam:.6f} equidistant={eq:.6f} reflection={rf:.6f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="totalsphere", description="360 degree spherical perspective drawings")
    sub = ap.add_subparsers(dest="command", required=True)

    r = sub.add_parser("render", help="render a scene to SVG")
    r.add_argument("--scene", required=True)
    r.add_argument("--out", required=True)
    r.add_argument("--mode", choices=("exact", "construction", "both"), default="construction")
    r.add_argument("--radius-px", type=int, default=500)
    r.add_argument("--samples", type=int, default=256)
    r.add_argument("--knots", type=int, default=8)
    r.add_argument("--frame", action="store_true", help="draw equator and reference labels")
    r.add_argument("--grid-step-deg", type=int, default=None, help="draw measuring lines at this step")
    r.set_defaults(func=cmd_render)

    e = sub.add_parser("error", help="compare constructed images with the exact ones")
    e.add_argument("--scene", required=True)
    e.add_argument("--knots", type=int, default=8)
    e.add_argument("--samples", type=int, default=analysis.DEFAULT_SAMPLES)
    e.set_defaults(func=cmd_error)

    t = sub.add_parser("table", help="radial profiles: equidistant disc vs mirror ball")
    t.add_argument("--profiles", type=int, required=True)
    t.add_argument("--normalized", action="store_true", help="scale both rims to 1")
    t.set_defaults(func=cmd_table)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
