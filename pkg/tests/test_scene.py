import pytest

from totalsphere.errors import ParseError
from totalsphere.scene import (
    Line3, ParallelSpec, Plane3, Point3, PresetSpec, Segment3, parse_line, parse_scene,
)

SAMPLE = """\
# a small scene
point 0 1 0
segment 1 1 0  -1 1 0 style=accent
line 0 1 -1 1 0 0   # floor line
plane 0 0 -1 0 0 1 style=gray

parallel 30
preset cubic_room div=2
"""


def test_parse_sample():
    scene = parse_scene(SAMPLE)
    kinds = [type(e) for e in scene.entities]
    assert kinds == [Point3, Segment3, Line3, Plane3, ParallelSpec, PresetSpec]
    pt, seg, line, plane, par, pre = scene.entities
    assert pt.point == (0.0, 1.0, 0.0) and pt.lineno == 2
    assert seg.style == "accent" and seg.b == (-1.0, 1.0, 0.0)
    assert line.dir == (1.0, 0.0, 0.0) and line.style is None
    assert plane.normal == (0.0, 0.0, 1.0)
    assert par.zeta_deg == 30.0 and par.lineno == 7
    assert pre.name == "cubic_room" and pre.params == {"edge": 2.0, "div": 2}


def test_blank_and_comment_lines():
    assert parse_line("", 1) is None
    assert parse_line("   # nothing", 1) is None
    assert parse_scene("\n\n#\n").entities == []


@pytest.mark.parametrize("text,reason", [
    ("cube 1 2 3", "unknown keyword"),
    ("point 1 2", "takes 3 numbers"),
    ("line 0 1 0 1 0", "takes 6 numbers"),
    ("point 1 two 3", "not a number"),
    ("point 1 nan 3", "not a finite number"),
    ("point 1 inf 3", "not a finite number"),
    ("line 1 1 1 0 0 0", "zero-length direction"),
    ("plane 1 1 1 0 0 0", "zero-length normal"),
    ("segment 1 1 1 1 1 1", "zero-length segment"),
    ("parallel 90", "strictly between"),
    ("parallel -120", "strictly between"),
    ("point 1 2 3 style=purple", "unknown style"),
    ("preset", "needs a kind"),
    ("preset tower", "unknown preset"),
    ("preset cubic_room div", "key=value"),
    ("preset cubic_room size=3", "no parameter"),
    ("preset cubic_room div=x", "not a number"),
])
def test_parse_errors(text, reason):
    with pytest.raises(ParseError) as info:
        parse_line(text, 4)
    assert info.value.lineno == 4
    assert reason in str(info.value)
    assert str(info.value).startswith("line 4: ")


def test_error_reports_first_bad_line():
    with pytest.raises(ParseError) as info:
        parse_scene("point 0 1 0\n\nline 0 0\npoint x 0 0\n")
    assert info.value.lineno == 3
