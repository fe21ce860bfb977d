"""SVG rendering output structure."""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET

from clothoidal import (
    HermiteCouple,
    HermiteSequence,
    Point2,
    REFERENCE_FIT,
    SchemeSpec,
    run_refinement,
)
from clothoidal.svg import RenderOptions, render_svg

NS = "{http://www.w3.org/2000/svg}"


def line_report(levels: int = 2):
    base = HermiteSequence(
        tuple(HermiteCouple(Point2(x, 0.0), 0.0) for x in (0.0, 1.0, 2.5)),
        closed=False,
    )
    return run_refinement(base, SchemeSpec(), levels)


def circle_report(levels: int = 3):
    couples = tuple(
        HermiteCouple(
            Point2(math.cos(2.0 * math.pi * j / 6.0), math.sin(2.0 * math.pi * j / 6.0)),
            2.0 * math.pi * j / 6.0 + math.pi / 2.0,
        )
        for j in range(6)
    )
    base = HermiteSequence(couples, closed=True)
    return run_refinement(base, SchemeSpec(fit=REFERENCE_FIT), levels)


def groups_by_class(root: ET.Element) -> dict[str, ET.Element]:
    return {g.get("class"): g for g in root.iter(f"{NS}g")}


def test_well_formed_svg():
    text = render_svg(line_report())
    root = ET.fromstring(text)
    assert root.tag == f"{NS}svg"
    assert root.get("version") == "1.1"
    assert root.get("viewBox") is not None
    assert root.find(f"{NS}title") is not None


def test_straight_line_comb_collapses():
    text = render_svg(line_report(), RenderOptions(show_comb=True))
    comb = groups_by_class(ET.fromstring(text))["comb"]
    teeth = comb.findall(f"{NS}line")
    assert teeth
    for tooth in teeth:
        assert tooth.get("x1") == tooth.get("x2")
        assert tooth.get("y1") == tooth.get("y2")


def test_circle_comb_has_constant_height():
    text = render_svg(circle_report(), RenderOptions(show_comb=True))
    comb = groups_by_class(ET.fromstring(text))["comb"]
    heights = []
    for tooth in comb.findall(f"{NS}line"):
        dx = float(tooth.get("x2")) - float(tooth.get("x1"))
        dy = float(tooth.get("y2")) - float(tooth.get("y1"))
        heights.append(math.hypot(dx, dy))
    assert heights
    assert max(heights) > 1.0  # visible teeth
    # Coordinates are written with two decimals, so equal world-space teeth
    # may differ by the quantization of their four endpoints.
    assert max(heights) - min(heights) <= 0.03


def test_chart_appears_with_curvature():
    with_chart = render_svg(circle_report())
    assert "chart" in groups_by_class(ET.fromstring(with_chart))

    base = circle_report().levels[0]
    bare = run_refinement(base, SchemeSpec(), 1, want_curvature=False)
    without = render_svg(bare)
    assert "chart" not in groups_by_class(ET.fromstring(without))
    tall = float(ET.fromstring(with_chart).get("height"))
    short = float(ET.fromstring(without).get("height"))
    assert tall > short


def test_normals_can_be_hidden():
    shown = groups_by_class(ET.fromstring(render_svg(line_report())))["input"]
    hidden_text = render_svg(line_report(), RenderOptions(show_normals=False))
    hidden = groups_by_class(ET.fromstring(hidden_text))["input"]
    assert shown.findall(f"{NS}line")
    assert not hidden.findall(f"{NS}line")
    assert len(hidden.findall(f"{NS}circle")) == 3


def test_closed_curve_polyline_returns_to_start():
    text = render_svg(circle_report(levels=1))
    curve = groups_by_class(ET.fromstring(text))["curve"]
    polyline = curve.find(f"{NS}polyline")
    points = polyline.get("points").split()
    assert len(points) == 13  # 12 couples plus the repeated start
    assert points[0] == points[-1]
