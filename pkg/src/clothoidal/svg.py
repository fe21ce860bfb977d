"""Static SVG rendering of a refinement run.

The picture shows the final-level polyline, the input couples with their
normals, an optional curvature comb and, when a curvature profile is
present, a small kappa-over-s chart underneath.  Output is plain SVG 1.1
with no scripting, so it can be dropped into documents directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .formats import RunReport

_CURVE_W = 800.0
_CURVE_H = 560.0
_CHART_H = 170.0
_MARGIN = 28.0


@dataclass(frozen=True)
class RenderOptions:
    show_normals: bool = True
    show_comb: bool = False
    comb_scale: float | None = None


def _fmt(v: float) -> str:
    return f"{v:.2f}"


class _WorldMap:
    """Uniform world-to-screen map with a flipped y axis."""

    def __init__(self, xs: list[float], ys: list[float], width: float, height: float):
        min_x, max_x = min(xs), max(xs)
        min_y, max_y = min(ys), max(ys)
        span_x = max(max_x - min_x, 1e-9)
        span_y = max(max_y - min_y, 1e-9)
        self.scale = min(
            (width - 2 * _MARGIN) / span_x, (height - 2 * _MARGIN) / span_y
        )
        self.cx = (min_x + max_x) / 2.0
        self.cy = (min_y + max_y) / 2.0
        self.ox = width / 2.0
        self.oy = height / 2.0

    def point(self, x: float, y: float) -> tuple[float, float]:
        return (
            self.ox + (x - self.cx) * self.scale,
            self.oy - (y - self.cy) * self.scale,
        )


def _polyline(points: list[tuple[float, float]], style: str) -> str:
    coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in points)
    return f'<polyline fill="none" {style} points="{coords}"/>'


def render_svg(report: RunReport, options: RenderOptions = RenderOptions()) -> str:
    """Render a report to an SVG document string."""
    final = report.levels[-1]
    initial = report.levels[0]
    world = [(h.point.x, h.point.y) for h in final.couples]

    comb_tips: list[tuple[float, float]] | None = None
    if options.show_comb and report.curvature_kappa is not None:
        kappas = report.curvature_kappa
        peak = max(abs(k) for k in kappas)
        span = max(
            max(x for x, _ in world) - min(x for x, _ in world),
            max(y for _, y in world) - min(y for _, y in world),
        )
        scale = options.comb_scale
        if scale is None:
            scale = 0.0 if peak <= 0.0 else 0.18 * span / peak
        comb_tips = []
        for h, kappa in zip(final.couples, kappas):
            n = h.normal()
            comb_tips.append(
                (h.point.x + scale * kappa * n.x, h.point.y + scale * kappa * n.y)
            )

    xs = [x for x, _ in world] + [h.point.x for h in initial.couples]
    ys = [y for _, y in world] + [h.point.y for h in initial.couples]
    if comb_tips:
        xs += [x for x, _ in comb_tips]
        ys += [y for _, y in comb_tips]

    with_chart = report.curvature_s is not None and report.curvature_kappa is not None
    height = _CURVE_H + (_CHART_H if with_chart else 0.0)
    view = _WorldMap(xs, ys, _CURVE_W, _CURVE_H)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(_CURVE_W)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(_CURVE_W)} {_fmt(height)}">',
        "<title>refined curve</title>",
        f'<rect width="{_fmt(_CURVE_W)}" height="{_fmt(height)}" fill="#ffffff"/>',
    ]

    screen = [view.point(x, y) for x, y in world]
    if final.closed:
        screen.append(screen[0])

    if comb_tips is not None:
        tips = [view.point(x, y) for x, y in comb_tips]
        if final.closed:
            tips.append(tips[0])
        teeth = []
        for (px, py), (tx, ty) in zip(screen, tips):
            teeth.append(
                f'<line x1="{_fmt(px)}" y1="{_fmt(py)}" x2="{_fmt(tx)}" y2="{_fmt(ty)}"/>'
            )
        parts.append('<g class="comb" stroke="#8250df" stroke-width="0.6" opacity="0.55">')
        parts.extend(teeth)
        parts.append(_polyline(tips, 'stroke="#8250df" stroke-width="0.9"'))
        parts.append("</g>")

    parts.append('<g class="curve">')
    parts.append(_polyline(screen, 'stroke="#1f6feb" stroke-width="1.6"'))
    parts.append("</g>")

    parts.append('<g class="input" stroke="#d1242f" fill="#d1242f">')
    handle = 26.0
    for h in initial.couples:
        px, py = view.point(h.point.x, h.point.y)
        parts.append(f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="3"/>')
        if options.show_normals:
            n = h.normal()
            # Normal direction in screen coordinates; y flips.
            parts.append(
                f'<line x1="{_fmt(px)}" y1="{_fmt(py)}" '
                f'x2="{_fmt(px + handle * n.x)}" y2="{_fmt(py - handle * n.y)}" '
                f'stroke-width="1.2"/>'
            )
    parts.append("</g>")

    if with_chart:
        parts.append(_chart(report.curvature_s, report.curvature_kappa))

    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _chart(s_values: list[float], kappas: list[float]) -> str:
    """Curvature-over-arclength strip below the main drawing."""
    top = _CURVE_H + 18.0
    left = 54.0
    width = _CURVE_W - left - 26.0
    height = _CHART_H - 52.0
    k_min = min(kappas + [0.0])
    k_max = max(kappas + [0.0])
    span = max(k_max - k_min, 1e-9)
    s_span = max(s_values[-1] - s_values[0], 1e-9)

    def map_point(s: float, kappa: float) -> tuple[float, float]:
        return (
            left + (s - s_values[0]) / s_span * width,
            top + height - (kappa - k_min) / span * height,
        )

    zero_y = top + height - (0.0 - k_min) / span * height
    points = [map_point(s, k) for s, k in zip(s_values, kappas)]
    parts = [
        '<g class="chart" font-family="monospace" font-size="11" fill="#57606a">',
        f'<line x1="{_fmt(left)}" y1="{_fmt(top)}" x2="{_fmt(left)}" '
        f'y2="{_fmt(top + height)}" stroke="#57606a" stroke-width="1"/>',
        f'<line x1="{_fmt(left)}" y1="{_fmt(zero_y)}" x2="{_fmt(left + width)}" '
        f'y2="{_fmt(zero_y)}" stroke="#57606a" stroke-width="1"/>',
        _polyline(points, 'stroke="#1f6feb" stroke-width="1.2"'),
        f'<text x="{_fmt(left)}" y="{_fmt(top - 6.0)}">kappa</text>',
        f'<text x="{_fmt(left + width - 8.0)}" y="{_fmt(zero_y + 14.0)}">s</text>',
        f'<text x="{_fmt(left + 4.0)}" y="{_fmt(top + 10.0)}">{k_max:.3g}</text>',
        f'<text x="{_fmt(left + 4.0)}" y="{_fmt(top + height - 2.0)}">{k_min:.3g}</text>',
        "</g>",
    ]
    return "\n".join(parts)
