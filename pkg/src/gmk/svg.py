"""Deterministic SVG rendering of chord diagrams and meanders.

Pure text emission: fixed element order and fixed two-decimal coordinate
formatting make the output byte-stable for byte-level snapshot tests.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .gauss import GaussCode, to_chord_diagram
from .meanders import MeanderReconstruction


@dataclass(frozen=True)
class RenderSpec:
    canvas: int = 640
    margin: float = 48.0
    stroke: float = 2.0
    arc_samples: int = 32

    def __post_init__(self) -> None:
        if self.canvas <= 0:
            raise ValueError("canvas size must be positive")
        if self.arc_samples < 4:
            raise ValueError("need at least 4 samples per arc")


def _fmt(value: float) -> str:
    out = f"{value:.2f}"
    return "0.00" if out == "-0.00" else out


def _polyline(points: list[tuple[float, float]], stroke: float, cls: str) -> str:
    joined = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in points)
    return (
        f'<polyline class="{cls}" points="{joined}" fill="none" '
        f'stroke="black" stroke-width="{_fmt(stroke)}"/>'
    )


def render_chord_diagram(code: GaussCode, spec: RenderSpec = RenderSpec()) -> str:
    """Circle with 2n labelled endpoints and chords as straight segments."""
    diagram = to_chord_diagram(code)
    size = float(spec.canvas)
    cx = cy = size / 2.0
    radius = size / 2.0 - spec.margin
    count = max(len(code.word), 1)

    def endpoint(pos: int) -> tuple[float, float]:
        angle = -math.pi / 2.0 + 2.0 * math.pi * pos / count
        return cx + radius * math.cos(angle), cy + radius * math.sin(angle)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.canvas}" '
        f'height="{spec.canvas}" viewBox="0 0 {spec.canvas} {spec.canvas}">',
        f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(radius)}" '
        f'fill="none" stroke="black" stroke-width="{_fmt(spec.stroke)}"/>',
    ]
    for label in diagram.labels:
        p, q = diagram.positions[label]
        (x1, y1), (x2, y2) = endpoint(p), endpoint(q)
        parts.append(
            f'<line class="chord" x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
            f'x2="{_fmt(x2)}" y2="{_fmt(y2)}" stroke="black" '
            f'stroke-width="{_fmt(spec.stroke)}"/>'
        )
    for pos, token in enumerate(code.word):
        x, y = endpoint(pos)
        parts.append(
            f'<circle class="endpoint" cx="{_fmt(x)}" cy="{_fmt(y)}" '
            f'r="{_fmt(spec.stroke * 1.5)}" fill="black"/>'
        )
        lx = cx + (radius + spec.margin / 2.0) * math.cos(
            -math.pi / 2.0 + 2.0 * math.pi * pos / count
        )
        ly = cy + (radius + spec.margin / 2.0) * math.sin(
            -math.pi / 2.0 + 2.0 * math.pi * pos / count
        )
        parts.append(
            f'<text class="label" x="{_fmt(lx)}" y="{_fmt(ly)}" '
            f'font-size="{_fmt(spec.margin / 3.0)}" text-anchor="middle">'
            f"{token}</text>"
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_meander(
    reconstruction: MeanderReconstruction, spec: RenderSpec = RenderSpec()
) -> str:
    """Line with labelled points, arcs above and below, closure through r.

    All arcs but the closing pair are semicircles; the pair joining the
    last visit back to the first is routed outside the point range, past
    the extra crossing r where the meander meets the closed-up line.  The
    closure sits right of the points when the first visit precedes the
    last in line order and left otherwise.
    """
    n = reconstruction.n
    w = reconstruction.visitation
    closing = (min(w[-1], w[0]), max(w[-1], w[0]))
    plain_lower = tuple(p for p in reconstruction.lower if p != closing)
    radii = [
        (b - a) / 2.0 for a, b in reconstruction.upper + plain_lower
    ]
    max_radius = max(radii, default=0.5)
    depth_in = max_radius + 0.6
    depth_out = max_radius + 1.1
    right_side = w[0] < w[-1]
    x_r = n + 0.75 if right_side else 0.25
    detour = x_r + 0.5 if right_side else x_r - 0.5

    width = float(spec.canvas)
    unit = (width - 2.0 * spec.margin) / (n + 1.0)
    height = 2.0 * spec.margin + unit * 2.0 * (depth_out + 0.4)
    baseline = height / 2.0

    def X(u: float) -> float:
        return spec.margin + u * unit

    def Y(depth: float) -> float:
        # positive depth is below the line
        return baseline + depth * unit

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.canvas}" '
        f'height="{_fmt(height)}" viewBox="0 0 {spec.canvas} {_fmt(height)}">',
        f'<line class="line" x1="{_fmt(X(-0.2))}" y1="{_fmt(baseline)}" '
        f'x2="{_fmt(X(n + 1.2))}" y2="{_fmt(baseline)}" stroke="black" '
        f'stroke-width="{_fmt(spec.stroke)}"/>',
    ]
    for a, b in reconstruction.upper:
        parts.append(
            _polyline(
                [(X(u), Y(d)) for u, d in _unit_semicircle(a, b, True, spec.arc_samples)],
                spec.stroke,
                "arc-upper",
            )
        )
    for a, b in plain_lower:
        parts.append(
            _polyline(
                [(X(u), Y(d)) for u, d in _unit_semicircle(a, b, False, spec.arc_samples)],
                spec.stroke,
                "arc-lower",
            )
        )
    closing_in = [
        (X(w[-1]), Y(0.0)),
        (X(w[-1]), Y(depth_in)),
        (X(x_r), Y(depth_in)),
        (X(x_r), Y(0.0)),
    ]
    closing_out = [
        (X(x_r), Y(0.0)),
        (X(detour), Y(0.5)),
        (X(detour), Y(depth_out)),
        (X(w[0]), Y(depth_out)),
        (X(w[0]), Y(0.0)),
    ]
    parts.append(_polyline(closing_in, spec.stroke, "arc-closing"))
    parts.append(_polyline(closing_out, spec.stroke, "arc-closing"))
    parts.append(
        f'<circle class="crossing-r" cx="{_fmt(X(x_r))}" cy="{_fmt(baseline)}" '
        f'r="{_fmt(spec.stroke * 1.5)}" fill="black"/>'
    )
    parts.append(
        f'<text class="label" x="{_fmt(X(x_r))}" y="{_fmt(baseline - 0.35 * unit)}" '
        f'font-size="{_fmt(0.35 * unit)}" text-anchor="middle">r</text>'
    )
    for k in range(1, n + 1):
        parts.append(
            f'<circle class="crossing" cx="{_fmt(X(k))}" cy="{_fmt(baseline)}" '
            f'r="{_fmt(spec.stroke * 1.5)}" fill="black"/>'
        )
        parts.append(
            f'<text class="label" x="{_fmt(X(k))}" y="{_fmt(baseline + 0.45 * unit)}" '
            f'font-size="{_fmt(0.35 * unit)}" text-anchor="middle">{k}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _unit_semicircle(
    a: float, b: float, up: bool, samples: int
) -> list[tuple[float, float]]:
    center = (a + b) / 2.0
    radius = abs(b - a) / 2.0
    points = []
    for s in range(samples + 1):
        angle = math.pi * s / samples
        u = center - radius * math.cos(angle)
        d = -radius * math.sin(angle) if up else radius * math.sin(angle)
        points.append((u, d))
    return points
