"""Deterministic SVG picture of a polystable moduli report.

The disc is drawn in polar coordinates: a Pic^0 element of degree d and
angle a sits at radius exp(d - rho) (clipped to [0, 1]) and angle 2*pi*a, so
the boundary circle is degree rho and the centre is degree -infinity.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from xml.sax.saxutils import escape

from .moduli import ModuliReport
from .picard import LineBundle


@dataclass(frozen=True)
class RenderSpec:
    width: int = 480
    height: int = 480
    margin: int = 24
    center_dot: float = 4.0
    puncture_radius: float = 4.0
    node_arm: float = 5.0
    touch_size: float = 8.0
    stroke: str = "#222222"
    chord_color: str = "#1f5fa8"
    puncture_color: str = "#b22222"
    touch_color: str = "#d98200"

    def __post_init__(self) -> None:
        if self.width <= 0 or self.height <= 0:
            raise ValueError("width and height must be positive")


def radius_map(d: Fraction, rho: Fraction) -> float:
    x = d - rho
    if x >= 0:
        return 1.0
    return math.exp(float(x))


def _fmt(x: float) -> str:
    out = f"{x:.3f}"
    return "0.000" if out == "-0.000" else out


class _Canvas:
    def __init__(self, report: ModuliReport, spec: RenderSpec) -> None:
        self.rho = report.rho
        self.cx = spec.width / 2
        self.cy = spec.height / 2
        self.scale = min(spec.width, spec.height) / 2 - spec.margin

    def point(self, d: Fraction, arg: Fraction) -> tuple[float, float]:
        r = radius_map(d, self.rho) * self.scale
        t = 2 * math.pi * float(arg)
        # SVG y axis points down
        return self.cx + r * math.cos(t), self.cy - r * math.sin(t)

    def bundle(self, a: LineBundle) -> tuple[float, float]:
        return self.point(a.logmod, a.arg)


def render_svg(report: ModuliReport, spec: RenderSpec | None = None) -> str:
    spec = spec or RenderSpec()
    cv = _Canvas(report, spec)
    s = report.surface
    title = f"{s.kind.value} surface, rho = {report.rho}"
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.width}" height="{spec.height}" '
        f'viewBox="0 0 {spec.width} {spec.height}">',
        f"<title>{escape(title)}</title>",
        f'<circle class="boundary" cx="{_fmt(cv.cx)}" cy="{_fmt(cv.cy)}" r="{_fmt(cv.scale)}" '
        f'fill="none" stroke="{spec.stroke}" stroke-width="2"/>',
        f'<circle class="center" cx="{_fmt(cv.cx)}" cy="{_fmt(cv.cy)}" r="{_fmt(spec.center_dot)}" '
        f'fill="{spec.stroke}"/>',
    ]
    for p in report.singular_pairs:
        x1, y1 = cv.bundle(p.puncture)
        x2, y2 = cv.bundle(p.R)
        out.append(
            f'<line class="chord" x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="{spec.chord_color}" stroke-width="1.5"/>'
        )
        a = spec.node_arm
        out.append(
            f'<path class="node" d="M {_fmt(x2 - a)} {_fmt(y2 - a)} L {_fmt(x2 + a)} {_fmt(y2 + a)} '
            f'M {_fmt(x2 - a)} {_fmt(y2 + a)} L {_fmt(x2 + a)} {_fmt(y2 - a)}" '
            f'stroke="{spec.chord_color}" stroke-width="1.5"/>'
        )
    for u in report.punctures_U:
        x, y = cv.bundle(u)
        out.append(
            f'<circle class="puncture" cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(spec.puncture_radius)}" '
            f'fill="white" stroke="{spec.puncture_color}" stroke-width="1.5"/>'
        )
    h = spec.touch_size / 2
    for t in report.boundary_touches:
        x, y = cv.bundle(t)
        out.append(
            f'<rect class="touch" x="{_fmt(x - h)}" y="{_fmt(y - h)}" width="{_fmt(spec.touch_size)}" '
            f'height="{_fmt(spec.touch_size)}" fill="{spec.touch_color}"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
