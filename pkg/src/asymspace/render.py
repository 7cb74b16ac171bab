"""SVG pictures of planar unit balls, their theta cones and spans.

Polyhedral balls are clipped to the viewport exactly (double description
of ball ∩ box); analytic balls are traced radially.  Coordinates are
written with two decimals so the bytes only depend on the input.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .cones import span_theta, theta_cone
from .gauge import AsymmetricGauge
from .polyhedra import Polyhedron, dd_convert

__all__ = ["RenderError", "ball_polygon", "render_gauge_svg", "render_ball_svg"]

SCALE = 50
MARGIN = 20
RADIAL_SAMPLES = 720


class RenderError(ValueError):
    pass


def _box_exit(d, viewport) -> float:
    """Largest t with t*d inside the viewport (which must contain 0)."""
    xmin, xmax, ymin, ymax = viewport
    ts = []
    for comp, lo, hi in ((d[0], xmin, xmax), (d[1], ymin, ymax)):
        if comp > 0:
            ts.append(hi / comp)
        elif comp < 0:
            ts.append(lo / comp)
    return min(ts)


def _exact_polygon(g: AsymmetricGauge, viewport) -> list:
    xmin, xmax, ymin, ymax = (Fraction(v) for v in viewport)
    rows = list(g.unit_ball.hrep)
    rows += [((1, 0), xmax), ((-1, 0), -xmin), ((0, 1), ymax), ((0, -1), -ymin)]
    pts = [(float(x), float(y)) for x, y in dd_convert(Polyhedron.from_hrep(rows, 2)).vrep.points]
    cx = sum(p[0] for p in pts) / len(pts)
    cy = sum(p[1] for p in pts) / len(pts)
    return sorted(pts, key=lambda p: math.atan2(p[1] - cy, p[0] - cx))


def _radial_polygon(g: AsymmetricGauge, viewport) -> list:
    pts = []
    for k in range(RADIAL_SAMPLES):
        phi = 2 * math.pi * k / RADIAL_SAMPLES
        d = (math.cos(phi), math.sin(phi))
        t = _box_exit(d, viewport)
        val = g.analytic.evaluator(d)
        if val > 1e-12:
            t = min(t, 1 / val)
        pts.append((t * d[0], t * d[1]))
    return pts


def ball_polygon(g: AsymmetricGauge, viewport) -> list:
    """Vertices (floats, counterclockwise) of B_q[0,1] clipped to the viewport."""
    if g.dim != 2:
        raise RenderError(f"can only draw planar gauges, got dimension {g.dim}")
    xmin, xmax, ymin, ymax = viewport
    if not (xmin < 0 < xmax and ymin < 0 < ymax):
        raise RenderError("the viewport must contain the origin in its interior")
    if g.exact:
        return _exact_polygon(g, viewport)
    return _radial_polygon(g, viewport)


def _f(v: float) -> str:
    s = f"{v:.2f}"
    return "0.00" if s == "-0.00" else s


def render_gauge_svg(g: AsymmetricGauge, viewport=(-3, 3, -3, 3), title: str = "") -> str:
    poly = ball_polygon(g, viewport)
    xmin, xmax, ymin, ymax = (float(v) for v in viewport)
    width = (xmax - xmin) * SCALE + 2 * MARGIN
    height = (ymax - ymin) * SCALE + 2 * MARGIN

    def px(p):
        return _f((p[0] - xmin) * SCALE + MARGIN), _f((ymax - p[1]) * SCALE + MARGIN)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_f(width)}" '
        f'height="{_f(height)}" viewBox="0 0 {_f(width)} {_f(height)}">',
    ]
    if title:
        out.append(f"  <title>{title}</title>")
    out.append("  <defs>")
    out.append('    <marker id="head" markerWidth="8" markerHeight="8" refX="7" refY="4" orient="auto">')
    out.append('      <path d="M0,0 L8,4 L0,8 z" fill="#b00"/>')
    out.append("    </marker>")
    out.append("  </defs>")
    ax0, ax1 = px((xmin, 0)), px((xmax, 0))
    ay0, ay1 = px((0, ymin)), px((0, ymax))
    out.append(f'  <line x1="{ax0[0]}" y1="{ax0[1]}" x2="{ax1[0]}" y2="{ax1[1]}" stroke="#999" stroke-width="1"/>')
    out.append(f'  <line x1="{ay0[0]}" y1="{ay0[1]}" x2="{ay1[0]}" y2="{ay1[1]}" stroke="#999" stroke-width="1"/>')
    points = " ".join(",".join(px(p)) for p in poly)
    out.append(f'  <polygon points="{points}" fill="#9cf" fill-opacity="0.6" stroke="#036" stroke-width="1.5"/>')

    span = span_theta(g)
    if span.dim == 1:
        d = tuple(float(c) for c in span.basis[0])
        a = _box_exit(d, viewport)
        b = _box_exit((-d[0], -d[1]), viewport)
        p0, p1 = px((-b * d[0], -b * d[1])), px((a * d[0], a * d[1]))
        out.append(
            f'  <line x1="{p0[0]}" y1="{p0[1]}" x2="{p1[0]}" y2="{p1[1]}" '
            'stroke="#060" stroke-width="1.5" stroke-dasharray="6,4"/>'
        )
    for gen in theta_cone(g).generators:
        d = tuple(float(c) for c in gen)
        norm = math.hypot(*d)
        d = (d[0] / norm, d[1] / norm)
        t = 0.85 * _box_exit(d, viewport)
        o, e = px((0, 0)), px((t * d[0], t * d[1]))
        out.append(
            f'  <line x1="{o[0]}" y1="{o[1]}" x2="{e[0]}" y2="{e[1]}" '
            'stroke="#b00" stroke-width="2" marker-end="url(#head)"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_ball_svg(space, out_path=None) -> str:
    """Render a space file's gauge; writes ``out_path`` when given."""
    fx = space.fixture
    viewport = fx.viewport if fx is not None else (-3, 3, -3, 3)
    title = fx.name if fx is not None else (space.name or "")
    svg = render_gauge_svg(space.gauge, viewport, title)
    if out_path is not None:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
    return svg
