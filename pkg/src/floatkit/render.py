"""Deterministic SVG rendering.

The output is a plain string built with fixed formatting ("%.4f"
coordinates, no timestamps, no randomness), so rendering the same scene
twice yields byte-identical documents.  Smooth curves become a dense
closed polyline; arc splines map to native SVG arc commands.  The figure
is scaled to a width of 1024 user units with a five percent margin
around the curve's bounding box, and the y axis is flipped so
counterclockwise geometry appears counterclockwise on screen.

Decorations ride on top of the curve: waterline chords as line elements,
the caps they cut off as shaded closed paths (boundary arc plus the
closing chord), and text labels for angle or density annotations.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

import numpy as np

from .curves import ArcSplineCurve, FourierConvexCurve
from .errors import CurveFormatError

WIDTH = 1024.0
MARGIN = 0.05
POLYLINE_SAMPLES = 2048
CAP_SAMPLES = 256

CHORD_COLOR = "#28608c"
SHADE_COLOR = "#9ec9e6"
LABEL_COLOR = "#1a1a1a"


def _fmt(x):
    return ("%.4f" % (x + 0.0,))


def _bbox_points(curve):
    if isinstance(curve, ArcSplineCurve):
        pts = []
        for arc in curve.arcs:
            u = np.linspace(0.0, arc.length, 256)
            pts.append(arc.point_at_local(u))
        return np.vstack(pts)
    s = np.linspace(0.0, curve.perimeter, POLYLINE_SAMPLES, endpoint=False)
    return curve.point_at(s)


def _curve_path(curve, to_svg):
    if isinstance(curve, FourierConvexCurve):
        s = np.linspace(0.0, curve.perimeter, POLYLINE_SAMPLES, endpoint=False)
        x, y = to_svg(curve.point_at(s))
        parts = [f"M {_fmt(x[0])} {_fmt(y[0])}"]
        parts += [f"L {_fmt(xi)} {_fmt(yi)}" for xi, yi in zip(x[1:], y[1:])]
        parts.append("Z")
        return " ".join(parts)
    if isinstance(curve, ArcSplineCurve):
        start = curve.arcs[0].start_point
        sx, sy = to_svg(np.asarray(start))
        parts = [f"M {_fmt(float(sx))} {_fmt(float(sy))}"]
        for arc in curve.arcs:
            end = np.asarray(arc.end_point)
            ex, ey = to_svg(end)
            r = _fmt(arc.radius * scale_of(to_svg))
            large = 1 if arc.extent > math.pi else 0
            sweep = 0 if arc.ccw else 1
            parts.append(
                f"A {r} {r} 0 {large} {sweep} {_fmt(float(ex))} {_fmt(float(ey))}"
            )
        parts.append("Z")
        return " ".join(parts)
    raise CurveFormatError(f"cannot render object of type {type(curve).__name__}")


def scale_of(to_svg):
    """Recover the uniform scale a projection applies to lengths."""
    origin = np.array([0.0, 0.0])
    unit = np.array([1.0, 0.0])
    ox, _ = to_svg(origin)
    ux, _ = to_svg(unit)
    return float(ux - ox)


def _cap_path(curve, sample, to_svg):
    """Closed path of the boundary arc from the chord start to its end."""
    per = curve.perimeter
    s0 = sample.s_start % per
    s1 = sample.s_end % per
    if s1 <= s0:
        s1 += per
    s = np.linspace(s0, s1, CAP_SAMPLES)
    x, y = to_svg(curve.point_at(s))
    parts = [f"M {_fmt(x[0])} {_fmt(y[0])}"]
    parts += [f"L {_fmt(xi)} {_fmt(yi)}" for xi, yi in zip(x[1:], y[1:])]
    parts.append("Z")
    return " ".join(parts)


def render_svg(
    curve,
    chords=(),
    shaded=(),
    labels=(),
    stroke="#1a1a1a",
    stroke_width=None,
):
    """Render a curve plus decorations to a standalone SVG document.

    ``chords`` and ``shaded`` take ChordSamples (shaded caps are drawn
    beneath the curve, chords above it); ``labels`` takes (x, y, text)
    triples in curve coordinates.
    """
    pts = _bbox_points(curve)
    min_xy = pts.min(axis=0)
    max_xy = pts.max(axis=0)
    span = max_xy - min_xy
    pad = MARGIN * float(max(span[0], span[1]))
    min_xy = min_xy - pad
    span = span + 2.0 * pad
    scale = WIDTH / span[0]
    height = span[1] * scale

    def to_svg(p):
        return (
            (p[..., 0] - min_xy[0]) * scale,
            (max_xy[1] + pad - p[..., 1]) * scale,
        )

    if stroke_width is None:
        stroke_width = WIDTH / 256.0

    body = []
    for sample in shaded:
        body.append(
            f'  <path d="{_cap_path(curve, sample, to_svg)}" '
            f'fill="{SHADE_COLOR}" fill-opacity="0.6" stroke="none"/>'
        )
    body.append(
        f'  <path d="{_curve_path(curve, to_svg)}" fill="none" '
        f'stroke="{stroke}" stroke-width="{_fmt(stroke_width)}" '
        'stroke-linejoin="round" stroke-linecap="round"/>'
    )
    for sample in chords:
        x1, y1 = to_svg(np.asarray(sample.p_start))
        x2, y2 = to_svg(np.asarray(sample.p_end))
        body.append(
            f'  <line x1="{_fmt(float(x1))}" y1="{_fmt(float(y1))}" '
            f'x2="{_fmt(float(x2))}" y2="{_fmt(float(y2))}" '
            f'stroke="{CHORD_COLOR}" stroke-width="{_fmt(0.6 * stroke_width)}" '
            'stroke-linecap="round"/>'
        )
    font = 8.0 * stroke_width
    for lx, ly, text in labels:
        tx, ty = to_svg(np.array([float(lx), float(ly)]))
        body.append(
            f'  <text x="{_fmt(float(tx))}" y="{_fmt(float(ty))}" '
            f'fill="{LABEL_COLOR}" font-family="serif" '
            f'font-size="{_fmt(font)}">{escape(str(text))}</text>'
        )

    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="0 0 {_fmt(WIDTH)} {_fmt(height)}" '
        f'width="{_fmt(WIDTH)}" height="{_fmt(height)}">\n'
        + "\n".join(body)
        + "\n</svg>\n"
    )
