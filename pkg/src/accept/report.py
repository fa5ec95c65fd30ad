"""Deterministic renderers: Figure-style SVG plots and table serializers.

No plotting libraries; output is plain SVG 1.1 text, byte-identical for
identical input (no timestamps or generated ids).
"""

from __future__ import annotations

import io
import json
import warnings
from dataclasses import dataclass, field

from .curve import AcceptabilityCurve, AcceptabilityTable, PercentileMarkers
from .errors import EmptyDraws, TooManyCurves

PALETTE = ("#0072B2", "#D55E00", "#009E73")  # colour-blind-safe

_MARKER_LEGEND = (
    ("percentile_2_5", "2.5 percentile"),
    ("percentile_50", "50 percentile (median)"),
    ("percentile_97_5", "97.5 percentile"),
    ("unacceptable", "Unacceptable difference"),
    ("expected", "Expected difference"),
)


@dataclass(frozen=True)
class Annotation:
    """Pre-specified difference marker: position on the curve."""

    kind: str  # "unacceptable" | "expected"
    threshold_pp: float
    value: float


@dataclass(frozen=True)
class PlotSpec:
    curves: tuple  # 1-3 AcceptabilityCurve
    markers: tuple = ()      # per-curve PercentileMarkers (or None)
    annotations: tuple = ()  # per-curve tuple of Annotation
    layout: str = "faceted"  # "faceted" | "overlay"
    width: int = 900
    height: int = 450


def _fmt(x: float) -> str:
    return f"{x:.2f}".rstrip("0").rstrip(".")


def _esc(text: str) -> str:
    return (text.replace("&", "&amp;").replace("<", "&lt;")
            .replace(">", "&gt;").replace('"', "&quot;"))


def _glyph(kind: str, x: float, y: float, colour: str) -> str:
    # square / circle / triangle for percentiles; bracket and bar for the
    # pre-specified differences
    if kind == "percentile_2_5":
        return (f'<rect x="{_fmt(x - 4)}" y="{_fmt(y - 4)}" width="8" height="8" '
                f'fill="{colour}"/>')
    if kind == "percentile_50":
        return f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="4.5" fill="{colour}"/>'
    if kind == "percentile_97_5":
        pts = f"{_fmt(x)},{_fmt(y - 5)} {_fmt(x - 5)},{_fmt(y + 4)} {_fmt(x + 5)},{_fmt(y + 4)}"
        return f'<polygon points="{pts}" fill="{colour}"/>'
    if kind == "unacceptable":
        return (f'<text x="{_fmt(x)}" y="{_fmt(y + 6)}" text-anchor="middle" '
                f'font-size="16" font-family="monospace" fill="{colour}">[</text>')
    if kind == "expected":
        return (f'<line x1="{_fmt(x)}" y1="{_fmt(y - 7)}" x2="{_fmt(x)}" '
                f'y2="{_fmt(y + 7)}" stroke="{colour}" stroke-width="2"/>')
    raise ValueError(f"unknown marker kind {kind!r}")


def _panel(curve_items, x_range, px, py, pw, ph, panel_title=None):
    """Render one panel: frame, reference line, curves, markers."""
    x_lo, x_hi = x_range
    span = x_hi - x_lo if x_hi > x_lo else 1.0

    def sx(t):
        return px + (t - x_lo) / span * pw

    def sy(v):
        return py + (1.0 - v) * ph

    parts = [f'<rect x="{_fmt(px)}" y="{_fmt(py)}" width="{_fmt(pw)}" '
             f'height="{_fmt(ph)}" fill="white" stroke="#444"/>']
    if panel_title:
        parts.append(f'<text x="{_fmt(px + pw / 2)}" y="{_fmt(py - 8)}" '
                     f'text-anchor="middle" font-size="14" '
                     f'font-family="sans-serif">{_esc(panel_title)}</text>')
    # dotted vertical reference line at threshold 0
    if x_lo <= 0.0 <= x_hi:
        x0 = sx(0.0)
        parts.append(f'<line x1="{_fmt(x0)}" y1="{_fmt(py)}" x2="{_fmt(x0)}" '
                     f'y2="{_fmt(py + ph)}" stroke="#888" stroke-dasharray="2,4"/>')
    # y-axis percent ticks
    for v in (0.0, 0.25, 0.5, 0.75, 1.0):
        y = sy(v)
        parts.append(f'<line x1="{_fmt(px - 4)}" y1="{_fmt(y)}" x2="{_fmt(px)}" '
                     f'y2="{_fmt(y)}" stroke="#444"/>')
        parts.append(f'<text x="{_fmt(px - 7)}" y="{_fmt(y + 4)}" text-anchor="end" '
                     f'font-size="11" font-family="sans-serif">{int(v * 100)}%</text>')
    # x-axis ticks: 5 evenly spaced
    for i in range(5):
        t = x_lo + span * i / 4
        x = sx(t)
        parts.append(f'<line x1="{_fmt(x)}" y1="{_fmt(py + ph)}" x2="{_fmt(x)}" '
                     f'y2="{_fmt(py + ph + 4)}" stroke="#444"/>')
        parts.append(f'<text x="{_fmt(x)}" y="{_fmt(py + ph + 16)}" text-anchor="middle" '
                     f'font-size="11" font-family="sans-serif">{t:.1f}</text>')

    for curve, markers, annotations, colour in curve_items:
        d = " ".join(
            ("M" if i == 0 else "L") + f"{_fmt(sx(t))},{_fmt(sy(v))}"
            for i, (t, v) in enumerate(curve.points))
        parts.append(f'<path d="{d}" fill="none" stroke="{colour}" '
                     f'stroke-width="2.5" class="curve"/>')
        if markers is not None:
            for kind, (t, v) in (("percentile_97_5", markers.lower),
                                 ("percentile_50", markers.median),
                                 ("percentile_2_5", markers.upper)):
                parts.append(_glyph(kind, sx(t), sy(v), "#222"))
        for ann in annotations:
            if not x_lo <= ann.threshold_pp <= x_hi:
                warnings.warn(
                    f"annotation {ann.kind!r} at {ann.threshold_pp} pp lies outside "
                    f"the plotted range [{x_lo:.2f}, {x_hi:.2f}]; clipped")
                continue
            parts.append(_glyph(ann.kind, sx(ann.threshold_pp), sy(ann.value), "#222"))
    return parts


def render_curve_svg(spec: PlotSpec) -> str:
    """Well-formed SVG with one path per curve and distinct marker glyphs."""
    if len(spec.curves) > 3:
        raise TooManyCurves(f"at most 3 curves, got {len(spec.curves)}")
    if len(spec.curves) == 0:
        raise EmptyDraws("need at least one curve to plot")
    for c in spec.curves:
        if len(c.points) == 0:
            raise EmptyDraws(f"curve {c.trial_name!r} has no points")

    w, h = spec.width, spec.height
    n = len(spec.curves)
    markers = spec.markers or (None,) * n
    annotations = spec.annotations or ((),) * n

    margin_l, margin_r, margin_t, margin_b = 55, 15, 30, 80
    legend_y = h - 30

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" '
        f'height="{h}" viewBox="0 0 {w} {h}">',
        f'<rect width="{w}" height="{h}" fill="white"/>',
    ]

    if spec.layout == "faceted":
        gap = 30
        pw = (w - margin_l - margin_r - gap * (n - 1)) / n
        ph = h - margin_t - margin_b
        for i, curve in enumerate(spec.curves):
            ts = curve.thresholds
            x_range = (float(ts.min()), float(ts.max()))
            px = margin_l + i * (pw + gap)
            out.append(f'<g class="panel" data-trial="{_esc(curve.trial_name)}">')
            out.extend(_panel(
                [(curve, markers[i], annotations[i], PALETTE[i])],
                x_range, px, margin_t, pw, ph, panel_title=curve.trial_name))
            out.append("</g>")
    else:
        lo = min(float(c.thresholds.min()) for c in spec.curves)
        hi = max(float(c.thresholds.max()) for c in spec.curves)
        pw = w - margin_l - margin_r
        ph = h - margin_t - margin_b
        items = [(c, markers[i], annotations[i], PALETTE[i])
                 for i, c in enumerate(spec.curves)]
        out.append('<g class="panel">')
        out.extend(_panel(items, (lo, hi), margin_l, margin_t, pw, ph))
        out.append("</g>")

    # axis labels
    out.append(f'<text x="{_fmt(w / 2)}" y="{_fmt(h - 50)}" text-anchor="middle" '
               f'font-size="13" font-family="sans-serif">Acceptability threshold</text>')
    out.append(f'<text x="14" y="{_fmt(h / 2)}" text-anchor="middle" font-size="13" '
               f'font-family="sans-serif" transform="rotate(-90 14 {_fmt(h / 2)})">'
               f'Acceptability value</text>')

    # legend for the five marker kinds
    x = margin_l
    for kind, label in _MARKER_LEGEND:
        out.append(_glyph(kind, x, legend_y, "#222"))
        out.append(f'<text x="{_fmt(x + 10)}" y="{_fmt(legend_y + 4)}" font-size="11" '
                   f'font-family="sans-serif">{_esc(label)}</text>')
        x += 10 + 7 * len(label) + 25

    out.append("</svg>")
    return "\n".join(out)


def render_table(table: AcceptabilityTable, format: str = "csv") -> str:
    """Serialize a threshold table as csv, markdown, or json.

    CSV and markdown carry the probability at 6 decimal places; JSON carries
    exact floats so parse(render) round-trips.
    """
    if format == "csv":
        import csv
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\r\n")
        writer.writerow(["acceptability_threshold", "probability", "formatted"])
        for t, p, s in table.rows:
            writer.writerow([_num(t), f"{p:.6f}", s])
        return buf.getvalue()
    if format == "markdown":
        lines = ["| acceptability_threshold | probability | formatted |",
                 "| --- | --- | --- |"]
        lines += [f"| {_num(t)} | {p:.6f} | {s} |" for t, p, s in table.rows]
        return "\n".join(lines) + "\n"
    if format == "json":
        rows = [{"acceptability_threshold": t, "probability": p, "formatted": s}
                for t, p, s in table.rows]
        return json.dumps(rows, indent=2) + "\n"
    raise ValueError(f"unknown table format {format!r}")


def _num(x: float) -> str:
    return str(int(x)) if float(x).is_integer() else repr(float(x))
