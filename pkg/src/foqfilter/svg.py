"""Static SVG line charts of magnitude responses (log-omega x axis, dB y axis)."""

from __future__ import annotations

import math
import os
from typing import Sequence, Union
from xml.sax.saxutils import escape

import numpy as np

from .sweep import ExportError, ResponseSample

__all__ = ["render_svg", "svg_document"]

WIDTH, HEIGHT = 720, 480
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 70, 150, 40, 55
COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf")

Series = Sequence[ResponseSample]
LabeledSeries = tuple[str, Series]


def _nice_step(span: float) -> float:
    raw = span / 6
    mag = 10 ** math.floor(math.log10(raw))
    for m in (1, 2, 5, 10):
        if raw <= m * mag:
            return m * mag
    return 10 * mag


def _normalize(series) -> list[LabeledSeries]:
    if len(series) and isinstance(series[0], ResponseSample):
        return [("response", series)]
    return [(str(label), s) for label, s in series]


def svg_document(
    series: Union[Series, Sequence[LabeledSeries]],
    title: str = "",
    xlabel: str = "ω (rad/s)",
    ylabel: str = "Magnitude (dB)",
) -> str:
    """Build the SVG text. Identical input gives identical output."""
    named = _normalize(series)
    if not named or any(len(s) == 0 for _, s in named):
        raise ValueError("render_svg needs at least one non-empty series")

    curves = []
    for label, s in named:
        lw = np.log10([p.omega for p in s])
        db = np.array([p.magnitude_db for p in s], dtype=float)
        curves.append((label, lw, db))
    all_x = np.concatenate([c[1] for c in curves])
    all_y = np.concatenate([c[2][np.isfinite(c[2])] for c in curves])
    if all_y.size == 0:
        raise ValueError("series contain no finite magnitudes")
    x0, x1 = math.floor(all_x.min()), math.ceil(all_x.max())
    if x1 == x0:
        x1 = x0 + 1
    ystep = _nice_step(max(all_y.max() - all_y.min(), 1e-9))
    y0 = math.floor(all_y.min() / ystep) * ystep
    y1 = math.ceil(all_y.max() / ystep) * ystep
    if y1 == y0:
        y1 = y0 + ystep

    pw = WIDTH - MARGIN_L - MARGIN_R
    ph = HEIGHT - MARGIN_T - MARGIN_B

    def px(x):
        return MARGIN_L + (x - x0) / (x1 - x0) * pw

    def py(y):
        return MARGIN_T + (y1 - y) / (y1 - y0) * ph

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" '
        f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>',
    ]
    if title:
        out.append(
            f'<text x="{MARGIN_L + pw / 2:.2f}" y="{MARGIN_T - 15}" text-anchor="middle" '
            f'font-size="14">{escape(title)}</text>'
        )

    out.append('<g stroke="#dddddd" stroke-width="1">')
    for d in range(x0, x1 + 1):
        out.append(f'<line x1="{px(d):.2f}" y1="{MARGIN_T}" x2="{px(d):.2f}" y2="{MARGIN_T + ph}"/>')
    nticks = int(round((y1 - y0) / ystep))
    for i in range(nticks + 1):
        y = y0 + i * ystep
        out.append(f'<line x1="{MARGIN_L}" y1="{py(y):.2f}" x2="{MARGIN_L + pw}" y2="{py(y):.2f}"/>')
    out.append("</g>")
    out.append(
        f'<rect x="{MARGIN_L}" y="{MARGIN_T}" width="{pw}" height="{ph}" fill="none" stroke="#000000"/>'
    )
    for d in range(x0, x1 + 1):
        out.append(
            f'<text x="{px(d):.2f}" y="{MARGIN_T + ph + 18}" text-anchor="middle">10<tspan '
            f'baseline-shift="super" font-size="9">{d}</tspan></text>'
        )
    for i in range(nticks + 1):
        y = y0 + i * ystep
        out.append(
            f'<text x="{MARGIN_L - 6}" y="{py(y) + 4:.2f}" text-anchor="end">{y:g}</text>'
        )
    out.append(
        f'<text x="{MARGIN_L + pw / 2:.2f}" y="{HEIGHT - 12}" text-anchor="middle">{escape(xlabel)}</text>'
    )
    cy = MARGIN_T + ph / 2
    out.append(
        f'<text x="18" y="{cy:.2f}" text-anchor="middle" transform="rotate(-90 18 {cy:.2f})">'
        f"{escape(ylabel)}</text>"
    )

    for k, (label, lw, db) in enumerate(curves):
        color = COLORS[k % len(COLORS)]
        pts = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in zip(lw, db) if math.isfinite(y))
        out.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{pts}">'
            f"<title>{escape(label)}</title></polyline>"
        )

    lx = MARGIN_L + pw + 12
    for k, (label, _, _) in enumerate(curves):
        ly = MARGIN_T + 10 + 18 * k
        color = COLORS[k % len(COLORS)]
        out.append(
            f'<g class="legend-entry"><line x1="{lx}" y1="{ly}" x2="{lx + 20}" y2="{ly}" '
            f'stroke="{color}" stroke-width="2"/><text x="{lx + 26}" y="{ly + 4}">{escape(label)}</text></g>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(series, destination, title: str = "", xlabel: str = "ω (rad/s)", ylabel: str = "Magnitude (dB)"):
    """Write one sweep, or a list of ``(label, sweep)`` pairs, as an SVG file."""
    text = svg_document(series, title=title, xlabel=xlabel, ylabel=ylabel)
    path = os.fspath(destination)
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise ExportError(f"cannot write SVG to {path}: {exc.strerror or exc}") from exc
