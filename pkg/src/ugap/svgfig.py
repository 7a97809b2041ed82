"""Minimal deterministic SVG charts.

Hand-rolled on purpose: figures are plain text, diff well in golden
tests, and carry no rendering dependency or embedded timestamps. Every
number a figure shows is also exported as CSV elsewhere.
"""

from __future__ import annotations

import math
from typing import Sequence
from xml.sax.saxutils import escape

WIDTH, HEIGHT = 760.0, 480.0
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 70.0, 20.0, 44.0, 52.0
PALETTE = ("#1f6fb4", "#c23b22", "#2c8a4b", "#8a5ca8", "#b8860b", "#4d4d4d")


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _nice_ticks(lo: float, hi: float, target: int = 5) -> list[float]:
    if hi <= lo:
        hi = lo + 1.0
    raw = (hi - lo) / target
    mag = 10.0 ** math.floor(math.log10(raw))
    step = min((s for s in (1.0, 2.0, 2.5, 5.0, 10.0) if s * mag >= raw), default=10.0) * mag
    first = math.ceil(lo / step) * step
    ticks = []
    t = first
    while t <= hi + 1e-12 * step:
        ticks.append(round(t, 10))
        t += step
    return ticks


class _Frame:
    """Affine data-to-pixel mapping over the plot area."""

    def __init__(self, xlo, xhi, ylo, yhi):
        pad_y = 0.06 * (yhi - ylo or 1.0)
        self.xlo, self.xhi = xlo, xhi
        self.ylo, self.yhi = ylo - pad_y, yhi + pad_y

    def x(self, v: float) -> float:
        span = self.xhi - self.xlo or 1.0
        return MARGIN_L + (v - self.xlo) / span * (WIDTH - MARGIN_L - MARGIN_R)

    def y(self, v: float) -> float:
        span = self.yhi - self.ylo or 1.0
        return HEIGHT - MARGIN_B - (v - self.ylo) / span * (HEIGHT - MARGIN_T - MARGIN_B)


def _header(title: str) -> list[str]:
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH:g}" height="{HEIGHT:g}" '
        f'viewBox="0 0 {WIDTH:g} {HEIGHT:g}" font-family="Helvetica,Arial,sans-serif">',
        f'<rect width="{WIDTH:g}" height="{HEIGHT:g}" fill="white"/>',
        f'<text x="{WIDTH / 2:g}" y="24" text-anchor="middle" font-size="16">{escape(title)}</text>',
    ]


def _axes(frame: _Frame, xlabel: str, ylabel: str, xticks, yticks, xtick_labels=None) -> list[str]:
    out = []
    x0, x1 = MARGIN_L, WIDTH - MARGIN_R
    y0, y1 = HEIGHT - MARGIN_B, MARGIN_T
    out.append(f'<line x1="{x0:g}" y1="{y0:g}" x2="{x1:g}" y2="{y0:g}" stroke="black"/>')
    out.append(f'<line x1="{x0:g}" y1="{y0:g}" x2="{x0:g}" y2="{y1:g}" stroke="black"/>')
    labels = xtick_labels or [f"{t:g}" for t in xticks]
    for t, lab in zip(xticks, labels):
        px = frame.x(t)
        out.append(f'<line x1="{_fmt(px)}" y1="{y0:g}" x2="{_fmt(px)}" y2="{y0 + 5:g}" stroke="black"/>')
        out.append(
            f'<text x="{_fmt(px)}" y="{y0 + 20:g}" text-anchor="middle" font-size="11">{escape(lab)}</text>'
        )
    for t in yticks:
        py = frame.y(t)
        out.append(f'<line x1="{x0 - 5:g}" y1="{_fmt(py)}" x2="{x0:g}" y2="{_fmt(py)}" stroke="black"/>')
        out.append(
            f'<text x="{x0 - 9:g}" y="{_fmt(py + 4)}" text-anchor="end" font-size="11">{t:g}</text>'
        )
    out.append(
        f'<text x="{(x0 + x1) / 2:g}" y="{HEIGHT - 12:g}" text-anchor="middle" font-size="12">{escape(xlabel)}</text>'
    )
    out.append(
        f'<text x="16" y="{(y0 + y1) / 2:g}" text-anchor="middle" font-size="12" '
        f'transform="rotate(-90 16 {(y0 + y1) / 2:g})">{escape(ylabel)}</text>'
    )
    return out


def scatter_fit_svg(
    title: str,
    log_u: Sequence[float],
    log_v: Sequence[float],
    slope: float,
    intercept: float,
    xlabel: str = "log unemployment rate",
    ylabel: str = "log vacancy rate",
) -> str:
    """Log-log scatter with its fitted line; one circle per observation."""
    frame = _Frame(min(log_u), max(log_u), min(log_v), max(log_v))
    parts = _header(title)
    parts += _axes(
        frame,
        xlabel,
        ylabel,
        _nice_ticks(frame.xlo, frame.xhi),
        _nice_ticks(frame.ylo, frame.yhi),
    )
    xa, xb = min(log_u), max(log_u)
    parts.append(
        f'<line x1="{_fmt(frame.x(xa))}" y1="{_fmt(frame.y(intercept + slope * xa))}" '
        f'x2="{_fmt(frame.x(xb))}" y2="{_fmt(frame.y(intercept + slope * xb))}" '
        f'stroke="{PALETTE[1]}" stroke-width="2"/>'
    )
    for x, y in zip(log_u, log_v):
        parts.append(
            f'<circle cx="{_fmt(frame.x(x))}" cy="{_fmt(frame.y(y))}" r="3" '
            f'fill="{PALETTE[0]}" fill-opacity="0.75"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def timeseries_svg(
    title: str,
    tick_positions: Sequence[int],
    tick_labels: Sequence[str],
    n_points: int,
    series: Sequence[tuple[str, Sequence[float]]],
    bands: Sequence[tuple[int, int]] = (),
    ylabel: str = "percent",
) -> str:
    """Multi-line quarterly chart with optional shaded bands.

    x positions are 0..n_points-1; bands are inclusive (start, end) index
    pairs drawn behind the lines.
    """
    values = [x for _, ys in series for x in ys]
    frame = _Frame(0.0, float(max(n_points - 1, 1)), min(values), max(values))
    parts = _header(title)
    for start, end in bands:
        x0, x1 = frame.x(float(start)), frame.x(float(end) + 1.0)
        parts.append(
            f'<rect x="{_fmt(x0)}" y="{MARGIN_T:g}" width="{_fmt(x1 - x0)}" '
            f'height="{HEIGHT - MARGIN_T - MARGIN_B:g}" fill="#d9d9d9"/>'
        )
    parts += _axes(
        frame,
        "",
        ylabel,
        [float(p) for p in tick_positions],
        _nice_ticks(frame.ylo, frame.yhi),
        xtick_labels=list(tick_labels),
    )
    for i, (label, ys) in enumerate(series):
        color = PALETTE[i % len(PALETTE)]
        pts = " ".join(f"{_fmt(frame.x(float(j)))},{_fmt(frame.y(y))}" for j, y in enumerate(ys))
        parts.append(f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.8"/>')
        parts.append(
            f'<text x="{WIDTH - MARGIN_R - 6:g}" y="{MARGIN_T + 16 + 16 * i:g}" text-anchor="end" '
            f'font-size="12" fill="{color}">{escape(label)}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
