"""Self-contained SVG rendering of roofline plots (no plotting framework).

Output is deterministic byte-for-byte for identical inputs: fixed 800x500
viewport, fixed tick policy (powers of ten on a log x-axis), and fixed
float formatting.
"""

from __future__ import annotations

import math
from typing import Sequence

from .analysis import RooflineSeries

WIDTH = 800
HEIGHT = 500
MARGIN_LEFT = 70
MARGIN_RIGHT = 170
MARGIN_TOP = 40
MARGIN_BOTTOM = 60

COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b")
FONT = 'font-family="Helvetica,Arial,sans-serif"'


def _escape(text: str) -> str:
    return (
        text.replace("&", "&amp;")
        .replace("<", "&lt;")
        .replace(">", "&gt;")
        .replace('"', "&quot;")
    )


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def _tick_label(value: float) -> str:
    if value >= 1:
        return f"{value:g}"
    return f"{value:g}"


def render_roofline_svg(series: Sequence[RooflineSeries], title: str = "Safe-velocity roofline") -> str:
    """Render one or more roofline series into a standalone SVG document."""
    if not series:
        raise ValueError("nothing to plot")
    logx = all(s.scale == "log" for s in series)
    f_min = min(s.frequencies_hz[0] for s in series)
    f_max = max(s.frequencies_hz[-1] for s in series)
    v_max = max(max(s.roof_velocity_mps, max(s.velocities_mps)) for s in series) * 1.08

    left, right = MARGIN_LEFT, WIDTH - MARGIN_RIGHT
    top, bottom = MARGIN_TOP, HEIGHT - MARGIN_BOTTOM

    def x_px(f: float) -> float:
        if logx:
            t = (math.log10(f) - math.log10(f_min)) / (math.log10(f_max) - math.log10(f_min))
        else:
            t = (f - f_min) / (f_max - f_min)
        return left + t * (right - left)

    def y_px(v: float) -> float:
        return bottom - (v / v_max) * (bottom - top)

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>',
        f'<text x="{WIDTH / 2:.1f}" y="24" text-anchor="middle" font-size="16" {FONT}>{_escape(title)}</text>',
    ]

    # y grid: six linear ticks
    for i in range(7):
        v = v_max * i / 6
        y = y_px(v)
        lines.append(
            f'<line x1="{left}" y1="{_fmt(y)}" x2="{right}" y2="{_fmt(y)}" stroke="#e0e0e0" stroke-width="1"/>'
        )
        lines.append(
            f'<text x="{left - 8}" y="{_fmt(y + 4)}" text-anchor="end" font-size="11" {FONT}>{v:.1f}</text>'
        )

    # x ticks: decades when log, six even ticks otherwise
    if logx:
        dec_lo = math.ceil(math.log10(f_min) - 1e-9)
        dec_hi = math.floor(math.log10(f_max) + 1e-9)
        ticks = [10.0 ** p for p in range(dec_lo, dec_hi + 1)]
    else:
        ticks = [f_min + (f_max - f_min) * i / 6 for i in range(7)]
    for f in ticks:
        x = x_px(f)
        lines.append(
            f'<line x1="{_fmt(x)}" y1="{top}" x2="{_fmt(x)}" y2="{bottom}" stroke="#eeeeee" stroke-width="1"/>'
        )
        lines.append(
            f'<line x1="{_fmt(x)}" y1="{bottom}" x2="{_fmt(x)}" y2="{bottom + 5}" stroke="#000000" stroke-width="1"/>'
        )
        lines.append(
            f'<text x="{_fmt(x)}" y="{bottom + 20}" text-anchor="middle" font-size="11" {FONT}>{_tick_label(f)}</text>'
        )

    # axes
    lines.append(f'<line x1="{left}" y1="{bottom}" x2="{right}" y2="{bottom}" stroke="#000000" stroke-width="1.5"/>')
    lines.append(f'<line x1="{left}" y1="{top}" x2="{left}" y2="{bottom}" stroke="#000000" stroke-width="1.5"/>')
    lines.append(
        f'<text x="{(left + right) / 2:.1f}" y="{HEIGHT - 18}" text-anchor="middle" font-size="13" {FONT}>'
        "action throughput (Hz)</text>"
    )
    lines.append(
        f'<text x="20" y="{(top + bottom) / 2:.1f}" text-anchor="middle" font-size="13" {FONT} '
        f'transform="rotate(-90 20 {(top + bottom) / 2:.1f})">safe velocity (m/s)</text>'
    )

    legend_y = top + 10
    for idx, s in enumerate(series):
        color = COLORS[idx % len(COLORS)]
        pts = " ".join(
            f"{_fmt(x_px(f))},{_fmt(y_px(v))}" for f, v in zip(s.frequencies_hz, s.velocities_mps)
        )
        lines.append(f'<polyline fill="none" stroke="{color}" stroke-width="2" points="{pts}"/>')
        # roof and knee
        roof_y = y_px(s.roof_velocity_mps)
        lines.append(
            f'<line x1="{left}" y1="{_fmt(roof_y)}" x2="{right}" y2="{_fmt(roof_y)}" '
            f'stroke="{color}" stroke-width="1" stroke-dasharray="6,4" opacity="0.6"/>'
        )
        knee = s.knee
        if f_min <= knee.knee_throughput <= f_max:
            kx, ky = x_px(knee.knee_throughput), y_px(knee.knee_velocity)
            lines.append(f'<circle cx="{_fmt(kx)}" cy="{_fmt(ky)}" r="4" fill="{color}"/>')
            lines.append(
                f'<text x="{_fmt(kx + 6)}" y="{_fmt(ky + 12)}" font-size="10" {FONT} fill="{color}">'
                f"knee {knee.knee_throughput:.1f} Hz</text>"
            )
        for marker in s.ceilings:
            if not (f_min <= marker.rate_hz <= f_max):
                continue
            mx, my = x_px(marker.rate_hz), y_px(marker.ceiling_velocity_mps)
            lines.append(
                f'<line x1="{_fmt(mx)}" y1="{_fmt(my)}" x2="{_fmt(mx)}" y2="{bottom}" '
                f'stroke="{color}" stroke-width="1" stroke-dasharray="2,3" opacity="0.7"/>'
            )
            lines.append(
                f'<line x1="{_fmt(mx)}" y1="{_fmt(my)}" x2="{right}" y2="{_fmt(my)}" '
                f'stroke="{color}" stroke-width="1" stroke-dasharray="2,3" opacity="0.7"/>'
            )
            lines.append(
                f'<text x="{_fmt(mx + 4)}" y="{_fmt(my - 4)}" font-size="10" {FONT} fill="{color}">'
                f"{_escape(marker.label)} {marker.rate_hz:g} Hz</text>"
            )
        # legend
        lx = right + 12
        lines.append(
            f'<line x1="{lx}" y1="{legend_y}" x2="{lx + 22}" y2="{legend_y}" stroke="{color}" stroke-width="2"/>'
        )
        lines.append(
            f'<text x="{lx + 28}" y="{legend_y + 4}" font-size="11" {FONT}>{_escape(s.label)}</text>'
        )
        legend_y += 18

    lines.append("</svg>")
    return "\n".join(lines) + "\n"
