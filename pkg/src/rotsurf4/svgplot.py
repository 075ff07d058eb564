"""Minimal deterministic SVG line plots.

Hand-rolled on purpose: the output must be byte-identical across reruns, so
no plotting library with embedded ids, hashes or timestamps is used.  All
coordinates are formatted with a fixed precision.
"""

from __future__ import annotations

import math

_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e")
_W, _H = 640, 420
_ML, _MR, _MT, _MB = 64, 16, 34, 44


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _ticks(lo: float, hi: float, n: int = 5):
    if not (math.isfinite(lo) and math.isfinite(hi)) or hi <= lo:
        return [lo]
    raw = (hi - lo) / max(n - 1, 1)
    mag = 10.0 ** math.floor(math.log10(raw))
    for mult in (1.0, 2.0, 2.5, 5.0, 10.0):
        step = mult * mag
        if (hi - lo) / step <= n:
            break
    first = math.ceil(lo / step) * step
    out = []
    t = first
    while t <= hi + 1e-12 * max(1.0, abs(hi)):
        out.append(0.0 if abs(t) < 1e-12 * step else t)
        t += step
    return out or [lo]


def line_plot_svg(path, title: str, series, xlabel: str = "u",
                  ylabel: str = "", annotations=()) -> None:
    """Write an SVG with one polyline per (name, xs, ys) triple in series."""
    xs_all = [float(x) for _, xs, _ in series for x in xs]
    ys_all = [float(y) for _, _, ys in series for y in ys]
    if not xs_all:
        xs_all = ys_all = [0.0, 1.0]
    xlo, xhi = min(xs_all), max(xs_all)
    ylo, yhi = min(ys_all), max(ys_all)
    if xhi <= xlo:
        xhi = xlo + 1.0
    if yhi <= ylo:
        pad = max(1.0, abs(ylo))
        ylo, yhi = ylo - 0.5 * pad, ylo + 0.5 * pad
    else:
        pad = 0.05 * (yhi - ylo)
        ylo, yhi = ylo - pad, yhi + pad

    def px(x):
        return _ML + (x - xlo) / (xhi - xlo) * (_W - _ML - _MR)

    def py(y):
        return _H - _MB - (y - ylo) / (yhi - ylo) * (_H - _MT - _MB)

    out = []
    out.append(f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" '
               f'height="{_H}" viewBox="0 0 {_W} {_H}">')
    out.append(f'<rect width="{_W}" height="{_H}" fill="white"/>')
    out.append(f'<text x="{_W // 2}" y="20" font-family="monospace" '
               f'font-size="14" text-anchor="middle">{title}</text>')
    # axes box
    out.append(f'<rect x="{_ML}" y="{_MT}" width="{_W - _ML - _MR}" '
               f'height="{_H - _MT - _MB}" fill="none" stroke="#444" '
               f'stroke-width="1"/>')
    for t in _ticks(xlo, xhi):
        X = _fmt(px(t))
        out.append(f'<line x1="{X}" y1="{_H - _MB}" x2="{X}" '
                   f'y2="{_H - _MB + 4}" stroke="#444"/>')
        out.append(f'<text x="{X}" y="{_H - _MB + 16}" font-family="monospace" '
                   f'font-size="10" text-anchor="middle">{t:.6g}</text>')
    for t in _ticks(ylo, yhi):
        Y = _fmt(py(t))
        out.append(f'<line x1="{_ML - 4}" y1="{Y}" x2="{_ML}" y2="{Y}" '
                   f'stroke="#444"/>')
        out.append(f'<text x="{_ML - 6}" y="{Y}" font-family="monospace" '
                   f'font-size="10" text-anchor="end">{t:.6g}</text>')
    out.append(f'<text x="{_W // 2}" y="{_H - 8}" font-family="monospace" '
               f'font-size="11" text-anchor="middle">{xlabel}</text>')
    if ylabel:
        out.append(f'<text x="14" y="{_H // 2}" font-family="monospace" '
                   f'font-size="11" text-anchor="middle" '
                   f'transform="rotate(-90 14 {_H // 2})">{ylabel}</text>')

    for k, (name, xs, ys) in enumerate(series):
        color = _COLORS[k % len(_COLORS)]
        pts = " ".join(f"{_fmt(px(float(x)))},{_fmt(py(float(y)))}"
                       for x, y in zip(xs, ys))
        out.append(f'<polyline points="{pts}" fill="none" stroke="{color}" '
                   f'stroke-width="1.5"/>')
        out.append(f'<text x="{_W - _MR - 6}" y="{_MT + 14 + 13 * k}" '
                   f'font-family="monospace" font-size="11" text-anchor="end" '
                   f'fill="{color}">{name}</text>')

    for k, note in enumerate(annotations):
        out.append(f'<text x="{_ML + 6}" y="{_MT + 14 + 13 * k}" '
                   f'font-family="monospace" font-size="11">{note}</text>')
    out.append("</svg>")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(out))
        fh.write("\n")
