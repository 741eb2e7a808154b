"""Deterministic SVG rendering of polygons.

Rationals are converted to decimals (6 significant digits) for display
only; nothing rendered here ever feeds back into computation.
"""

from __future__ import annotations

from .polygon import Polygon


def _to_float(value) -> float:
    try:
        return float(value)
    except OverflowError:
        # display-only clamp for coordinates beyond float range
        return 1e300 if value > 0 else -1e300


def _fmt(v: float) -> str:
    return f"{v:.6g}"


def render_svg(P: Polygon, show_axes: bool = True, label_vertices: bool = True,
               canvas_size: int = 600) -> bytes:
    """Render the polygon as a standalone SVG 1.1 document.

    The viewport is auto-fitted with a 10% margin; vertex labels are
    1-based (p1..pn) to match figure conventions, while all machine
    interfaces stay 0-based.
    """
    size = int(canvas_size)
    xs = [_to_float(p.x) for p in P.vertices]
    ys = [_to_float(p.y) for p in P.vertices]
    if show_axes:
        xs.append(0.0)
        ys.append(0.0)
    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    span = max(max_x - min_x, max_y - min_y) or 1.0
    margin = 0.10 * span
    scale = size / (span + 2 * margin)
    cx = (min_x + max_x) / 2
    cy = (min_y + max_y) / 2

    def sx(v: float) -> float:
        return (v - cx) * scale + size / 2

    def sy(v: float) -> float:
        return size / 2 - (v - cy) * scale

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    if show_axes:
        ax_y = _fmt(sy(0.0))
        ax_x = _fmt(sx(0.0))
        parts.append(f'<line x1="0" y1="{ax_y}" x2="{size}" y2="{ax_y}" '
                     f'stroke="#bbbbbb" stroke-width="1"/>')
        parts.append(f'<line x1="{ax_x}" y1="0" x2="{ax_x}" y2="{size}" '
                     f'stroke="#bbbbbb" stroke-width="1"/>')
    coords = [(sx(_to_float(p.x)), sy(_to_float(p.y))) for p in P.vertices]
    path = "M " + " L ".join(f"{_fmt(x)} {_fmt(y)}" for x, y in coords) + " Z"
    parts.append(f'<path d="{path}" fill="none" stroke="black" stroke-width="2"/>')
    for i, (x, y) in enumerate(coords):
        parts.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="black"/>')
        if label_vertices:
            parts.append(f'<text x="{_fmt(x + 6)}" y="{_fmt(y - 6)}" '
                         f'font-family="monospace" font-size="13">p{i + 1}</text>')
    parts.append("</svg>")
    return ("\n".join(parts) + "\n").encode("utf-8")
