"""SVG figures.  This is the only module that converts exact numbers to floats."""
from __future__ import annotations

from xml.sax.saxutils import quoteattr

from .tiling import Tiling

__all__ = ["render_svg"]

WIDTH = 800
MARGIN = 10


def _f(x: float) -> str:
    return format(x, ".17g")


def render_svg(tiling: Tiling, markers: bool = False) -> str:
    """Tiles as filled polygons plus one reference outline, y axis pointing up."""
    pts = [(float(p.x), float(p.y)) for p in tiling.reference]
    xs, ys = [p[0] for p in pts], [p[1] for p in pts]
    x0, y1 = min(xs), max(ys)
    span = max(max(xs) - x0, max(ys) - min(ys)) or 1.0
    k = (WIDTH - 2 * MARGIN) / span
    height = (y1 - min(ys)) * k + 2 * MARGIN

    def xy(p) -> str:
        return f"{_f((float(p.x) - x0) * k + MARGIN)},{_f((y1 - float(p.y)) * k + MARGIN)}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{_f(height)}" '
        f'viewBox="0 0 {WIDTH} {_f(height)}">',
        f"<title>{tiling.N}-tiling</title>",
        '<g class="tiles" fill="#dfe8f5" stroke="#1f3b63" stroke-width="1">',
    ]
    for i, t in enumerate(tiling.tiles):
        out.append(f'<polygon id={quoteattr(f"tile{i}")} points="{" ".join(xy(p) for p in t)}"/>')
    out.append("</g>")
    out.append(
        f'<polygon class="reference" fill="none" stroke="#000000" stroke-width="2.5" '
        f'points="{" ".join(xy(p) for p in tiling.reference)}"/>'
    )
    if markers:
        seen = sorted({p for t in tiling.tiles for p in t}, key=lambda p: (p.x, p.y))
        out.append('<g class="vertices" fill="#c0392b">')
        for p in seen:
            cx, cy = xy(p).split(",")
            out.append(f'<circle cx="{cx}" cy="{cy}" r="2.5"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
