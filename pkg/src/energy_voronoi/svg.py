"""SVG rendering of a clipped cell and its generators."""

from __future__ import annotations

import colorsys
from xml.sax.saxutils import escape

from .geometry import as_pool

_SIZE = 600.0
_GOLDEN = 0.618033988749895


def palette(n):
    """``n`` distinct hex colors, deterministic."""
    out = []
    for i in range(n):
        r, g, b = colorsys.hsv_to_rgb((0.07 + i * _GOLDEN) % 1.0, 0.75, 0.85)
        out.append(f"#{round(r * 255):02x}{round(g * 255):02x}{round(b * 255):02x}")
    return out


def _sort_key(v):
    return (isinstance(v, str), v if not isinstance(v, str) else 0, str(v))


def render_cell_svg(cell, pool):
    """SVG document: one ``<path>`` per contributor, colored like its generator."""
    box = cell.box
    sx = _SIZE / (box.xmax - box.xmin)
    sy = _SIZE / (box.ymax - box.ymin)

    def xy(p):
        return f"{(p[0] - box.xmin) * sx:.4f},{(box.ymax - p[1]) * sy:.4f}"

    pool = as_pool(pool)
    contributors = sorted(cell.contributors, key=_sort_key)
    colors = dict(zip(contributors, palette(len(contributors))))

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE:g}" height="{_SIZE:g}" '
        f'viewBox="0 0 {_SIZE:g} {_SIZE:g}">',
        f'<rect x="0" y="0" width="{_SIZE:g}" height="{_SIZE:g}" fill="white" stroke="black"/>',
    ]
    for edge in cell.box_edges:
        pts = " ".join(xy(p) for p in edge.points)
        lines.append(f'<polyline class="box-edge" points="{pts}" fill="none" stroke="#555555" '
                     f'stroke-width="3"/>')
    for cid in contributors:
        d = " ".join("M " + " L ".join(xy(p) for p in arc.points)
                     for arc in cell.arcs if arc.contributor == cid)
        lines.append(f'<path class="arc" data-contributor="{escape(str(cid))}" d="{d}" '
                     f'fill="none" stroke="{colors[cid]}" stroke-width="2"/>')
    for key in sorted(pool, key=_sort_key):
        color = colors.get(key, "#999999")
        lines.append(f'<circle class="generator" data-id="{escape(str(key))}" '
                     f'cx="{xy(pool[key]).split(",")[0]}" cy="{xy(pool[key]).split(",")[1]}" '
                     f'r="4" fill="{color}"/>')
    ox, oy = xy(cell.owner).split(",")
    lines.append(f'<circle class="owner" cx="{ox}" cy="{oy}" r="7" fill="black" '
                 f'stroke="gold" stroke-width="3"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def emit_cell_svg(cell, pool, path):
    text = render_cell_svg(cell, pool)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
