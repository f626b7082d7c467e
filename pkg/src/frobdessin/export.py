"""DOT and SVG renderings of a dessin. Schematic only; layouts are not stable API."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .dessin import BLACK, WHITE, Dessin

_PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)


def to_dot(d: Dessin, colour_edges: bool = False) -> str:
    """Bipartite incidence graph: white ``h<w>`` and black ``P<b>`` nodes.

    With ``colour_edges`` each edge is coloured by the ordering position of
    its element, which shows the local incidence pattern.
    """
    lines = ["graph dessin {", "  node [shape=circle, fontsize=8];"]
    for w in range(d.ell):
        lines.append(f'  h{w} [label="{w}", style=filled, fillcolor=white];')
    for b in range(d.ell):
        lines.append(f'  P{b} [label="{b}", style=filled, fillcolor=black, fontcolor=white];')
    q = d.q
    for w in range(d.ell):
        for i, di in enumerate(d.order.order):
            attr = f' [color="{_PALETTE[i % len(_PALETTE)]}"]' if colour_edges else ""
            lines.append(f"  h{w} -- P{(w + di) % d.ell}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cell_vertices(d: Dessin, c: int) -> list[tuple[int, int]]:
    return [(int(d.dart_colour[x]), int(d.dart_vertex[x])) for x in d.cell_darts(c)]


def to_svg(d: Dessin, max_cells: int | None = None, size: int = 800) -> str:
    """Cells met at white vertex 0, each drawn as a polygon on a ring.

    Every polygon lists its boundary vertices (white rings, black dots) in
    walking order, starting from the corner at white vertex 0, which is
    turned towards the centre of the picture.
    """
    around = []
    for c in d.cells_around_white(0):
        if c not in around:
            around.append(c)
    if max_cells is not None:
        around = around[:max_cells]
    n = max(1, len(around))
    cx = cy = size / 2
    ring = size * 0.3
    radius = min(size * 0.18, math.pi * ring / n * 0.9)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
        f'<circle cx="{cx}" cy="{cy}" r="4" fill="white" stroke="black"/>',
    ]
    for slot, c in enumerate(around):
        verts = _cell_vertices(d, c)
        start = next((i for i, (col, v) in enumerate(verts) if col == WHITE and v == 0), 0)
        verts = verts[start:] + verts[:start]
        theta = 2 * math.pi * slot / n
        px = cx + ring * math.cos(theta)
        py = cy + ring * math.sin(theta)
        pts = []
        for i in range(len(verts)):
            a = theta + math.pi + 2 * math.pi * i / len(verts)
            pts.append((px + radius * math.cos(a), py + radius * math.sin(a)))
        colour = _PALETTE[slot % len(_PALETTE)]
        poly = " ".join(f"{x:.2f},{y:.2f}" for x, y in pts)
        parts.append(f'<polygon points="{poly}" fill="{colour}" fill-opacity="0.15" stroke="{colour}"/>')
        font = max(4.0, min(9.0, radius * 2.5 / max(1, len(verts)) * 2))
        for (col, v), (x, y) in zip(verts, pts):
            fill = "black" if col == BLACK else "white"
            parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="2" fill="{fill}" stroke="black" stroke-width="0.5"/>')
            parts.append(
                f'<text x="{x:.2f}" y="{y - 3:.2f}" font-size="{font:.1f}" text-anchor="middle">{v}</text>'
            )
        parts.append(
            f'<text x="{px:.2f}" y="{py:.2f}" font-size="10" text-anchor="middle">'
            f'{escape(f"C{c}")}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
