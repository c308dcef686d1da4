"""SVG drawings: vertices as columns, coordinate positions as rows.

Edge ``(a_1, ..., a_m)`` becomes a polyline through the points
``(column a_j, row j)``. Two edges are comparable exactly when their
polylines never properly cross, so a shift-chain draws as a family of
non-crossing curves.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass, field

from .coloring import Coloring
from .core import OrderedHypergraph
from .errors import ColoringError

DEFAULT_PALETTE = ("#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628")

Point = tuple[float, float]


@dataclass(frozen=True)
class RenderConfig:
    column_spacing: float = 40
    row_spacing: float = 60
    radius: float = 6
    margin: float = 30
    palette: tuple[str, ...] = DEFAULT_PALETTE
    highlight: frozenset[int] = field(default_factory=frozenset)
    labels: bool = False
    stroke_width: float = 1.5
    highlight_width: float = 5

    def __post_init__(self):
        if self.column_spacing <= 0 or self.row_spacing <= 0 or self.radius <= 0:
            raise ValueError("spacings and radius must be positive")
        if len(self.palette) < 3:
            raise ValueError("palette needs at least 3 colors")
        object.__setattr__(self, "highlight", frozenset(self.highlight))


def _num(x: float) -> str:
    return f"{x:g}"


def vertex_point(v: int, row: int, cfg: RenderConfig) -> Point:
    return cfg.margin + (v - 1) * cfg.column_spacing, cfg.margin + (row - 1) * cfg.row_spacing


def render_svg(
    h: OrderedHypergraph, coloring: Coloring | None = None, cfg: RenderConfig | None = None
) -> str:
    cfg = cfg or RenderConfig()
    if coloring is not None:
        if coloring.n != h.n:
            raise ColoringError(f"coloring has {coloring.n} vertices, hypergraph has {h.n}")
        if coloring.k > len(cfg.palette):
            raise ValueError(f"palette has {len(cfg.palette)} colors, coloring needs {coloring.k}")
    width = 2 * cfg.margin + (h.n - 1) * cfg.column_spacing
    height = 2 * cfg.margin + (h.m - 1) * cfg.row_spacing
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_num(width)}" height="{_num(height)}" viewBox="0 0 {_num(width)} {_num(height)}">',
        '<g id="edges" fill="none" stroke="#000000" stroke-linejoin="round">',
    ]
    for idx, edge in enumerate(h.edges):
        pts = " ".join(f"{_num(x)},{_num(y)}" for x, y in (vertex_point(v, j, cfg) for j, v in enumerate(edge, 1)))
        w = cfg.highlight_width if idx in cfg.highlight else cfg.stroke_width
        out.append(f'<polyline data-edge="{idx}" points="{pts}" stroke-width="{_num(w)}"/>')
    out.append("</g>")
    # a vertex is drawn once per row it occurs in, but counted once in the
    # circle layer, at the row of its first occurrence (row 1 if unused)
    first_row = {}
    for edge in h.edges:
        for j, v in enumerate(edge, 1):
            first_row[v] = min(first_row.get(v, j), j)
    out.append('<g id="vertices" stroke="#000000">')
    for v in range(1, h.n + 1):
        x, y = vertex_point(v, first_row.get(v, 1), cfg)
        fill = "#ffffff" if coloring is None else cfg.palette[coloring[v] - 1]
        out.append(
            f'<circle data-vertex="{v}" cx="{_num(x)}" cy="{_num(y)}" r="{_num(cfg.radius)}" fill="{fill}"/>'
        )
    out.append("</g>")
    if cfg.labels:
        out.append('<g id="labels" font-family="sans-serif" font-size="10" text-anchor="middle">')
        for v in range(1, h.n + 1):
            x, _ = vertex_point(v, 1, cfg)
            out.append(f'<text x="{_num(x)}" y="{_num(cfg.margin / 3)}">{v}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def polylines_from_svg(svg: str) -> list[list[Point]]:
    """Point lists of every ``<polyline>`` in document order."""
    root = ET.fromstring(svg.encode())
    lines = []
    for el in root.iter("{http://www.w3.org/2000/svg}polyline"):
        pts = [tuple(float(c) for c in p.split(",")) for p in el.get("points").split()]
        lines.append(pts)
    return lines


def _orient(p: Point, q: Point, r: Point) -> float:
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def segments_properly_cross(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    """True iff the segments meet in a single interior point of both."""
    d1 = _orient(q1, q2, p1)
    d2 = _orient(q1, q2, p2)
    d3 = _orient(p1, p2, q1)
    d4 = _orient(p1, p2, q2)
    return d1 * d2 < 0 and d3 * d4 < 0


def polylines_properly_cross(a: list[Point], b: list[Point]) -> bool:
    return any(
        segments_properly_cross(a[i], a[i + 1], b[j], b[j + 1])
        for i in range(len(a) - 1)
        for j in range(len(b) - 1)
    )
