"""SVG drawings of a dissection with an optional facet or serpent nest."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from .core import Diagonal, HollowDissection, boundary_edges
from .serpents import Serpent, dual_path_cells

PALETTE = ("#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf", "#bcbd22")


@dataclass(frozen=True)
class RenderSpec:
    size: int = 400
    margin: int = 30
    point_radius: float = 5.0
    hollow_color: str = "red"
    solid_color: str = "blue"
    labels: bool = True


def vertex_xy(label: int, n: int, style: RenderSpec = RenderSpec()) -> Tuple[float, float]:
    theta = -2 * math.pi * (label - 1) / (2 * n) + math.pi / 2
    r = style.size / 2 - style.margin
    c = style.size / 2
    return c + r * math.cos(theta), c - r * math.sin(theta)


def _f(x: float) -> str:
    s = f"{x:.2f}"
    return "0.00" if s == "-0.00" else s


def _line(p, q, color, width, dash=None) -> str:
    extra = f' stroke-dasharray="{dash}"' if dash else ""
    return (f'<line x1="{_f(p[0])}" y1="{_f(p[1])}" x2="{_f(q[0])}" y2="{_f(q[1])}" '
            f'stroke="{color}" stroke-width="{width}"{extra}/>')


def _serpent_points(S: Serpent, style: RenderSpec) -> List[Tuple[float, float]]:
    # schematic: alternate cell barycentres and edge midpoints along the dual path
    D = S.dissection
    xy = lambda v: vertex_xy(v, D.n, style)

    def centre(vs):
        pts = [xy(v) for v in vs]
        return sum(p[0] for p in pts) / len(pts), sum(p[1] for p in pts) / len(pts)

    cells = dual_path_cells(S.edges, D)
    pts = [centre(D.cells[cells[0]].vertices)]
    for e, c in zip(S.edges, cells[1:]):
        pts.append(centre(e))
        pts.append(centre(D.cells[c].vertices))
    return pts


def render_svg(D: HollowDissection, facet: Optional[Iterable[Diagonal]] = None,
               nest: Optional[Iterable[Serpent]] = None,
               style: RenderSpec = RenderSpec()) -> str:
    n = D.n
    xy = lambda v: vertex_xy(v, n, style)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{style.size}" '
           f'height="{style.size}" viewBox="0 0 {style.size} {style.size}">']
    out.append('<g id="boundary">')
    for a, b in boundary_edges(n, 1):
        out.append(_line(xy(a), xy(b), style.hollow_color, 1))
    for a, b in boundary_edges(n, 0):
        out.append(_line(xy(a), xy(b), style.solid_color, 1, dash="3,3"))
    out.append("</g>")
    out.append('<g id="dissection">')
    for a, b in D.sorted_diagonals:
        out.append(_line(xy(a), xy(b), style.hollow_color, 2))
    out.append("</g>")
    if facet is not None:
        out.append('<g id="facet">')
        for a, b in sorted(facet):
            out.append(_line(xy(a), xy(b), style.solid_color, 2))
        out.append("</g>")
    if nest is not None:
        out.append('<g id="nest">')
        for i, S in enumerate(sorted(nest, key=lambda S: S.edges)):
            pts = " ".join(f"{_f(x)},{_f(y)}" for x, y in _serpent_points(S, style))
            out.append(f'<polyline points="{pts}" fill="none" '
                       f'stroke="{PALETTE[i % len(PALETTE)]}" stroke-width="3"/>')
        out.append("</g>")
    out.append('<g id="vertices">')
    for v in range(1, 2 * n + 1):
        x, y = xy(v)
        if v % 2:
            paint = f'fill="white" stroke="{style.hollow_color}" stroke-width="2"'
        else:
            paint = f'fill="{style.solid_color}"'
        out.append(f'<circle cx="{_f(x)}" cy="{_f(y)}" r="{style.point_radius}" {paint}/>')
    out.append("</g>")
    if style.labels:
        out.append('<g id="labels" font-family="sans-serif" font-size="11">')
        c = style.size / 2
        for v in range(1, 2 * n + 1):
            x, y = xy(v)
            lx, ly = c + (x - c) * 1.12, c + (y - c) * 1.12 + 4
            out.append(f'<text x="{_f(lx)}" y="{_f(ly)}" text-anchor="middle">{v}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
