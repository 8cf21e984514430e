#!/usr/bin/env python3
"""
Arc diagrams of ordered graphs as SVG
"""

from core import OrderedGraph
from errors import InvalidArgument

SPACING = 40
MARGIN = 20
DOT_RADIUS = 4


def render_arc(graph: OrderedGraph, spacing: int = SPACING) -> str:
    """
    Draw vertices on a baseline in order and each edge as a semicircle above it

    Output depends only on the graph, so equal graphs give identical bytes.

    Args:
        graph (OrderedGraph): Graph with at least one vertex
        spacing (int): Even pixel distance between neighbouring vertices

    Returns:
        str: SVG document
    """
    if graph.n < 1:
        raise InvalidArgument("arc diagrams need at least one vertex")
    n = graph.n
    half = spacing // 2
    top = MARGIN + half * max(n - 1, 0)
    width = 2 * MARGIN + spacing * max(n - 1, 0)
    height = top + 2 * MARGIN

    def x(i: int) -> int:
        return MARGIN + spacing * (i - 1)

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'  <line x1="{x(1)}" y1="{top}" x2="{x(max(n, 1))}" y2="{top}" stroke="#bbbbbb"/>',
    ]
    for u, v in graph.edges:
        r = half * (v - u)
        lines.append(f'  <path d="M {x(u)} {top} A {r} {r} 0 0 1 {x(v)} {top}" '
                     f'fill="none" stroke="#1f4e79"/>')
    for i in range(1, n + 1):
        lines.append(f'  <circle cx="{x(i)}" cy="{top}" r="{DOT_RADIUS}" fill="black"/>')
        lines.append(f'  <text x="{x(i)}" y="{top + 16}" font-size="10" text-anchor="middle">{i}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
