"""Native graph drawing: circular layout, mode-colored, weight-scaled edges."""

from __future__ import annotations

import math
from collections import defaultdict

from ..ingest import NetworkGraph
from .scene import NATIVE_PALETTE, ModePalette, Point, Scene, circle, cubic, label, layout_circular, split_cubic

CANVAS = 600.0
RADIUS = 240.0
VERTEX_RADIUS = 14.0
PARALLEL_SPACING = 18.0
BASE_WIDTH = 6.0
MIN_WIDTH, MAX_WIDTH = 0.5, 6.0
NEGATIVE_DASH = (6.0, 4.0)


def stroke_width(weight: float, max_abs: float) -> float:
    if max_abs <= 0:
        return MIN_WIDTH
    return min(MAX_WIDTH, max(MIN_WIDTH, BASE_WIDTH * abs(weight) / max_abs))


def _edge_curve(a: Point, b: Point, offset: float) -> tuple[Point, Point, Point, Point]:
    dx, dy = b[0] - a[0], b[1] - a[1]
    length = math.hypot(dx, dy) or 1.0
    nx, ny = -dy / length, dx / length
    # both control points shifted by 4/3 * offset puts the curve midpoint at `offset`
    push = 4.0 * offset / 3.0
    p1 = (a[0] + dx / 3 + nx * push, a[1] + dy / 3 + ny * push)
    p2 = (a[0] + 2 * dx / 3 + nx * push, a[1] + 2 * dy / 3 + ny * push)
    return a, p1, p2, b


def parallel_offsets(g: NetworkGraph) -> list[float]:
    """Perpendicular offset of each edge, spreading parallel edges symmetrically."""
    groups: dict[tuple[int, int], list[int]] = defaultdict(list)
    for i, e in enumerate(g.edges):
        groups[e.pair].append(i)
    offsets = [0.0] * len(g.edges)
    for idx in groups.values():
        m = len(idx)
        for k, i in enumerate(idx):
            offsets[i] = (k - (m - 1) / 2) * PARALLEL_SPACING
    return offsets


def render_native_graph(g: NetworkGraph, palette: ModePalette = NATIVE_PALETTE) -> Scene:
    center = (CANVAS / 2, CANVAS / 2)
    pos = layout_circular(g.vertices, RADIUS, center) if g.vertices else {}
    max_abs = max((abs(e.weight) for e in g.edges), default=0.0)
    offsets = parallel_offsets(g)
    elements = []

    for i, e in enumerate(g.edges):
        width = stroke_width(e.weight, max_abs)
        dash = NEGATIVE_DASH if e.weight < 0 else None
        pts = _edge_curve(pos[e.v1], pos[e.v2], offsets[i])
        tags = ("edge", f"e{i}")
        if e.is_mixed_mode:
            first, second = split_cubic(*pts)
            elements.append(cubic(*first, stroke=palette.color(e.mode1), width=width, dash=dash, tags=tags + (f"half-v{e.v1}",)))
            elements.append(cubic(*second, stroke=palette.color(e.mode2), width=width, dash=dash, tags=tags + (f"half-v{e.v2}",)))
        else:
            elements.append(cubic(*pts, stroke=palette.color(e.mode1), width=width, dash=dash, tags=tags))

    for v in g.vertices:
        elements.append(circle(pos[v], VERTEX_RADIUS, stroke="black", fill="white", width=1.5, tags=("vertex", f"v{v}")))
    for v in g.vertices:
        elements.append(label(pos[v], str(v), size=12.0, tags=("label", f"v{v}")))

    return Scene(CANVAS, CANVAS, tuple(elements))
