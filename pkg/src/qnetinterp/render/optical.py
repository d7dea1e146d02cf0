"""Optical-table schematics, one layout per implementation strategy.

* ``single_photon``: a row of diamond single-photon sources (810nm) above a
  row of detectors, joined by direct routes;
* ``spdc_heralded``: a 405nm pump feeding one BBO crystal per edge, each
  crystal fanning its signal and idler out to beam splitters or detectors,
  with ancilla detectors grouped in a heralding region;
* ``adaptive``: sources left, beam splitters and other intermediates in the
  middle, detectors right.

Routes always run from the upstream element toward detectors. Every vertex
glyph carries the role names it depicts as tags, so the drawing can be
checked against the role assignment it was built from.
"""

from __future__ import annotations

from collections import defaultdict

from ..ingest import Edge, NetworkGraph
from ..roles import RoleAssignment
from ..strategy import ADAPTIVE, SINGLE_PHOTON, SPDC_HERALDED, StrategyPlan
from .native import NEGATIVE_DASH, stroke_width
from .scene import (
    OPTICAL_PALETTE,
    Element,
    ModePalette,
    Point,
    Scene,
    diamond,
    label,
    polyline,
    rect,
    semicircle,
)

GLYPH = 16.0
SQUARE = 22.0
SPACING = 110.0
MARGIN = 80.0
SOURCE_LABEL = "810nm"
PUMP_LABEL = "405nm"
CRYSTAL_LABEL = "BBO"
REGION_DASH = (5.0, 3.0)


def _glyph_tags(v: int, roles: tuple[str, ...]) -> tuple[str, ...]:
    return ("glyph", f"v{v}") + roles


def _route(
    points: list[Point],
    edge: Edge,
    index: int,
    start: int,
    end: int,
    palette: ModePalette,
    max_abs: float,
    extra: tuple[str, ...] = (),
) -> list[Element]:
    """Draw one route; mixed-mode edges become two halves colored per endpoint."""
    width = stroke_width(edge.weight, max_abs)
    dash = NEGATIVE_DASH if edge.weight < 0 else None
    tags = ("route", f"e{index}", f"from-v{start}", f"to-v{end}") + extra
    start_color = palette.color(edge.mode_at(start))
    end_color = palette.color(edge.mode_at(end))
    if start_color == end_color:
        return [polyline(points, stroke=start_color, width=width, dash=dash, tags=tags)]
    # split at the midpoint of the middle segment
    k = len(points) // 2
    a, b = points[k - 1], points[k]
    mid = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
    return [
        polyline(points[:k] + [mid], stroke=start_color, width=width, dash=dash, tags=tags + (f"half-v{start}",)),
        polyline([mid] + points[k:], stroke=end_color, width=width, dash=dash, tags=tags + (f"half-v{end}",)),
    ]


def _detector(pos: Point, v: int, roles: tuple[str, ...], facing: str = "up") -> list[Element]:
    lx, ly = pos
    offset = {"up": (0, GLYPH + 10), "left": (GLYPH + 12, 0)}[facing]
    return [
        semicircle(pos, GLYPH, facing, fill="dimgray", tags=_glyph_tags(v, roles)),
        label((lx + offset[0], ly + offset[1]), f"D{v}", size=10.0, tags=("label", f"v{v}")),
    ]


def _region(members: list[Point], pad: float, title: str) -> list[Element]:
    xs = [p[0] for p in members]
    ys = [p[1] for p in members]
    x0, y0 = min(xs) - pad, min(ys) - pad
    w, h = max(xs) - min(xs) + 2 * pad, max(ys) - min(ys) + 2 * pad
    return [
        rect((x0, y0), w, h, stroke="gray", dash=REGION_DASH, tags=("heralding-region",)),
        label((x0 + w / 2, y0 - 8), title, size=10.0, fill="gray", tags=("label", "heralding-region")),
    ]


def _column_rank(v: int, r: RoleAssignment) -> int:
    if v in r.beam_splitters:
        return 1
    if v in r.sources:
        return 0
    if v in r.detectors:
        return 2
    return 1


def _orient(e: Edge, r: RoleAssignment) -> tuple[int, int]:
    a, b = e.v1, e.v2
    if _column_rank(b, r) < _column_rank(a, r):
        return b, a
    return a, b


def _single_photon(g: NetworkGraph, r: RoleAssignment, palette: ModePalette) -> Scene:
    sources = sorted(r.sources)
    detectors = sorted(r.detectors - r.ancillas) + sorted(r.ancillas)
    middle = sorted(set(g.vertices) - r.sources - r.detectors)
    widest = max(len(sources), len(detectors), len(middle), 1)
    width = max(600.0, 2 * MARGIN + SPACING * (widest - 1) + (60.0 if r.ancillas else 0.0))
    top, mid_y, bottom = 100.0, 300.0, 500.0
    height = 600.0

    def row(items: list[int], y: float) -> dict[int, Point]:
        return {v: (MARGIN + SPACING * k, y) for k, v in enumerate(items)}

    src_pos = row(sources, top)
    mid_pos = row(middle, mid_y)
    det_pos = {
        v: (MARGIN + SPACING * k + (60.0 if v in r.ancillas else 0.0), bottom)
        for k, v in enumerate(detectors)
    }

    max_abs = max((abs(e.weight) for e in g.edges), default=0.0)
    elements: list[Element] = []
    if r.ancillas:
        elements += _region([det_pos[v] for v in sorted(r.ancillas)], 40.0, "heralding")

    lanes = len(g.edges) or 1
    for i, e in enumerate(g.edges):
        start, end = _orient(e, r)
        xs, ys = src_pos.get(start) or mid_pos.get(start) or det_pos[start]
        xe, ye = det_pos.get(end) or mid_pos.get(end) or src_pos[end]
        lane = 150.0 + 300.0 * (i + 0.5) / lanes
        pts = [(xs, ys + GLYPH), (xs, lane), (xe, lane), (xe, ye - GLYPH)]
        elements += _route(pts, e, i, start, end, palette, max_abs)

    for v in sources:
        x, y = src_pos[v]
        roles = tuple(role for role in r.roles_of(v) if role not in ("detector", "ancilla"))
        elements.append(diamond((x, y), GLYPH, fill="gold", tags=_glyph_tags(v, roles)))
        elements.append(label((x, y - GLYPH - 10), SOURCE_LABEL, size=9.0, tags=("label", "wavelength", f"v{v}")))
        elements.append(label((x + GLYPH + 12, y), f"S{v}", size=10.0, tags=("label", f"v{v}")))
    for v in detectors:
        roles = tuple(role for role in r.roles_of(v) if role in ("detector", "ancilla"))
        elements += _detector(det_pos[v], v, roles)
    for v in middle:
        x, y = mid_pos[v]
        elements.append(rect((x - SQUARE / 2, y - SQUARE / 2), SQUARE, SQUARE, fill="whitesmoke", tags=_glyph_tags(v, r.roles_of(v))))
        elements.append(label((x, y + SQUARE), f"{v}", size=10.0, tags=("label", f"v{v}")))
    return Scene(width, height, tuple(elements))


def _spread(items: list[int], x: float, height: float) -> dict[int, Point]:
    n = len(items)
    if n == 0:
        return {}
    step = (height - 2 * MARGIN) / max(n - 1, 1)
    y0 = MARGIN if n > 1 else height / 2
    return {v: (x, y0 + step * k) for k, v in enumerate(items)}


def _spdc_heralded(g: NetworkGraph, r: RoleAssignment, palette: ModePalette) -> Scene:
    n_edges = len(g.edges)
    height = max(500.0, 2 * MARGIN + 26.0 * n_edges)
    width = 820.0
    pump_x, crystal_x, fan_x, bs_x, party_x, anc_x = 30.0, 220.0, 250.0, 420.0, 580.0, 720.0

    splitters = sorted(r.beam_splitters)
    parties = sorted(set(g.vertices) - r.ancillas - r.beam_splitters)
    ancillas = sorted(r.ancillas)
    bs_pos = _spread(splitters, bs_x, height)
    det_pos = _spread(parties, party_x, height)
    # keep party routes from running through a splitter square on the same row
    taken = {round(y, 6) for _, y in bs_pos.values()}
    det_pos = {v: (x, y + 1.5 * SQUARE if round(y, 6) in taken else y) for v, (x, y) in det_pos.items()}
    det_pos.update(_spread(ancillas, anc_x, height))
    # beam splitters that are not detectors still need a landing point
    for v in splitters:
        det_pos.setdefault(v, (party_x, bs_pos[v][1]))

    elements: list[Element] = []
    if ancillas:
        elements += _region([det_pos[v] for v in ancillas], 40.0, "heralding")

    mid = height / 2
    elements.append(rect((pump_x, mid - 20), 80.0, 40.0, fill="darkviolet", tags=("pump",)))
    elements.append(label((pump_x + 40, mid), PUMP_LABEL, size=11.0, fill="white", tags=("label", "pump", "wavelength")))
    crystals = _spread(list(range(n_edges)), crystal_x, height)
    ys = [crystals[i][1] for i in range(n_edges)]
    if ys:
        spine = crystal_x - 50
        elements.append(polyline([(pump_x + 80, mid), (spine, mid)], stroke="darkviolet", width=2.0, tags=("pump", "beam")))
        elements.append(polyline([(spine, min(ys + [mid])), (spine, max(ys + [mid]))], stroke="darkviolet", width=2.0, tags=("pump", "beam")))

    max_abs = max((abs(e.weight) for e in g.edges), default=0.0)
    step = min(6.0, 140.0 / max(2 * n_edges, 1))
    for i, e in enumerate(g.edges):
        yc = ys[i]
        elements.append(polyline([(crystal_x - 50, yc), (crystal_x - 12, yc)], stroke="darkviolet", width=1.0, tags=("pump", "beam", f"e{i}")))
        for side, v in enumerate(e.pair):
            target = bs_pos.get(v) or det_pos[v]
            half = SQUARE / 2 if v in bs_pos else GLYPH
            xf = fan_x + step * (2 * i + side)
            pts = [(crystal_x + 12, yc), (xf, yc), (xf, target[1]), (target[0] - half, target[1])]
            elements.append(
                polyline(
                    pts,
                    stroke=palette.color(e.mode_at(v)),
                    width=stroke_width(e.weight, max_abs),
                    dash=NEGATIVE_DASH if e.weight < 0 else None,
                    tags=("route", f"e{i}", "from-crystal", f"to-v{v}", "signal" if side == 0 else "idler"),
                )
            )
    for v in splitters:
        (xb, yb), (xd, yd) = bs_pos[v], det_pos[v]
        elements.append(polyline([(xb + SQUARE / 2, yb), ((xb + xd) / 2, yb), ((xb + xd) / 2, yd), (xd - GLYPH, yd)], stroke="gray", width=1.5, tags=("route", "bs-link", f"from-v{v}", f"to-v{v}")))

    for i, e in enumerate(g.edges):
        elements.append(rect((crystal_x - 12, ys[i] - 7), 24.0, 14.0, fill="lightyellow", tags=("crystal", f"e{i}")))
        elements.append(label((crystal_x, ys[i]), CRYSTAL_LABEL, size=6.0, tags=("label", "crystal", f"e{i}")))
    for v in splitters:
        x, y = bs_pos[v]
        elements.append(rect((x - SQUARE / 2, y - SQUARE / 2), SQUARE, SQUARE, fill="whitesmoke", tags=_glyph_tags(v, ("beam_splitter",))))
        elements.append(label((x, y - SQUARE), f"BS{v}", size=9.0, tags=("label", f"v{v}")))
    for v in sorted(det_pos):
        roles = tuple(role for role in r.roles_of(v) if role != "beam_splitter")
        if roles:
            elements += _detector(det_pos[v], v, roles, facing="left")
    return Scene(width, height, tuple(elements))


def _adaptive(g: NetworkGraph, r: RoleAssignment, palette: ModePalette) -> Scene:
    columns: dict[int, list[int]] = {0: [], 1: [], 2: []}
    for v in g.vertices:
        columns[_column_rank(v, r)].append(v)
    columns[2].sort(key=lambda v: (v in r.ancillas, v))
    tallest = max(len(c) for c in columns.values())
    height = max(500.0, 2 * MARGIN + 70.0 * (tallest - 1))
    width = 720.0
    xs = {0: 120.0, 1: 340.0, 2: 560.0}
    pos: dict[int, Point] = {}
    for rank, items in columns.items():
        pos.update(_spread(items, xs[rank], height))

    elements: list[Element] = []
    heralded = [v for v in columns[2] if v in r.ancillas]
    if heralded:
        elements += _region([pos[v] for v in heralded], 40.0, "heralding")

    max_abs = max((abs(e.weight) for e in g.edges), default=0.0)
    pair_count: dict[tuple[int, int], int] = defaultdict(int)
    for i, e in enumerate(g.edges):
        start, end = _orient(e, r)
        k = pair_count[e.pair]
        pair_count[e.pair] += 1
        (xa, ya), (xb, yb) = pos[start], pos[end]
        if xa == xb:
            bend = xa + 40.0 + 10.0 * k
            pts = [(xa + GLYPH, ya), (bend, ya), (bend, yb), (xb + GLYPH, yb)]
        else:
            xm = (xa + xb) / 2 + 10.0 * k - 20.0 * (i % 3)
            pts = [(xa + GLYPH, ya), (xm, ya), (xm, yb), (xb - GLYPH, yb)]
        elements += _route(pts, e, i, start, end, palette, max_abs)

    for v in g.vertices:
        x, y = pos[v]
        tags = _glyph_tags(v, r.roles_of(v))
        rank = _column_rank(v, r)
        if rank == 0:
            elements.append(diamond((x, y), GLYPH, fill="gold", tags=tags))
        elif rank == 1:
            elements.append(rect((x - SQUARE / 2, y - SQUARE / 2), SQUARE, SQUARE, fill="whitesmoke", tags=tags))
        else:
            elements.append(semicircle((x, y), GLYPH, "left", fill="dimgray", tags=tags))
        elements.append(label((x, y - GLYPH - 10), str(v), size=10.0, tags=("label", f"v{v}")))
    return Scene(width, height, tuple(elements))


def render_optical_table(
    g: NetworkGraph,
    r: RoleAssignment,
    plan: StrategyPlan,
    palette: ModePalette = OPTICAL_PALETTE,
) -> Scene:
    if g.is_empty:
        return Scene(600.0, 600.0, ())
    if plan.strategy == SINGLE_PHOTON:
        return _single_photon(g, r, palette)
    if plan.strategy == SPDC_HERALDED:
        return _spdc_heralded(g, r, palette)
    if plan.strategy == ADAPTIVE:
        return _adaptive(g, r, palette)
    raise ValueError(f"unknown strategy {plan.strategy!r}")


def glyph_roles(scene: Scene) -> dict[str, frozenset[int]]:
    """Role name to the vertices whose glyphs depict it (used for consistency checks)."""
    out: dict[str, set[int]] = defaultdict(set)
    for el in scene.find("glyph"):
        vertex = next(int(t[1:]) for t in el.tags if t.startswith("v") and t[1:].isdigit())
        for role in ("source", "detector", "beam_splitter", "ancilla"):
            if role in el.tags:
                out[role].add(vertex)
    return {k: frozenset(v) for k, v in out.items()}
