import math
import xml.etree.ElementTree as ET

import pytest
from hypothesis import given

from helpers import bundle, graphs, make_graph, qkd5_standin
from qnetinterp import data
from qnetinterp.ingest import NetworkGraph, load_config
from qnetinterp.render import (
    NATIVE_PALETTE,
    OPTICAL_PALETTE,
    Scene,
    glyph_roles,
    layout_circular,
    render_native_graph,
    render_optical_table,
    serialize_svg,
)
from qnetinterp.render.native import MAX_WIDTH, MIN_WIDTH, stroke_width
from qnetinterp.render.scene import Element, circle, split_cubic
from qnetinterp.roles import identify_roles
from qnetinterp.strategy import analyze_modes, plan_strategy
from qnetinterp.topology import compute_metrics

SVG = "{http://www.w3.org/2000/svg}"


def optical(c, g):
    r = identify_roles(g, c, compute_metrics(g))
    plan = plan_strategy(g, c, analyze_modes(g), r)
    return render_optical_table(g, r, plan), r


def test_layout_single_vertex_at_top():
    (p,) = layout_circular([7], 10.0, (50.0, 50.0)).values()
    assert p == pytest.approx((50.0, 40.0))


def test_layout_four_vertices_clockwise_from_top():
    pos = layout_circular([0, 1, 2, 3], 1.0, (0.0, 0.0))
    expected = [(0, -1), (1, 0), (0, 1), (-1, 0)]
    for v, (x, y) in zip(range(4), expected):
        assert pos[v][0] == pytest.approx(x, abs=1e-12)
        assert pos[v][1] == pytest.approx(y, abs=1e-12)


def test_layout_ten_vertices_gap_is_36_degrees():
    pos = layout_circular(list(range(10)), 1.0, (0.0, 0.0))
    angles = [math.degrees(math.atan2(-y, x)) for x, y in (pos[v] for v in range(10))]
    for a, b in zip(angles, angles[1:]):
        assert (a - b) % 360 == pytest.approx(36.0)


def test_single_same_mode_edge():
    scene = render_native_graph(make_graph([(0, 1, 0, 0, 1.0)]))
    (edge,) = scene.find("edge")
    assert edge.stroke == "dodgerblue" and edge.dash is None
    assert edge.stroke_width == MAX_WIDTH


def test_mixed_mode_edge_is_dual_colored():
    scene = render_native_graph(make_graph([(2, 5, 1, 0, 0.5)]))
    halves = scene.find("edge")
    assert len(halves) == 2
    assert scene.find("half-v2")[0].stroke == "firebrick"
    assert scene.find("half-v5")[0].stroke == "dodgerblue"
    # the halves meet
    assert halves[0].points[-1] == halves[1].points[0]


def test_negative_edge_dashed():
    scene = render_native_graph(make_graph([(0, 1, 0, 0, -1.0)]))
    assert scene.find("edge")[0].dash is not None


def test_stroke_width_clamped():
    assert stroke_width(0.001, 1.0) == MIN_WIDTH
    assert stroke_width(1.0, 1.0) == MAX_WIDTH


def test_split_cubic_endpoints():
    a, b = split_cubic((0, 0), (1, 2), (3, 2), (4, 0))
    assert a[0] == (0, 0) and b[-1] == (4, 0) and a[-1] == b[0]


def test_parallel_edges_are_offset():
    scene = render_native_graph(make_graph([(0, 1, 0, 0, 1.0), (0, 1, 1, 1, 1.0)]))
    e0, e1 = scene.find("e0")[0], scene.find("e1")[0]
    assert e0.points[0] == e1.points[0] and e0.points[1] != e1.points[1]


def test_palettes():
    assert [NATIVE_PALETTE.color(m) for m in range(4)] == ["dodgerblue", "firebrick", "limegreen", "darkorange"]
    assert OPTICAL_PALETTE.color(2) == "forestgreen"
    assert NATIVE_PALETTE.color(4) == "purple"
    assert NATIVE_PALETTE.color(10) == NATIVE_PALETTE.color(4)


def test_off_palette_color_rejected():
    with pytest.raises(ValueError):
        circle((0, 0), 1.0, stroke="hotpink")
    with pytest.raises(ValueError):
        Element("circle", ((math.nan, 0.0),))


@given(graphs)
def test_native_scene_counts_and_colors(g):
    scene = render_native_graph(g)
    assert len(scene.find("vertex")) == len(g.vertices)
    assert len([el for el in scene.elements if el.kind == "text"]) == len(g.vertices)
    expected = sum(2 if e.is_mixed_mode else 1 for e in g.edges)
    assert len(scene.find("edge")) == expected
    allowed = {NATIVE_PALETTE.color(m) for e in g.edges for m in (e.mode1, e.mode2)}
    assert {el.stroke for el in scene.find("edge")} <= allowed


@given(graphs)
def test_thickness_monotone(g):
    scene = render_native_graph(g)
    width = {i: scene.find(f"e{i}")[0].stroke_width for i in range(len(g.edges))}
    for i, a in enumerate(g.edges):
        for j, b in enumerate(g.edges):
            if abs(a.weight) > abs(b.weight):
                assert width[i] >= width[j]


def test_w4_optical_table():
    scene, _ = optical(*bundle("w4"))
    sources = [el for el in scene.find("glyph") if el.kind == "diamond"]
    detectors = [el for el in scene.find("glyph") if el.kind == "semicircle"]
    assert len(sources) == 4 and len(detectors) == 4
    routes = {t for el in scene.find("route") for t in el.tags if t.startswith("e")}
    assert len(routes) == 10
    assert not scene.find("beam_splitter")
    assert sum(1 for el in scene.elements if el.text == "810nm") == 4


def test_w4_routes_run_source_to_detector():
    c, g = bundle("w4")
    scene, r = optical(c, g)
    for el in scene.find("route"):
        start = next(int(t[6:]) for t in el.tags if t.startswith("from-v"))
        end = next(int(t[4:]) for t in el.tags if t.startswith("to-v"))
        assert start in r.sources and end in r.detectors


def test_ghz346_four_line_colors():
    scene, _ = optical(*bundle("ghz346"))
    colors = {el.stroke for el in scene.find("route")}
    assert colors == {"dodgerblue", "firebrick", "forestgreen", "darkorange"}


def test_routes_never_run_detector_to_source():
    for network in data.NETWORKS:
        scene, r = optical(*bundle(network))
        for el in scene.find("route"):
            start = next((int(t[6:]) for t in el.tags if t.startswith("from-v")), None)
            end = next(int(t[4:]) for t in el.tags if t.startswith("to-v"))
            if start is None:
                continue
            assert not (start in r.detectors - r.sources and end in r.sources - r.detectors)


def test_spdc_layout_on_qkd5_standin():
    g = qkd5_standin()
    scene, r = optical(load_config(data.config_path("qkd5")), g)
    assert any(el.text == "405nm" for el in scene.elements)
    assert len(scene.find("crystal", kind="rect")) == len(g.edges)
    assert sum(1 for el in scene.elements if el.text == "BBO") == len(g.edges)
    (region,) = scene.find("heralding-region", kind="rect")
    (x0, y0), (w, h) = region.points[0], region.extent
    inside = {
        int(next(t[1:] for t in el.tags if t.startswith("v") and t[1:].isdigit()))
        for el in scene.find("glyph", "ancilla")
        if x0 <= el.points[0][0] <= x0 + w and y0 <= el.points[0][1] <= y0 + h
    }
    assert inside == set(range(5, 10))
    assert len(scene.find("glyph", "beam_splitter", kind="rect")) == 5
    assert len(scene.find("signal")) == len(g.edges) == len(scene.find("idler"))


@pytest.mark.parametrize("network", data.NETWORKS)
def test_glyph_roles_match_assignment(network):
    scene, r = optical(*bundle(network))
    depicted = glyph_roles(scene)
    for role in ("source", "detector", "beam_splitter", "ancilla"):
        assert depicted.get(role, frozenset()) == r.role_set(role)


def test_empty_graph_scenes():
    empty = NetworkGraph()
    assert render_native_graph(empty).elements == ()
    assert serialize_svg(Scene(100.0, 100.0)).endswith('viewBox="0.00 0.00 100.00 100.00"/>\n')


def test_serialize_one_circle():
    text = serialize_svg(Scene(10.0, 10.0, (circle((1.23456, 2.0), 3.0),)))
    root = ET.fromstring(text.encode())
    (el,) = list(root)
    assert el.tag == SVG + "circle"
    assert el.get("cx") == "1.23" and el.get("cy") == "2.00" and el.get("r") == "3.00"


@pytest.mark.parametrize("network", data.NETWORKS)
def test_svgs_are_well_formed_and_deterministic(network):
    c, g = bundle(network)
    for make in (lambda: render_native_graph(g), lambda: optical(c, g)[0]):
        first, second = serialize_svg(make()), serialize_svg(make())
        assert first == second
        root = ET.fromstring(first.encode())
        assert root.tag == SVG + "svg" and root.get("version") == "1.1"
        for el in root:
            for attr in ("cx", "cy", "x", "y", "r", "width", "height"):
                if el.get(attr) is not None:
                    assert math.isfinite(float(el.get(attr)))


def _extent(el):
    if el.kind in ("circle", "diamond", "semicircle"):
        (x, y), r = el.points[0], el.size
        return [(x - r, y - r), (x + r, y + r)]
    if el.kind == "rect":
        (x, y), (w, h) = el.points[0], el.extent
        return [(x, y), (x + w, y + h)]
    return list(el.points)


@pytest.mark.parametrize("network", list(data.NETWORKS) + ["qkd5"])
def test_every_element_inside_canvas(network):
    if network == "qkd5":
        c, g = load_config(data.config_path("qkd5")), qkd5_standin()
    else:
        c, g = bundle(network)
    for scene in (render_native_graph(g), optical(c, g)[0]):
        for el in scene.elements:
            for x, y in _extent(el):
                assert 0 <= x <= scene.width and 0 <= y <= scene.height, (el.kind, el.tags, x, y)
