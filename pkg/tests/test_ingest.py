import json
import math

import pytest
from hypothesis import given

from helpers import as_tuples, bundle, edge_lists, make_graph
from qnetinterp import data
from qnetinterp.errors import FormatError, InputIOError, ParseError, ValidationError
from qnetinterp.ingest import (
    Edge,
    NetworkConfig,
    NetworkGraph,
    config_from_data,
    graph_from_data,
    graph_to_data,
    graph_to_json,
    load_bundle,
    load_config,
    load_graph,
    parse_config,
    parse_graph,
)


def test_nested_mapping_minimal():
    g = parse_graph('{"graph": {"(0, 1, 0, 0)": 1.0}}')
    assert as_tuples(g) == [(0, 1, 0, 0, 1.0)]
    assert g.vertices == (0, 1)


def test_list_form_is_canonicalized():
    g = parse_graph("[[1, 0, 1, 0, -0.5]]")
    assert as_tuples(g) == [(0, 1, 0, 1, -0.5)]


def test_flat_mapping_and_pairs():
    flat = parse_graph('{"(2, 3, 1, 0)": 0.5, "(0, 1, 0, 0)": 1}')
    assert as_tuples(flat) == [(0, 1, 0, 0, 1.0), (2, 3, 1, 0, 0.5)]
    pairs = parse_graph("[[0, 1], [1, 2]]")
    assert as_tuples(pairs) == [(0, 1, 0, 0, 1.0), (1, 2, 0, 0, 1.0)]


def test_in_memory_tuple_keys():
    g = graph_from_data({(3, 1, 2, 0): -1.0})
    assert as_tuples(g) == [(1, 3, 0, 2, -1.0)]


def test_w4_fixture_shape():
    g = load_graph(data.graph_path("w4"))
    assert len(g.vertices) == 8
    assert len(g.edges) == 10


@pytest.mark.parametrize(
    "raw",
    [
        '{"graph": {"(0, 1, 0)": 1.0}}',
        '{"graph": {"(0, a, 0, 0)": 1.0}}',
        '{"graph": {"(0, 1, 0, 0)": "x"}}',
        '{"graph": {"(0, 1, 0, 0)": [1, 2]}}',
        "[[0, 1, 0]]",
        "[5]",
        "42",
        '{"graph": 3}',
        "[[0.5, 1, 0, 0, 1.0]]",
        "[[-1, 1, 0, 0, 1.0]]",
        "[[true, 1, 0, 0, 1.0]]",
    ],
)
def test_format_errors(raw):
    with pytest.raises(FormatError):
        parse_graph(raw)


def test_complex_weight_rejected():
    with pytest.raises(FormatError, match="complex"):
        graph_from_data({(0, 1, 0, 0): 1 + 2j})


def test_malformed_json_reports_position():
    with pytest.raises(ParseError) as info:
        parse_graph('{"graph": {\n  "(0, 1, 0, 0)": 1.0,\n}')
    msg = str(info.value)
    assert "line 3" in msg and "column" in msg
    assert not isinstance(info.value, FormatError)


@pytest.mark.parametrize(
    "raw, match",
    [
        ("[[0, 0, 0, 0, 1.0]]", "self-loop"),
        ('{"graph": {"(0, 1, 0, 0)": 1.0, "(1, 0, 0, 0)": 2.0}}', "duplicate"),
        ('{"graph": {"(0, 1, 0, 0)": 1.0, "(0, 1, 0, 0)": 2.0}}', "duplicate"),
        ("[[0, 1, 0, 0, NaN]]", "finite"),
        ("[[0, 1, 0, 0, Infinity]]", "finite"),
    ],
)
def test_validation_errors(raw, match):
    with pytest.raises(ValidationError, match=match):
        parse_graph(raw)


def test_zero_weight_dropped_with_warning():
    g = parse_graph("[[0, 1, 0, 0, 0.0], [1, 2, 0, 0, 1.0]]")
    assert as_tuples(g) == [(1, 2, 0, 0, 1.0)]
    assert len(g.warnings) == 1 and "zero-weight" in g.warnings[0]


def test_parallel_edges_with_distinct_modes_are_kept():
    g = parse_graph("[[0, 1, 0, 0, 1.0], [0, 1, 1, 1, -1.0]]")
    assert len(g.edges) == 2


def test_empty_graph():
    g = parse_graph("[]")
    assert g.is_empty and g.vertices == () and len(g) == 0


def test_config_examples():
    c = parse_config('{"single_emitters":[4,5,6,7],"out_nodes":[0,1,2,3]}')
    assert c.single_emitters == (4, 5, 6, 7) and c.out_nodes == (0, 1, 2, 3)
    assert c.anc_detectors is None and c.target_state is None
    empty = parse_config("{}")
    assert empty == NetworkConfig()
    ghz = parse_config('{"target_state":["000","111","222","333"]}')
    assert len(ghz.target_state) == 4 and len(ghz.target_state[0]) == 3
    assert not ghz.amplitudes


def test_config_unknown_keys_preserved():
    c = config_from_data({"out_nodes": [0], "loss_func": "cr", "foo": 3})
    assert c.extra["loss_func"] == "cr"
    assert c.to_data()["foo"] == 3


@pytest.mark.parametrize(
    "doc, error",
    [
        ({"target_state": ["00", "111"]}, ValidationError),
        ({"target_state": ["0a"]}, ValidationError),
        ({"target_state": ["00", "11"], "amplitudes": [1.0]}, ValidationError),
        ({"out_nodes": "0,1"}, FormatError),
        ({"out_nodes": [0, -1]}, FormatError),
        ([1, 2], FormatError),
    ],
)
def test_config_errors(doc, error):
    with pytest.raises(error):
        config_from_data(doc)


def test_config_vertex_references_checked():
    g = make_graph([(0, 1, 0, 0, 1.0)])
    with pytest.raises(ValidationError, match=r"absent from the graph: \[7\]"):
        load_bundle({"out_nodes": [0, 7]}, g)


def test_bundle_modes(tmp_path):
    cfg = json.loads(data.config_path("w4").read_text())
    c1, g1 = load_bundle(data.config_path("w4"), data.graph_path("w4"))
    c2, g2 = load_bundle(cfg, str(data.graph_path("w4")))
    assert (c1, g1.edges) == (c2, g2.edges)
    c3, g3 = load_bundle(None, graph_to_data(g1))
    assert c3 == NetworkConfig() and g3.edges == g1.edges


def test_missing_file_names_path(tmp_path):
    missing = tmp_path / "nope.json"
    with pytest.raises(InputIOError) as info:
        load_graph(missing)
    assert str(missing) in str(info.value)
    with pytest.raises(InputIOError):
        load_config(missing)


def test_graph_source_required():
    with pytest.raises(ValueError):
        load_bundle({}, None)


def test_edge_canonical_form():
    e = Edge.make(5, 2, 0, 1, -1.0)
    assert e.key == (2, 5, 1, 0)
    assert e.mode_at(5) == 0 and e.mode_at(2) == 1
    assert e.other(2) == 5 and e.is_mixed_mode


@pytest.mark.parametrize("network", ["w4", "bell", "ghz346"])
def test_fixture_round_trip(network):
    _, g = bundle(network)
    for shape in ("mapping", "flat", "list"):
        assert parse_graph(graph_to_json(g, shape)).edges == g.edges


@given(edge_lists())
def test_round_trip_all_shapes(edges):
    g = make_graph(edges)
    for shape in ("mapping", "flat", "list"):
        again = parse_graph(graph_to_json(g, shape))
        assert as_tuples(again) == as_tuples(g)


@given(edge_lists())
def test_canonicalization_idempotent(edges):
    g = make_graph(edges)
    assert NetworkGraph(tuple(Edge.make(*t) for t in as_tuples(g))).edges == g.edges
    assert all(e.v1 < e.v2 for e in g.edges)


@given(edge_lists())
def test_vertex_set_is_union_of_endpoints(edges):
    g = make_graph(edges)
    expected = set()
    for a, b, *_ in edges:
        expected.add(a)
        expected.add(b)
    assert g.vertices == tuple(sorted(expected))


@given(edge_lists())
def test_weights_survive_round_trip_exactly(edges):
    g = parse_graph(graph_to_json(make_graph(edges), "list"))
    assert all(math.isfinite(e.weight) and e.weight != 0 for e in g.edges)
    assert sorted(e.weight for e in g.edges) == sorted(w for *_, w in edges)
