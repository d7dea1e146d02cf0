"""Fixture loaders, random generators and hypothesis strategies shared by the tests."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from qnetinterp import data
from qnetinterp.ingest import Edge, NetworkConfig, NetworkGraph, load_bundle


def bundle(network: str):
    return load_bundle(data.config_path(network), data.graph_path(network))


def as_tuples(graph: NetworkGraph):
    return [(e.v1, e.v2, e.mode1, e.mode2, e.weight) for e in graph.edges]


def make_graph(edges) -> NetworkGraph:
    return NetworkGraph(tuple(Edge.make(*e) for e in edges))


def qkd5_standin() -> NetworkGraph:
    """A synthetic 10-vertex, 31-edge, two-mode graph shaped like the five-party QKD network.

    Parties 0-4 form a complete graph, each party couples to three of the
    ancillas 5-9, the ancillas form a path 5-6-7-8, and three party-ancilla
    pairs carry a parallel mode-1 edge. Only its size, mode count and
    vertex ids match the real network; its topology metrics do not.
    """
    edges = []
    for a in range(5):
        for b in range(a + 1, 5):
            edges.append((a, b, 0, 0, 1.0))
    for i in range(5):
        for k in (0, 1, 2):
            edges.append((i, 5 + (i + k) % 5, 0, 0, 1.0 if k == 0 else 0.5))
    edges += [(5, 6, 0, 0, 0.1), (6, 7, 0, 0, 0.1), (7, 8, 0, 0, 0.1)]
    edges += [(0, 5, 1, 1, -1.0), (1, 6, 1, 1, -1.0), (2, 7, 1, 1, -1.0)]
    return make_graph(edges)


def random_simple_graph(rng: random.Random, max_vertices: int = 8, p: float | None = None):
    n = rng.randint(0, max_vertices)
    p = rng.random() if p is None else p
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p]
    return list(range(n)), pairs


def random_multigraph(rng: random.Random, max_vertices: int = 10, max_edges: int = 14, max_mode: int = 2):
    """Random edge list over vertices 0..n-1 with possible parallels; every vertex is touched."""
    n = rng.randint(1, max_vertices // 2) * 2
    edges, keys = [], set()
    # a random perfect matching first so the vertex set is exactly 0..n-1
    order = list(range(n))
    rng.shuffle(order)
    extra = rng.randint(0, max(0, max_edges - n // 2))
    candidates = [(order[i], order[i + 1]) for i in range(0, n, 2)]
    candidates += [tuple(rng.sample(range(n), 2)) for _ in range(extra)]
    for a, b in candidates:
        m1, m2 = rng.randint(0, max_mode), rng.randint(0, max_mode)
        a, b, m1, m2 = (a, b, m1, m2) if a < b else (b, a, m2, m1)
        if (a, b, m1, m2) in keys:
            continue
        keys.add((a, b, m1, m2))
        w = rng.choice([1.0, -1.0, 0.5, -0.5, 2.0, 0.1])
        edges.append((a, b, m1, m2, w))
    return list(range(n)), edges


def random_config(rng: random.Random, vertices):
    """Random partial config over ``vertices``: each key present with probability 1/2."""
    vs = list(vertices)

    def subset():
        return tuple(sorted(rng.sample(vs, rng.randint(0, len(vs))))) if vs else ()

    kw = {}
    for key in ("single_emitters", "out_nodes", "anc_detectors"):
        if rng.random() < 0.5:
            kw[key] = subset()
    if rng.random() < 0.5 and vs:
        width = rng.randint(1, len(vs))
        count = rng.randint(1, 4)
        kw["target_state"] = tuple(
            "".join(str(rng.randint(0, 2)) for _ in range(width)) for _ in range(count)
        )
    return NetworkConfig(**kw)


vertex_ids = st.integers(min_value=0, max_value=9)
modes = st.integers(min_value=0, max_value=3)
weights = st.one_of(
    st.sampled_from([1.0, -1.0, 0.5, -0.5, 0.1, -0.1, 2.0]),
    st.floats(min_value=-5, max_value=5, allow_nan=False, allow_infinity=False).filter(lambda w: w != 0.0),
)


@st.composite
def edge_lists(draw, max_edges: int = 16):
    """Canonical, duplicate-free 5-tuples without self-loops."""
    raw = draw(st.lists(st.tuples(vertex_ids, vertex_ids, modes, modes, weights), max_size=max_edges))
    seen, out = set(), []
    for a, b, m1, m2, w in raw:
        if a == b:
            continue
        if a > b:
            a, b, m1, m2 = b, a, m2, m1
        if (a, b, m1, m2) in seen:
            continue
        seen.add((a, b, m1, m2))
        out.append((a, b, m1, m2, w))
    return out


graphs = edge_lists().map(make_graph)
