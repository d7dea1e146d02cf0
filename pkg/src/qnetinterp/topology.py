"""Degree, connectivity and motif statistics.

Degrees and mean degree count parallel edges (multigraph quantities).
Density, clustering, diameter, the bipartite/tree tests and all motif counts
are taken on the simple projection, where each adjacent vertex pair appears
once regardless of how many mode-colored edges join it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Mapping

from .ingest import NetworkGraph

Adjacency = Mapping[int, frozenset[int]]

STAR_MIN_DEGREE = 3


@dataclass(frozen=True)
class TopologyMetrics:
    vertex_degrees: dict[int, int]
    mean_degree: float
    density: float
    clustering: float
    diameter: int | None
    component_count: int
    is_bipartite: bool
    is_tree: bool
    triangles: int
    squares: int
    stars: int
    vertex_count: int
    edge_count: int
    pair_count: int

    @property
    def density_fraction(self) -> Fraction:
        if self.vertex_count < 2:
            return Fraction(0)
        return Fraction(self.pair_count, comb(self.vertex_count, 2))

    @property
    def mean_degree_fraction(self) -> Fraction:
        if self.vertex_count == 0:
            return Fraction(0)
        return Fraction(2 * self.edge_count, self.vertex_count)

    @property
    def hub(self) -> int | None:
        """Vertex of largest multigraph degree (lowest id on ties)."""
        if not self.vertex_degrees:
            return None
        return max(sorted(self.vertex_degrees), key=lambda v: self.vertex_degrees[v])


def simple_projection(g: NetworkGraph) -> dict[int, frozenset[int]]:
    """Collapse parallel edges: map each vertex to its set of distinct neighbours."""
    nbrs: dict[int, set[int]] = {v: set() for v in g.vertices}
    for e in g.edges:
        nbrs[e.v1].add(e.v2)
        nbrs[e.v2].add(e.v1)
    return {v: frozenset(n) for v, n in nbrs.items()}


def pair_set(adj: Adjacency) -> set[tuple[int, int]]:
    return {(u, v) for u, ns in adj.items() for v in ns if u < v}


def count_motifs(adj: Adjacency) -> tuple[int, int, int]:
    """Return ``(triangles, squares, stars)`` for a simple graph.

    Squares are 4-cycles counted once per cyclic vertex set. Every 4-cycle
    has two diagonals, and each diagonal pair ``(u, v)`` sees the cycle as
    one choice of two common neighbours, hence half the sum of
    ``C(codeg(u, v), 2)`` over all unordered pairs.
    """
    verts = sorted(adj)
    triangles = 0
    twice_squares = 0
    for u, v in combinations(verts, 2):
        common = len(adj[u] & adj[v])
        twice_squares += comb(common, 2)
        if v in adj[u]:
            triangles += common
    stars = sum(1 for v in verts if len(adj[v]) >= STAR_MIN_DEGREE)
    return triangles // 3, twice_squares // 2, stars


def _bfs(adj: Adjacency, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def components(adj: Adjacency) -> list[list[int]]:
    seen: set[int] = set()
    out = []
    for v in sorted(adj):
        if v not in seen:
            comp = sorted(_bfs(adj, v))
            seen.update(comp)
            out.append(comp)
    return out


def is_bipartite(adj: Adjacency) -> bool:
    side: dict[int, int] = {}
    for start in sorted(adj):
        if start in side:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in side:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def diameter(adj: Adjacency) -> int | None:
    """Longest shortest path, or ``None`` if disconnected or fewer than two vertices."""
    if len(adj) < 2:
        return None
    longest = 0
    for v in adj:
        dist = _bfs(adj, v)
        if len(dist) != len(adj):
            return None
        longest = max(longest, max(dist.values()))
    return longest


def local_clustering(adj: Adjacency, v: int) -> float:
    nbrs = sorted(adj[v])
    k = len(nbrs)
    if k < 2:
        return 0.0
    links = sum(1 for a, b in combinations(nbrs, 2) if b in adj[a])
    return 2.0 * links / (k * (k - 1))


def average_clustering(adj: Adjacency) -> float:
    if not adj:
        return 0.0
    return sum(local_clustering(adj, v) for v in adj) / len(adj)


def compute_metrics(g: NetworkGraph) -> TopologyMetrics:
    adj = simple_projection(g)
    n = len(g.vertices)
    degrees = {v: 0 for v in g.vertices}
    for e in g.edges:
        degrees[e.v1] += 1
        degrees[e.v2] += 1
    pairs = len(pair_set(adj))
    comps = components(adj)
    triangles, squares, stars = count_motifs(adj)
    return TopologyMetrics(
        vertex_degrees=degrees,
        mean_degree=2 * len(g.edges) / n if n else 0.0,
        density=pairs / comb(n, 2) if n >= 2 else 0.0,
        clustering=average_clustering(adj),
        diameter=diameter(adj),
        component_count=len(comps),
        is_bipartite=is_bipartite(adj),
        is_tree=n > 0 and len(comps) == 1 and pairs == n - 1,
        triangles=triangles,
        squares=squares,
        stars=stars,
        vertex_count=n,
        edge_count=len(g.edges),
        pair_count=pairs,
    )
