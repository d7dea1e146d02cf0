"""Functional role assignment through a three-tier priority cascade.

1. explicit config role keys (``single_emitters``, ``out_nodes``,
   ``anc_detectors``) win outright;
2. otherwise the target-state ket length picks the party vertices;
3. otherwise degree structure decides.

Every assignment records which tier produced it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .errors import ValidationError
from .ingest import NetworkConfig, NetworkGraph, validate_config_against_graph
from .topology import TopologyMetrics

CONFIG = "config"
TARGET_STATE = "target-state"
HEURISTIC = "heuristic"

ROLE_NAMES = ("source", "detector", "beam_splitter", "ancilla")


@dataclass(frozen=True)
class RoleHeuristics:
    """Thresholds for the structural fallback.

    A vertex counts as a hub (beam-splitter candidate) when its multigraph
    degree exceeds ``hub_ratio * mean_degree``.
    """

    hub_ratio: float = 1.0


DEFAULT_HEURISTICS = RoleHeuristics()


@dataclass(frozen=True)
class RoleAssignment:
    sources: frozenset[int] = frozenset()
    detectors: frozenset[int] = frozenset()
    beam_splitters: frozenset[int] = frozenset()
    ancillas: frozenset[int] = frozenset()
    dual_role: frozenset[int] = frozenset()
    provenance: dict[int, dict[str, str]] = field(default_factory=dict)
    tier: str | None = None
    notes: tuple[str, ...] = ()

    def roles_of(self, vertex: int) -> tuple[str, ...]:
        sets = (self.sources, self.detectors, self.beam_splitters, self.ancillas)
        return tuple(name for name, s in zip(ROLE_NAMES, sets) if vertex in s)

    def role_set(self, role: str) -> frozenset[int]:
        return {
            "source": self.sources,
            "detector": self.detectors,
            "beam_splitter": self.beam_splitters,
            "ancilla": self.ancillas,
        }[role]

    @property
    def parties(self) -> frozenset[int]:
        """Detectors that are not ancillas: the vertices carrying the target state."""
        return self.detectors - self.ancillas


class _Builder:
    def __init__(self) -> None:
        self.sets: dict[str, set[int]] = {r: set() for r in ROLE_NAMES}
        self.provenance: dict[int, dict[str, str]] = {}

    def add(self, role: str, vertices: Iterable[int], tier: str) -> None:
        for v in vertices:
            self.sets[role].add(v)
            self.provenance.setdefault(v, {}).setdefault(role, tier)

    def covered(self) -> set[int]:
        return set(self.provenance)


def parallel_pair_vertices(g: NetworkGraph) -> set[int]:
    """Vertices incident to at least one pair joined by several mode-colored edges."""
    counts = Counter(e.pair for e in g.edges)
    return {v for pair, n in counts.items() if n > 1 for v in pair}


def structural_hubs(m: TopologyMetrics, heuristics: RoleHeuristics = DEFAULT_HEURISTICS) -> set[int]:
    threshold = heuristics.hub_ratio * m.mean_degree
    return {v for v, d in m.vertex_degrees.items() if d > threshold}


def _has(ids: tuple[int, ...] | None) -> bool:
    return bool(ids)


def identify_beam_splitters(
    g: NetworkGraph,
    c: NetworkConfig,
    m: TopologyMetrics,
    heuristics: RoleHeuristics = DEFAULT_HEURISTICS,
) -> frozenset[int]:
    """Beam-splitter vertices under the same cascade as :func:`identify_roles`.

    SPDC-style configs (``out_nodes`` and ``anc_detectors``) use the ancillas;
    configs with ancillas but no emitters keep only the ancillas that sit on
    parallel multi-mode edges; single-emitter networks have none; with no
    role keys at all, vertices of above-average degree are used.
    """
    if _has(c.single_emitters):
        return frozenset()
    anc = set(c.anc_detectors or ())
    if _has(c.out_nodes) and anc:
        return frozenset(anc)
    if anc or _has(c.out_nodes):
        return frozenset(anc & parallel_pair_vertices(g))
    return frozenset(structural_hubs(m, heuristics))


def identify_roles(
    g: NetworkGraph,
    c: NetworkConfig,
    m: TopologyMetrics,
    heuristics: RoleHeuristics = DEFAULT_HEURISTICS,
) -> RoleAssignment:
    if g.is_empty:
        return RoleAssignment()
    validate_config_against_graph(c, g)
    vertices = set(g.vertices)
    b = _Builder()
    notes: list[str] = []
    bs = identify_beam_splitters(g, c, m, heuristics)

    if _has(c.single_emitters):
        tier = CONFIG
        sources = set(c.single_emitters)
        anc = set(c.anc_detectors or ())
        if _has(c.out_nodes):
            detectors = set(c.out_nodes) | anc
        else:
            detectors = (vertices - sources) | anc
        b.add("source", sources, CONFIG)
        b.add("detector", detectors, CONFIG)
        b.add("ancilla", anc, CONFIG)
        dual = set()
    elif _has(c.out_nodes) or _has(c.anc_detectors):
        tier = CONFIG
        anc = set(c.anc_detectors or ())
        parties = set(c.out_nodes) if _has(c.out_nodes) else vertices - anc
        b.add("source", parties, CONFIG)
        b.add("detector", parties | anc, CONFIG)
        b.add("ancilla", anc, CONFIG)
        dual = anc & parallel_pair_vertices(g)
        spdc = _has(c.out_nodes) and bool(anc)
        b.add("beam_splitter", sorted(bs), CONFIG if spdc else HEURISTIC)
    elif c.target_state:
        tier = TARGET_STATE
        width = len(c.target_state[0])
        ordered = sorted(vertices)
        b.add("detector", ordered[:width], TARGET_STATE)
        b.add("source", ordered[width:], TARGET_STATE)
        b.add("beam_splitter", sorted(bs), HEURISTIC)
        dual = set()
        if width > len(ordered):
            notes.append(f"target kets have {width} parties but the graph has only {len(ordered)} vertices")
    else:
        tier = HEURISTIC
        min_deg = min(m.vertex_degrees.values())
        detectors = {v for v, d in m.vertex_degrees.items() if d == min_deg}
        b.add("beam_splitter", sorted(bs), HEURISTIC)
        b.add("detector", detectors, HEURISTIC)
        b.add("source", vertices - detectors - set(bs), HEURISTIC)
        dual = set()

    leftover = sorted(vertices - b.covered())
    if leftover:
        b.add("detector", leftover, HEURISTIC)
        notes.append(f"vertices {leftover} have no declared role; treated as detectors")

    unknown = b.covered() - vertices
    if unknown:
        raise ValidationError(f"role sets reference vertices absent from the graph: {sorted(unknown)}")

    return RoleAssignment(
        sources=frozenset(b.sets["source"]),
        detectors=frozenset(b.sets["detector"]),
        beam_splitters=frozenset(b.sets["beam_splitter"]),
        ancillas=frozenset(b.sets["ancilla"]),
        dual_role=frozenset(dual),
        provenance={v: dict(sorted(b.provenance[v].items())) for v in sorted(b.provenance)},
        tier=tier,
        notes=tuple(notes),
    )
