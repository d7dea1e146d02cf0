"""Perfect-matching enumeration and target-state reachability.

Each perfect matching of the colored multigraph is one term of the emitted
state: every vertex receives a photon in the mode of its covering edge, and
the term's amplitude is the product of the chosen edge weights. Summing
terms that produce the same ket gives the ket spectrum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import MatchingDomainError, ResourceLimitError, ValidationError
from .ingest import Edge, NetworkGraph
from .statespec import TargetState

DEFAULT_VERTEX_CAP = 16
REACHABLE_TOL = 1e-12


@dataclass(frozen=True)
class Matching:
    edge_indices: tuple[int, ...]
    edges: tuple[Edge, ...]
    assignment: tuple[tuple[int, int], ...]
    amplitude: float

    @property
    def ket(self) -> str:
        return _ket(mode for _, mode in self.assignment)

    def modes(self) -> dict[int, int]:
        return dict(self.assignment)


@dataclass(frozen=True)
class KetSpectrum:
    entries: dict[str, float] = field(default_factory=dict)
    matching_count: int = 0
    vertices: tuple[int, ...] = ()
    ancilla_condition: tuple[tuple[int, int], ...] = ()

    @property
    def width(self) -> int:
        return len(self.vertices)

    def nonzero(self, tol: float = REACHABLE_TOL) -> dict[str, float]:
        return {k: a for k, a in self.entries.items() if abs(a) > tol}


@dataclass(frozen=True)
class VerificationReport:
    reachable: dict[str, bool]
    amplitudes: dict[str, float]
    extraneous: dict[str, float]
    convention: str
    matching_count: int

    @property
    def all_reachable(self) -> bool:
        return all(self.reachable.values())

    @property
    def unreachable(self) -> list[str]:
        return [k for k, ok in self.reachable.items() if not ok]


def _ket(modes: Iterable[int]) -> str:
    out = []
    for m in modes:
        if m > 9:
            raise ValueError(f"mode {m} does not fit a single ket digit")
        out.append(str(m))
    return "".join(out)


def enumerate_matchings(g: NetworkGraph, cap: int = DEFAULT_VERTEX_CAP) -> list[Matching]:
    """Every perfect matching of ``g``, parallel edges counted as distinct.

    The lowest uncovered vertex is always matched next and its incident
    edges are tried in index order. Because that vertex is the smallest
    endpoint among the remaining edges, the output is sorted
    lexicographically by chosen edge indices.
    """
    n = len(g.vertices)
    if n % 2:
        raise MatchingDomainError(f"graph has {n} vertices; no perfect matchings possible")
    if n > cap:
        raise ResourceLimitError(
            f"graph has {n} vertices, above the enumeration cap of {cap}; raise the cap (--matcher-cap) to proceed"
        )
    incident: dict[int, list[int]] = {v: [] for v in g.vertices}
    for i, e in enumerate(g.edges):
        incident[e.v1].append(i)
        incident[e.v2].append(i)

    order = list(g.vertices)
    covered: set[int] = set()
    chosen: list[int] = []
    results: list[Matching] = []

    def extend(pos: int) -> None:
        while pos < n and order[pos] in covered:
            pos += 1
        if pos == n:
            results.append(_build(g, chosen))
            return
        v = order[pos]
        covered.add(v)
        for i in incident[v]:
            w = g.edges[i].other(v)
            if w in covered:
                continue
            covered.add(w)
            chosen.append(i)
            extend(pos + 1)
            chosen.pop()
            covered.discard(w)
        covered.discard(v)

    extend(0)
    return results


def _build(g: NetworkGraph, indices: list[int]) -> Matching:
    idx = tuple(sorted(indices))
    edges = tuple(g.edges[i] for i in idx)
    modes: dict[int, int] = {}
    amp = 1.0
    for e in edges:
        modes[e.v1] = e.mode1
        modes[e.v2] = e.mode2
        amp *= e.weight
    return Matching(idx, edges, tuple(sorted(modes.items())), amp)


def ket_spectrum(
    matchings: list[Matching],
    restrict_to: Iterable[int] | None = None,
    ancilla_condition: Mapping[int, int] | None = None,
    vertices: Iterable[int] | None = None,
) -> KetSpectrum:
    """Sum matching amplitudes per ket, after optional post-selection and projection.

    Matchings that give an ancilla a mode other than the one required by
    ``ancilla_condition`` are discarded; surviving kets are projected onto
    ``restrict_to`` (ascending vertex order).
    """
    if vertices is None:
        vertices = [v for v, _ in matchings[0].assignment] if matchings else []
    all_vertices = tuple(sorted(vertices))
    known = set(all_vertices)
    condition = dict(ancilla_condition or {})
    if matchings or known:
        bad = sorted(set(condition) - known)
        if bad:
            raise ValidationError(f"ancilla condition references non-vertices {bad}")
    if restrict_to is None:
        keep = all_vertices
    else:
        keep = tuple(sorted(set(restrict_to)))
        bad = sorted(set(keep) - known)
        if bad and (matchings or known):
            raise ValidationError(f"restriction references non-vertices {bad}")

    sums: dict[str, float] = {}
    count = 0
    for mt in matchings:
        modes = mt.modes()
        if any(modes[v] != want for v, want in condition.items()):
            continue
        count += 1
        ket = _ket(modes[v] for v in keep)
        sums[ket] = sums.get(ket, 0.0) + mt.amplitude
    return KetSpectrum(
        entries=dict(sorted(sums.items())),
        matching_count=count,
        vertices=keep,
        ancilla_condition=tuple(sorted(condition.items())),
    )


def describe_convention(spectrum: KetSpectrum) -> str:
    projected = ",".join(str(v) for v in spectrum.vertices) or "-"
    if spectrum.ancilla_condition:
        cond = ", ".join(f"{v}->{m}" for v, m in spectrum.ancilla_condition)
        return f"projected onto vertices [{projected}]; ancilla modes post-selected ({cond})"
    return f"projected onto vertices [{projected}]; ancilla modes unconstrained"


def verify_target(spectrum: KetSpectrum, target: TargetState, tol: float = REACHABLE_TOL) -> VerificationReport:
    """Mark each target ket reachable if its summed amplitude is non-zero."""
    if spectrum.entries and spectrum.width != target.party_count:
        raise ValidationError(
            f"spectrum kets cover {spectrum.width} vertices but target kets have {target.party_count} parties"
        )
    amplitudes = {k: spectrum.entries.get(k, 0.0) for k in target.kets}
    reachable = {k: abs(a) > tol and math.isfinite(a) for k, a in amplitudes.items()}
    targets = set(target.kets)
    extraneous = {k: a for k, a in spectrum.entries.items() if k not in targets and abs(a) > tol}
    return VerificationReport(
        reachable=reachable,
        amplitudes=amplitudes,
        extraneous=extraneous,
        convention=describe_convention(spectrum),
        matching_count=spectrum.matching_count,
    )
