"""Mode and coupling analysis, optical strategy selection and complexity grading."""

from __future__ import annotations

from dataclasses import dataclass

from .ingest import NetworkConfig, NetworkGraph
from .roles import RoleAssignment

SINGLE_PHOTON = "single_photon"
SPDC_HERALDED = "spdc_heralded"
ADAPTIVE = "adaptive"

SIMPLE, MODERATE, COMPLEX = "simple", "moderate", "complex"

PERFECT_TOL = 1e-9
WEAK_MAX = 0.2


@dataclass(frozen=True)
class ComplexityTable:
    """One point per exceeded threshold; the sum picks the grade."""

    max_vertices: int = 6
    max_modes: int = 2
    max_ancillas: int = 0
    max_edges: int = 12
    moderate_at: int = 2
    complex_at: int = 3


DEFAULT_COMPLEXITY = ComplexityTable()


@dataclass(frozen=True)
class ModeAnalysis:
    unique_modes: tuple[int, ...]
    mixed_mode_edges: int
    weight_extremes: tuple[float, float] | None
    perfect_correlations: int
    negative_edges: int
    magnitude_levels: tuple[float, ...]
    strength_bins: dict[str, int]


@dataclass(frozen=True)
class StrategyPlan:
    strategy: str
    complexity: str
    heralding_required: bool

    def __post_init__(self) -> None:
        if self.strategy == SPDC_HERALDED and not self.heralding_required:
            raise ValueError("spdc_heralded strategy always requires heralding")


def strength_bin(weight: float) -> str:
    mag = abs(weight)
    if abs(mag - 1.0) <= PERFECT_TOL:
        return "perfect"
    if mag <= WEAK_MAX:
        return "weak"
    return "intermediate"


def analyze_modes(g: NetworkGraph) -> ModeAnalysis:
    modes = sorted({m for e in g.edges for m in (e.mode1, e.mode2)})
    mags = [abs(e.weight) for e in g.edges]
    bins = {"perfect": 0, "intermediate": 0, "weak": 0}
    for e in g.edges:
        bins[strength_bin(e.weight)] += 1
    return ModeAnalysis(
        unique_modes=tuple(modes),
        mixed_mode_edges=sum(1 for e in g.edges if e.is_mixed_mode),
        weight_extremes=(min(mags), max(mags)) if mags else None,
        perfect_correlations=bins["perfect"],
        negative_edges=sum(1 for e in g.edges if e.weight < 0),
        magnitude_levels=tuple(sorted({round(m, 9) for m in mags})),
        strength_bins=bins,
    )


def select_strategy(c: NetworkConfig, r: RoleAssignment | None = None) -> str:
    if c.single_emitters:
        return SINGLE_PHOTON
    if c.out_nodes and c.anc_detectors:
        return SPDC_HERALDED
    return ADAPTIVE


def complexity_score(g: NetworkGraph, m: ModeAnalysis, r: RoleAssignment, table: ComplexityTable = DEFAULT_COMPLEXITY) -> int:
    return (
        int(len(g.vertices) > table.max_vertices)
        + int(len(m.unique_modes) > table.max_modes)
        + int(len(r.ancillas) > table.max_ancillas)
        + int(len(g.edges) > table.max_edges)
    )


def assess_complexity(g: NetworkGraph, m: ModeAnalysis, r: RoleAssignment, table: ComplexityTable = DEFAULT_COMPLEXITY) -> str:
    score = complexity_score(g, m, r, table)
    if score >= table.complex_at:
        return COMPLEX
    if score >= table.moderate_at:
        return MODERATE
    return SIMPLE


def plan_strategy(g: NetworkGraph, c: NetworkConfig, m: ModeAnalysis, r: RoleAssignment) -> StrategyPlan:
    strategy = select_strategy(c, r)
    return StrategyPlan(
        strategy=strategy,
        complexity=assess_complexity(g, m, r),
        heralding_required=strategy == SPDC_HERALDED or bool(r.ancillas),
    )
