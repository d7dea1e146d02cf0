"""Pipeline orchestration and the plain-text analysis report.

One :class:`AnalysisResult` feeds all three outputs (native graph SVG,
optical-table SVG, text report), so they can never disagree about roles or
metrics.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Mapping

from .errors import InputIOError, MatchingDomainError, ResourceLimitError, ValidationError
from .ingest import NetworkConfig, NetworkGraph, load_bundle
from .matcher import DEFAULT_VERTEX_CAP, VerificationReport, enumerate_matchings, ket_spectrum, verify_target
from .render import render_native_graph, render_optical_table, serialize_svg
from .roles import RoleAssignment, identify_roles
from .statespec import Finding, StateAnalysis, analyze_state, check_compatibility
from .strategy import ModeAnalysis, StrategyPlan, analyze_modes, plan_strategy
from .topology import TopologyMetrics, compute_metrics

OUTPUTS = ("native", "optical", "report", "verify")

SECTIONS = ("HEADER", "TOPOLOGY", "MOTIFS", "ROLES", "MODES", "STRATEGY", "STATE", "VERIFICATION", "WARNINGS")


@dataclass(frozen=True)
class AnalysisResult:
    graph: NetworkGraph
    config: NetworkConfig
    metrics: TopologyMetrics
    roles: RoleAssignment
    modes: ModeAnalysis
    plan: StrategyPlan
    state: StateAnalysis | None = None
    findings: tuple[Finding, ...] = ()
    verification: VerificationReport | None = None
    warnings: tuple[str, ...] = field(default_factory=tuple)


def _role_tension(metrics: TopologyMetrics, roles: RoleAssignment) -> list[str]:
    hub = metrics.hub
    if hub is None or not roles.beam_splitters or hub in roles.beam_splitters:
        return []
    deg = metrics.vertex_degrees[hub]
    if sum(1 for d in metrics.vertex_degrees.values() if d == deg) > 1:
        return []
    return [
        f"highest-degree vertex {hub} (degree {deg}) has no beam-splitter role; "
        f"beam splitters are {_ids(roles.beam_splitters)}"
    ]


def analyze(
    config: NetworkConfig,
    graph: NetworkGraph,
    *,
    verify: bool = True,
    matcher_cap: int = DEFAULT_VERTEX_CAP,
    ancilla_condition: Mapping[int, int] | None = None,
) -> AnalysisResult:
    """Run every analysis stage once on an already-loaded bundle."""
    metrics = compute_metrics(graph)
    roles = identify_roles(graph, config, metrics)
    modes = analyze_modes(graph)
    plan = plan_strategy(graph, config, modes, roles)
    state = analyze_state(config)
    warnings = list(graph.warnings) + list(roles.notes) + _role_tension(metrics, roles)

    findings: tuple[Finding, ...] = ()
    verification = None
    if state is not None and not graph.is_empty:
        findings = tuple(check_compatibility(state, roles, graph, plan.heralding_required))
        if verify:
            verification = _verify(graph, roles, state, matcher_cap, ancilla_condition, warnings)
    return AnalysisResult(
        graph=graph,
        config=config,
        metrics=metrics,
        roles=roles,
        modes=modes,
        plan=plan,
        state=state,
        findings=findings,
        verification=verification,
        warnings=tuple(warnings),
    )


def _verify(graph, roles, state, cap, condition, warnings) -> VerificationReport | None:
    parties = sorted(roles.parties)
    if len(parties) != state.party_count:
        warnings.append(
            f"verification skipped: {len(parties)} non-ancilla detectors but target kets have {state.party_count} parties"
        )
        return None
    try:
        matchings = enumerate_matchings(graph, cap)
        spectrum = ket_spectrum(matchings, restrict_to=parties, ancilla_condition=condition, vertices=graph.vertices)
        return verify_target(spectrum, state.target)
    except (MatchingDomainError, ResourceLimitError, ValidationError, ValueError) as exc:
        warnings.append(f"verification skipped: {exc}")
        return None


def _fmt(x: float) -> str:
    s = f"{x:.4f}"
    return "0.0000" if s == "-0.0000" else s


def _ids(vertices: Iterable[int]) -> str:
    items = sorted(vertices)
    return ", ".join(str(v) for v in items) if items else "(none)"


def _flag(b: bool) -> str:
    return "true" if b else "false"


def generate_report(result: AnalysisResult, name: str) -> str:
    """Render the fixed-order ``key: value`` text report."""
    g, m, r = result.graph, result.metrics, result.roles
    empty = g.is_empty
    out: list[str] = []

    def section(title: str) -> None:
        out.append(f"== {title} ==")

    section("HEADER")
    out.append(f"name: {name}")
    out.append(f"vertices: {m.vertex_count}")
    out.append(f"edges: {m.edge_count}")
    out.append(f"vertex_ids: {_ids(g.vertices)}")

    section("TOPOLOGY")
    out.append(f"density: {_fmt(m.density)}")
    out.append(f"mean_degree: {_fmt(m.mean_degree)}")
    out.append(f"clustering: {_fmt(m.clustering)}")
    out.append(f"diameter: {m.diameter if m.diameter is not None else 'none'}")
    out.append(f"components: {m.component_count}")
    out.append(f"simple_pairs: {m.pair_count}")
    out.append(f"bipartite: {_flag(m.is_bipartite)}")
    out.append(f"tree: {_flag(m.is_tree)}")
    for v in g.vertices:
        out.append(f"degree[{v}]: {m.vertex_degrees[v]}")

    section("MOTIFS")
    if empty:
        out.append("status: empty")
    else:
        out.append(f"triangles: {m.triangles}")
        out.append(f"squares: {m.squares}")
        out.append(f"stars: {m.stars}")

    section("ROLES")
    if empty:
        out.append("status: empty")
    else:
        out.append(f"tier: {r.tier}")
        out.append(f"sources: {_ids(r.sources)}")
        out.append(f"detectors: {_ids(r.detectors)}")
        out.append(f"beam_splitters: {_ids(r.beam_splitters)}")
        out.append(f"ancillas: {_ids(r.ancillas)}")
        out.append(f"dual_role: {_ids(r.dual_role)}")
        for v, roles in r.provenance.items():
            out.append(f"role[{v}]: " + ", ".join(f"{role}={tier}" for role, tier in roles.items()))

    section("MODES")
    mo = result.modes
    if empty:
        out.append("status: empty")
    else:
        out.append(f"unique_modes: {_ids(mo.unique_modes)}")
        out.append(f"mixed_mode_edges: {mo.mixed_mode_edges}")
        out.append(f"min_abs_weight: {_fmt(mo.weight_extremes[0])}")
        out.append(f"max_abs_weight: {_fmt(mo.weight_extremes[1])}")
        out.append("magnitude_levels: " + ", ".join(_fmt(x) for x in mo.magnitude_levels))
        out.append(f"perfect_correlations: {mo.perfect_correlations}")
        out.append(f"intermediate_couplings: {mo.strength_bins['intermediate']}")
        out.append(f"weak_couplings: {mo.strength_bins['weak']}")
        out.append(f"negative_edges: {mo.negative_edges}")

    section("STRATEGY")
    if empty:
        out.append("status: empty")
    else:
        out.append(f"strategy: {result.plan.strategy}")
        out.append(f"complexity: {result.plan.complexity}")
        out.append(f"heralding_required: {_flag(result.plan.heralding_required)}")

    section("STATE")
    s = result.state
    if s is None:
        out.append("status: unavailable")
    else:
        out.append("status: available")
        out.append(f"class: {s.entanglement_class}")
        out.append(f"kets: {s.ket_count}")
        out.append(f"parties: {s.party_count}")
        out.append(f"dimension: {s.dimension}")
        out.append(f"photon_numbers: {_ids(s.photon_numbers)}")
        uniform = s.uniform_photon_number
        out.append(f"uniform_photon_number: {uniform if uniform is not None else 'none'}")
        for ket, c in zip(s.target.kets, s.target.coefficients):
            out.append(f"coefficient[{ket}]: {_fmt(c)}")
        for f in result.findings:
            out.append(f"check[{f.check}]: {f.status} ({f.message})")

    section("VERIFICATION")
    ver = result.verification
    if ver is None:
        out.append("status: unavailable")
    else:
        out.append("status: available")
        out.append(f"convention: {ver.convention}")
        out.append(f"matchings: {ver.matching_count}")
        for ket, ok in ver.reachable.items():
            out.append(f"ket[{ket}]: {'reachable' if ok else 'unreachable'} {_fmt(ver.amplitudes[ket])}")
        for ket, amp in ver.extraneous.items():
            out.append(f"extraneous[{ket}]: {_fmt(amp)}")
        out.append(f"all_reachable: {_flag(ver.all_reachable)}")

    section("WARNINGS")
    out.append(f"count: {len(result.warnings)}")
    for w in result.warnings:
        out.append(f"warning: {w}")
    return "\n".join(out) + "\n"


def parse_report(text: str) -> dict[str, dict[str, str]]:
    """Split a report back into ``{section: {key: value}}`` (repeated keys keep the last value)."""
    sections: dict[str, dict[str, str]] = {}
    current = None
    for line in text.splitlines():
        if line.startswith("== ") and line.endswith(" =="):
            current = sections.setdefault(line[3:-3], {})
        elif current is not None and ": " in line:
            key, value = line.split(": ", 1)
            current[key] = value
    return sections


def output_paths(prefix: str, output_dir: str | os.PathLike) -> dict[str, Path]:
    base = Path(output_dir)
    return {
        "native": base / f"{prefix}_native.svg",
        "optical": base / f"{prefix}_optical_table.svg",
        "report": base / f"{prefix}_report.txt",
    }


def _write(path: Path, text: str) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise InputIOError(path, f"cannot write file ({exc.strerror or exc})") from None


def run_complete_analysis(
    config_source: Any,
    graph_source: Any,
    output_prefix: str,
    output_dir: str | os.PathLike = ".",
    *,
    emit: Iterable[str] = OUTPUTS,
    matcher_cap: int = DEFAULT_VERTEX_CAP,
    ancilla_condition: Mapping[int, int] | None = None,
) -> AnalysisResult:
    """Load, analyse once, and write the requested outputs.

    With the default ``emit`` this writes ``<prefix>_native.svg``,
    ``<prefix>_optical_table.svg`` and ``<prefix>_report.txt`` into
    ``output_dir``, all derived from the returned result.
    """
    emit = set(emit)
    unknown = emit - set(OUTPUTS)
    if unknown:
        raise ValueError(f"unknown outputs {sorted(unknown)}; choose from {OUTPUTS}")
    config, graph = load_bundle(config_source, graph_source)
    result = analyze(config, graph, verify="verify" in emit, matcher_cap=matcher_cap, ancilla_condition=ancilla_condition)
    paths = output_paths(output_prefix, output_dir)
    if "native" in emit:
        _write(paths["native"], serialize_svg(render_native_graph(graph)))
    if "optical" in emit:
        _write(paths["optical"], serialize_svg(render_optical_table(graph, result.roles, result.plan)))
    if "report" in emit:
        _write(paths["report"], generate_report(result, config.name or output_prefix))
    return result
