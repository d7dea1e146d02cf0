"""Interpret PyTheus quantum-network graphs.

Load an edge-colored weighted multigraph, measure its topology, assign
physical roles (sources, detectors, beam splitters, ancillas), pick an
implementation strategy, check the target state against the graph's perfect
matchings, and draw both the abstract graph and an optical-table schematic.

>>> from qnetinterp import data, load_bundle, analyze
>>> config, graph = load_bundle(data.config_path("w4"), data.graph_path("w4"))
>>> analyze(config, graph).plan.strategy
'single_photon'
"""

from .errors import (
    FormatError,
    InputIOError,
    InterpreterError,
    MatchingDomainError,
    ParseError,
    ResourceLimitError,
    ValidationError,
)
from .ingest import (
    Edge,
    NetworkConfig,
    NetworkGraph,
    graph_from_data,
    graph_to_json,
    load_bundle,
    load_config,
    load_graph,
    parse_config,
    parse_graph,
)
from .matcher import enumerate_matchings, ket_spectrum, verify_target
from .render import render_native_graph, render_optical_table, serialize_svg
from .report import AnalysisResult, analyze, generate_report, run_complete_analysis
from .roles import RoleAssignment, identify_roles
from .statespec import analyze_state, check_compatibility, classify_entanglement
from .strategy import analyze_modes, assess_complexity, plan_strategy, select_strategy
from .topology import TopologyMetrics, compute_metrics

__version__ = "0.1.0"

__all__ = [
    "AnalysisResult",
    "Edge",
    "FormatError",
    "InputIOError",
    "InterpreterError",
    "MatchingDomainError",
    "NetworkConfig",
    "NetworkGraph",
    "ParseError",
    "ResourceLimitError",
    "RoleAssignment",
    "TopologyMetrics",
    "ValidationError",
    "analyze",
    "analyze_modes",
    "analyze_state",
    "assess_complexity",
    "check_compatibility",
    "classify_entanglement",
    "compute_metrics",
    "enumerate_matchings",
    "generate_report",
    "graph_from_data",
    "graph_to_json",
    "identify_roles",
    "ket_spectrum",
    "load_bundle",
    "load_config",
    "load_graph",
    "parse_config",
    "parse_graph",
    "plan_strategy",
    "render_native_graph",
    "render_optical_table",
    "run_complete_analysis",
    "select_strategy",
    "serialize_svg",
    "verify_target",
]
