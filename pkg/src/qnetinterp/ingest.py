"""Parsing and normalization of PyTheus graph and configuration documents.

Three graph shapes are accepted and normalized to one internal form:

* an object mapping stringified 4-tuples ``"(v1, v2, m1, m2)"`` to weights,
  optionally nested under a ``"graph"`` key (the native PyTheus output);
* an array of 5-element arrays ``[v1, v2, m1, m2, w]``;
* an array of 2-element arrays ``[v1, v2]`` (modes 0, weight 1.0).

Every source may be given as a file path or as an already-decoded value, so
file, in-memory and mixed input modes all go through the same code.
"""

from __future__ import annotations

import json
import math
import os
import re
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Any, Iterable, Mapping

from .errors import FormatError, InputIOError, ParseError, ValidationError

_TUPLE_KEY = re.compile(r"^\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)$")

CONFIG_KEYS = ("single_emitters", "out_nodes", "anc_detectors", "target_state", "amplitudes", "name")


@dataclass(frozen=True, order=True)
class Edge:
    """One weighted, mode-colored connection between two vertices.

    Instances are always canonical: ``v1 < v2``, with the modes travelling
    with their endpoints. Build them through :meth:`make`.
    """

    v1: int
    v2: int
    mode1: int
    mode2: int
    weight: float = field(compare=False)

    @classmethod
    def make(cls, v1: int, v2: int, mode1: int = 0, mode2: int = 0, weight: float = 1.0) -> "Edge":
        for label, value in (("v1", v1), ("v2", v2), ("mode1", mode1), ("mode2", mode2)):
            if isinstance(value, bool) or not isinstance(value, int):
                raise FormatError(f"edge field {label} must be an integer, got {value!r}")
            if value < 0:
                raise FormatError(f"edge field {label} must be non-negative, got {value}")
        weight = _check_weight(weight, (v1, v2, mode1, mode2))
        if v1 == v2:
            raise ValidationError(f"self-loop on vertex {v1} is not allowed")
        if v1 > v2:
            v1, v2, mode1, mode2 = v2, v1, mode2, mode1
        return cls(v1, v2, mode1, mode2, weight)

    @property
    def key(self) -> tuple[int, int, int, int]:
        return (self.v1, self.v2, self.mode1, self.mode2)

    @property
    def pair(self) -> tuple[int, int]:
        return (self.v1, self.v2)

    @property
    def is_mixed_mode(self) -> bool:
        return self.mode1 != self.mode2

    def mode_at(self, vertex: int) -> int:
        if vertex == self.v1:
            return self.mode1
        if vertex == self.v2:
            return self.mode2
        raise KeyError(vertex)

    def other(self, vertex: int) -> int:
        if vertex == self.v1:
            return self.v2
        if vertex == self.v2:
            return self.v1
        raise KeyError(vertex)


@dataclass(frozen=True)
class NetworkGraph:
    """Edge-colored weighted multigraph.

    ``edges`` is sorted by ``(v1, v2, mode1, mode2)``; ``vertices`` is the
    sorted union of edge endpoints. Parallel edges are allowed as long as
    their mode pairs differ. ``warnings`` records non-fatal ingest events
    such as dropped zero-weight edges.
    """

    edges: tuple[Edge, ...] = ()
    warnings: tuple[str, ...] = ()
    vertices: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        edges = tuple(sorted(self.edges))
        seen: set[tuple[int, int, int, int]] = set()
        for e in edges:
            if e.key in seen:
                raise ValidationError(f"duplicate edge {_format_key(e.key)}")
            seen.add(e.key)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "warnings", tuple(self.warnings))
        object.__setattr__(self, "vertices", tuple(sorted({v for e in edges for v in e.pair})))

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def is_empty(self) -> bool:
        return not self.edges

    def incident(self, vertex: int) -> list[int]:
        """Indices into ``edges`` of every edge touching ``vertex``."""
        return [i for i, e in enumerate(self.edges) if vertex in e.pair]


@dataclass(frozen=True)
class NetworkConfig:
    """Role declarations and target state taken from a PyTheus config.

    Absent keys stay ``None``; nothing is defaulted here. Unrecognized keys
    are kept verbatim in ``extra``.
    """

    single_emitters: tuple[int, ...] | None = None
    out_nodes: tuple[int, ...] | None = None
    anc_detectors: tuple[int, ...] | None = None
    target_state: tuple[str, ...] | None = None
    amplitudes: tuple[float, ...] | None = None
    name: str | None = None
    extra: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "extra", MappingProxyType(dict(self.extra)))
        kets = self.target_state
        if kets:
            lengths = {len(k) for k in kets}
            if len(lengths) != 1:
                raise ValidationError(f"target_state kets have unequal lengths {sorted(lengths)}")
            for k in kets:
                if not k or not k.isdigit() or not k.isascii():
                    raise ValidationError(f"ket {k!r} must be a non-empty string of digits 0-9")
        if self.amplitudes:
            n_kets = len(kets) if kets else 0
            if len(self.amplitudes) != n_kets:
                raise ValidationError(
                    f"amplitudes has {len(self.amplitudes)} entries but target_state has {n_kets} kets"
                )

    def declared_vertices(self) -> set[int]:
        out: set[int] = set()
        for ids in (self.single_emitters, self.out_nodes, self.anc_detectors):
            if ids:
                out.update(ids)
        return out

    def to_data(self) -> dict[str, Any]:
        data: dict[str, Any] = dict(self.extra)
        for key in CONFIG_KEYS:
            value = getattr(self, key)
            if value is not None:
                data[key] = list(value) if isinstance(value, tuple) else value
        return data


def _format_key(key: tuple[int, int, int, int]) -> str:
    return "(" + ", ".join(str(k) for k in key) + ")"


def _check_weight(weight: Any, where: tuple) -> float:
    if isinstance(weight, bool):
        raise FormatError(f"edge {where}: weight must be a real number, got {weight!r}")
    if isinstance(weight, (complex, list, tuple, dict, str)):
        raise FormatError(
            f"edge {where}: complex-valued or non-numeric weight {weight!r} is not supported; "
            "only real weights are accepted"
        )
    if not isinstance(weight, (int, float)):
        raise FormatError(f"edge {where}: weight must be a real number, got {weight!r}")
    weight = float(weight)
    if not math.isfinite(weight):
        raise ValidationError(f"edge {where}: weight must be finite, got {weight}")
    return weight


def _reject_duplicate_keys(pairs: list[tuple[str, Any]]) -> dict[str, Any]:
    out: dict[str, Any] = {}
    for key, value in pairs:
        if key in out:
            raise ValidationError(f"duplicate edge {key}")
        out[key] = value
    return out


def _decode(raw: str | bytes, what: str, strict_keys: bool = False) -> Any:
    if isinstance(raw, bytes):
        try:
            raw = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"{what} is not valid UTF-8: {exc}") from None
    try:
        return json.loads(raw, object_pairs_hook=_reject_duplicate_keys if strict_keys else None)
    except json.JSONDecodeError as exc:
        lines = exc.doc.splitlines()
        context = lines[exc.lineno - 1] if 0 < exc.lineno <= len(lines) else ""
        raise ParseError(
            f"malformed {what} JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}\n"
            f"    {context}"
        ) from None


def _raw_edges(data: Any) -> Iterable[tuple[tuple, Any]]:
    """Yield ``((v1, v2, m1, m2), weight)`` for each entry of any accepted shape."""
    if isinstance(data, Mapping):
        if "graph" in data:
            data = data["graph"]
            if not isinstance(data, (Mapping, list)):
                raise FormatError("'graph' entry must be an object or an array of edges")
            yield from _raw_edges(data)
            return
        for key, weight in data.items():
            if isinstance(key, tuple):
                fields = key
                if len(fields) != 4:
                    raise FormatError(f"edge key {key!r} must have 4 fields (v1, v2, mode1, mode2)")
            else:
                match = _TUPLE_KEY.match(str(key).strip())
                if match is None:
                    raise FormatError(
                        f"edge key {key!r} is not of the form '(v1, v2, mode1, mode2)' with integer fields"
                    )
                fields = tuple(int(x) for x in match.groups())
            yield fields, weight
        return
    if isinstance(data, (list, tuple)):
        for item in data:
            if not isinstance(item, (list, tuple)):
                raise FormatError(f"edge entry {item!r} must be an array")
            if len(item) == 5:
                yield tuple(item[:4]), item[4]
            elif len(item) == 2:
                yield (item[0], item[1], 0, 0), 1.0
            else:
                raise FormatError(
                    f"edge entry {list(item)!r} has {len(item)} fields; expected 2 [v1, v2] "
                    "or 5 [v1, v2, mode1, mode2, weight]"
                )
        return
    raise FormatError(f"graph document must be an object or an array, got {type(data).__name__}")


def graph_from_data(data: Any) -> NetworkGraph:
    """Build a :class:`NetworkGraph` from an already-decoded JSON value."""
    if isinstance(data, NetworkGraph):
        return data
    edges: list[Edge] = []
    warnings: list[str] = []
    for fields, weight in _raw_edges(data):
        edge = Edge.make(*fields, weight=weight)
        if edge.weight == 0.0:
            warnings.append(f"dropped zero-weight edge {_format_key(edge.key)}")
            continue
        edges.append(edge)
    return NetworkGraph(tuple(edges), tuple(warnings))


def parse_graph(raw: str | bytes) -> NetworkGraph:
    """Parse the UTF-8 text of a graph document."""
    return graph_from_data(_decode(raw, "graph", strict_keys=True))


def _id_list(data: Mapping[str, Any], key: str) -> tuple[int, ...] | None:
    if key not in data or data[key] is None:
        return None
    value = data[key]
    if not isinstance(value, (list, tuple)):
        raise FormatError(f"config key {key!r} must be an array of vertex ids")
    for v in value:
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise FormatError(f"config key {key!r} contains invalid vertex id {v!r}")
    return tuple(value)


def config_from_data(data: Any) -> NetworkConfig:
    """Build a :class:`NetworkConfig` from an already-decoded JSON object."""
    if isinstance(data, NetworkConfig):
        return data
    if data is None:
        return NetworkConfig()
    if not isinstance(data, Mapping):
        raise FormatError(f"config document must be an object, got {type(data).__name__}")

    kets = data.get("target_state")
    if kets is not None:
        if not isinstance(kets, (list, tuple)) or not all(isinstance(k, str) for k in kets):
            raise FormatError("config key 'target_state' must be an array of ket strings")
        kets = tuple(kets)

    amps = data.get("amplitudes")
    if amps is not None:
        if not isinstance(amps, (list, tuple)):
            raise FormatError("config key 'amplitudes' must be an array of real numbers")
        amps = tuple(_check_weight(a, ("amplitude",)) for a in amps)

    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise FormatError("config key 'name' must be a string")

    return NetworkConfig(
        single_emitters=_id_list(data, "single_emitters"),
        out_nodes=_id_list(data, "out_nodes"),
        anc_detectors=_id_list(data, "anc_detectors"),
        target_state=kets,
        amplitudes=amps,
        name=name,
        extra={k: v for k, v in data.items() if k not in CONFIG_KEYS},
    )


def parse_config(raw: str | bytes) -> NetworkConfig:
    """Parse the UTF-8 text of a config document."""
    return config_from_data(_decode(raw, "config"))


def validate_config_against_graph(config: NetworkConfig, graph: NetworkGraph) -> None:
    """Raise :class:`ValidationError` if the config names vertices the graph lacks."""
    missing = sorted(config.declared_vertices() - set(graph.vertices))
    if missing:
        raise ValidationError(f"config references vertices absent from the graph: {missing}")


def _read(path: str | os.PathLike) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        reason = exc.strerror if isinstance(exc, OSError) and exc.strerror else str(exc)
        raise InputIOError(path, f"cannot read file ({reason})") from None


def load_graph(source: Any) -> NetworkGraph:
    """Load a graph from a path or from an in-memory value."""
    if isinstance(source, (str, os.PathLike)):
        return parse_graph(_read(source))
    return graph_from_data(source)


def load_config(source: Any) -> NetworkConfig:
    """Load a config from a path, an in-memory value, or ``None`` (empty config)."""
    if isinstance(source, (str, os.PathLike)):
        return parse_config(_read(source))
    return config_from_data(source)


def load_bundle(config_source: Any = None, graph_source: Any = None) -> tuple[NetworkConfig, NetworkGraph]:
    """Resolve config and graph sources independently, then cross-validate them.

    Either source may be a path or an in-memory value; mixing the two is
    fine. A missing config yields an empty :class:`NetworkConfig`.
    """
    if graph_source is None:
        raise ValueError("a graph source is required")
    graph = load_graph(graph_source)
    config = load_config(config_source)
    validate_config_against_graph(config, graph)
    return config, graph


def graph_to_data(graph: NetworkGraph, shape: str = "mapping") -> Any:
    """Serialize a graph to one of the accepted JSON shapes.

    ``shape`` is ``"mapping"`` (stringified tuple keys nested under
    ``graph``), ``"flat"`` (the same mapping without nesting) or ``"list"``
    (5-element arrays).
    """
    if shape in ("mapping", "flat"):
        inner = {_format_key(e.key): e.weight for e in graph.edges}
        return {"graph": inner} if shape == "mapping" else inner
    if shape == "list":
        return [[e.v1, e.v2, e.mode1, e.mode2, e.weight] for e in graph.edges]
    raise ValueError(f"unknown graph shape {shape!r}")


def graph_to_json(graph: NetworkGraph, shape: str = "mapping") -> str:
    return json.dumps(graph_to_data(graph, shape), indent=2)
