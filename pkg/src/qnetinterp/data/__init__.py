"""Bundled PyTheus example networks.

``w4``, ``bell`` and ``ghz346`` ship a graph and a config; ``qkd5`` ships a
config only, because its graph file is not distributed with PyTheus.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

NETWORKS = ("w4", "bell", "ghz346")


def path(name: str) -> Path:
    """Filesystem path of a bundled file, e.g. ``path("w4_graph.json")``."""
    ref = resources.files(__name__) / name
    if not ref.is_file():
        raise FileNotFoundError(f"no bundled data file named {name!r}")
    return Path(str(ref))


def graph_path(network: str) -> Path:
    return path(f"{network}_graph.json")


def config_path(network: str) -> Path:
    return path(f"{network}_config.json")
