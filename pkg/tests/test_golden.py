"""Byte-for-byte regression against blessed outputs in tests/golden/.

The golden files are this implementation's own output, reviewed once and
committed. To regenerate after an intentional drawing or report change:

    QNETINTERP_BLESS=1 pytest tests/test_golden.py
"""

import os
from pathlib import Path

import pytest

from helpers import bundle
from qnetinterp import data
from qnetinterp.render import render_native_graph, render_optical_table, serialize_svg
from qnetinterp.report import analyze, generate_report

GOLDEN = Path(__file__).parent / "golden"
BLESS = os.environ.get("QNETINTERP_BLESS") == "1"


def outputs(network):
    c, g = bundle(network)
    res = analyze(c, g)
    return {
        f"{network}_native.svg": serialize_svg(render_native_graph(g)),
        f"{network}_optical_table.svg": serialize_svg(render_optical_table(g, res.roles, res.plan)),
        f"{network}_report.txt": generate_report(res, network),
    }


@pytest.mark.parametrize("network", data.NETWORKS)
def test_matches_golden(network):
    for name, text in outputs(network).items():
        path = GOLDEN / name
        if BLESS:
            path.write_text(text, encoding="utf-8", newline="\n")
            continue
        assert path.exists(), f"missing golden file {name}; run with QNETINTERP_BLESS=1 to create it"
        assert path.read_text(encoding="utf-8") == text, f"{name} differs from the blessed output"
