"""Write both drawings and the text report for every bundled network."""

import sys
from pathlib import Path

from qnetinterp import data, run_complete_analysis

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("demo_output")
for name in data.NETWORKS:
    res = run_complete_analysis(data.config_path(name), data.graph_path(name), name, out)
    print(f"{name}: {res.plan.strategy}, verification {'ok' if res.verification.all_reachable else 'FAILED'}")
print("files:", ", ".join(sorted(p.name for p in out.iterdir())))
