"""Role assignment and implementation strategy, with and without a config."""

from qnetinterp import NetworkConfig, analyze, data, load_bundle

for name in data.NETWORKS:
    config, graph = load_bundle(data.config_path(name), data.graph_path(name))
    res = analyze(config, graph, verify=False)
    r = res.roles
    print(f"{name}: {res.plan.strategy} ({res.plan.complexity})")
    print(f"  sources {sorted(r.sources)}  detectors {sorted(r.detectors)}")
    print(f"  beam splitters {sorted(r.beam_splitters)}  ancillas {sorted(r.ancillas)}")
    for w in res.warnings:
        print(f"  warning: {w}")

# graph alone: every role comes from the degree heuristics
_, graph = load_bundle(data.config_path("w4"), data.graph_path("w4"))
res = analyze(NetworkConfig(), graph, verify=False)
print("w4 without config:", res.plan.strategy, res.roles.tier)
