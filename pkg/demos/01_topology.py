"""Topology and motifs of the three bundled networks."""

from qnetinterp import compute_metrics, data, load_graph
from qnetinterp.topology import count_motifs

for name in data.NETWORKS:
    g = load_graph(data.graph_path(name))
    m = compute_metrics(g)
    print(f"{name}: {m.vertex_count} vertices, {m.edge_count} edges")
    print(f"  density {m.density:.4f}, mean degree {m.mean_degree:.4f}, clustering {m.clustering:.4f}")
    print(f"  diameter {m.diameter}, bipartite {m.is_bipartite}")
    print(f"  triangles {m.triangles}, squares {m.squares}, stars {m.stars}")
