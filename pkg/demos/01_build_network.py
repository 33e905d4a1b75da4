# Building the weighted fractal tree
# ==================================
#
# The network grows by replacing every edge (u, v) with a path u-w-v and
# hanging one leaf on each endpoint.  The weight parameter theta sets how
# strongly a hub prefers stepping outward to a fresh leaf.
from recipwalk import NetworkConfig, build_weighted, out_strength
from recipwalk.export import arcs_csv

net = build_weighted(NetworkConfig(g=1, theta=2.0))
print("generation 1, theta = 2")
print(arcs_csv(net))

# Node counts quadruple each generation: N_g = 4**g + 1.
for g in range(6):
    n = build_weighted(NetworkConfig(g, 2.0))
    print(f"g={g}: {n.n_nodes:5d} nodes, {len(n.undirected_edges):5d} edges")

# Out-strength grows by (theta + 1) per generation; internal nodes start at 2.
for g in range(1, 5):
    n = build_weighted(NetworkConfig(g, 2.0))
    print(f"g={g}: s(2)={out_strength(n, 2):6g}  s(1)={out_strength(n, 1):6g}")
