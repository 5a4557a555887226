"""
Random graphs and their ground truths
=====================================

Generate a seeded random graph, read off the three counting quantities,
and look at shortest-path lengths between node pairs.
"""
import sys
import tempfile
from pathlib import Path

import numpy as np

from vizbench.graph import (all_pairs_distances, edge_count, enumerate_pairs_by_spl, generate_random_graph,
                            load_edge_list, max_degree, node_count, save_edge_list, small_world_graph,
                            spl_census, target_edge_count)

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp(prefix="vizbench-demo-"))
out.mkdir(parents=True, exist_ok=True)

# the edge count follows from node count and density: round(d^2 n^2 / 2)
for n, d in [(20, 0.2), (50, 0.4), (100, 0.6)]:
    print(f"n={n:3d} d={d}: {target_edge_count(n, d)} edges")

# a graph is fully determined by (n, d, seed)
g = generate_random_graph(25, 0.3, seed=11)
print("nodes", node_count(g), "edges", edge_count(g), "max degree", max_degree(g))

# hop distances by BFS from every node; -1 marks unreachable pairs
D = all_pairs_distances(g)
print("diameter of the largest component:", int(D.max()))
print("unreachable pairs:", int((D < 0).sum() // 2))

# the shortest-path task picks node pairs at a given distance
sw = small_world_graph(40, 2, 0.1, seed=3)
print("pairs per length:", spl_census(sw, (2, 3, 4)))
print("three pairs at distance 3:", enumerate_pairs_by_spl(sw, 3, cap=3, seed=0))

# edge-list files round-trip
path = out / "g25.txt"
save_edge_list(g, path)
back = load_edge_list(path)
assert back == g and np.array_equal(all_pairs_distances(back), D)
print("wrote", path)
