"""
Node-link layout and matrix ordering
====================================

GEM force-directed layout positions the nodes of a node-link drawing;
Louvain communities decide the row order of an adjacency matrix.
"""
import numpy as np

from vizbench.graph import Graph, generate_random_graph
from vizbench.layout import gem_layout, louvain_partition, modularity, ordering_from_partition, singleton_partition

# two 5-cliques joined by one edge: the textbook community example
edges = [(i, j) for b in (0, 5) for i in range(b, b + 5) for j in range(i + 1, b + 5)] + [(4, 5)]
g = Graph(10, tuple(edges))

part = louvain_partition(g, seed=0)
print("communities:", part.tolist())
print("modularity: %.3f (singletons %.3f)" % (modularity(g, part), modularity(g, singleton_partition(10))))

# matrix order: community by community, then by node id
print("ordering:", ordering_from_partition(g, part).tolist())

# GEM settles edges near the desired length (128 by default)
pos = gem_layout(g, seed=0)
lengths = [np.linalg.norm(pos[u] - pos[v]) for u, v in g.edges]
print("edge length mean %.1f, min %.1f, max %.1f" % (np.mean(lengths), min(lengths), max(lengths)))

# same seed, same layout
r = generate_random_graph(30, 0.2, seed=5)
assert np.array_equal(gem_layout(r, seed=1), gem_layout(r, seed=1))
print("layout of a 30-node graph spans", np.ptp(gem_layout(r, seed=1), axis=0).round(1))
