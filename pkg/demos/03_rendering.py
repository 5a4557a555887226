"""
Rendering node-link diagrams and adjacency matrices
===================================================

Both techniques rasterize to 8-bit grayscale PGM images with a small,
fixed palette of luminance levels.
"""
import sys
import tempfile
from pathlib import Path

from vizbench.graph import generate_random_graph
from vizbench.layout import gem_layout, louvain_partition, ordering_from_partition
from vizbench.render import EXPERIMENT1, EXPERIMENT2, RenderConfig, read_pgm, render_adjacency_matrix, \
    render_node_link, write_pgm

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp(prefix="vizbench-demo-"))
out.mkdir(parents=True, exist_ok=True)

g = generate_random_graph(20, 0.2, seed=7)
pos = gem_layout(g, seed=7)
order = ordering_from_partition(g, louvain_partition(g, seed=7))

nl = render_node_link(g, pos, EXPERIMENT1)
am = render_adjacency_matrix(g, order, EXPERIMENT1)
print("NL levels:", sorted(nl.levels()), " AM levels:", sorted(am.levels()))

# the second preset adds a highlight level for a node pair
pair = g.edges[0]
am_hl = render_adjacency_matrix(g, order, EXPERIMENT2, highlights=pair)
print("highlighted AM levels:", sorted(am_hl.levels()))

# a smaller custom size, as used for quick experiments
small = RenderConfig(size=64, grid_lines=True)
for name, img in [("nl", nl), ("am", am), ("am_hl", am_hl),
                  ("am_64", render_adjacency_matrix(g, order, small))]:
    path = out / f"{name}.pgm"
    write_pgm(img, path)
    assert read_pgm(path).pixels.tobytes() == img.pixels.tobytes()
    print("wrote", path, img.pixels.shape)
