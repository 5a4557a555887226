"""
Building a labelled image corpus
================================

A corpus pairs each graph with one image per technique and one ground
truth per task, split into train/validation/test.
"""
import sys
import tempfile
from collections import Counter
from pathlib import Path

from vizbench import dataset as ds
from vizbench.render import RenderConfig

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp(prefix="vizbench-demo-"))

# the full counting corpus is large; the arithmetic alone is cheap
combos, _ = ds.feasible_combinations(range(20, 101), (0.2, 0.4, 0.6))
print("full-scale combinations:", len(combos), "-> graphs:", len(combos) * 100 + 2700)

cfg = ds.CountingCorpusConfig(node_counts=tuple(range(10, 16)), densities=(0.2, 0.4), instances=4,
                              test_graphs=12, seed=1)
corpus = ds.build_counting_corpus(cfg)
print("graphs:", len(corpus.graphs), "samples:", len(corpus.manifest))
print("per split:", Counter(s.split for s in corpus.manifest.select(task="T0", technique="NL")))

# node counts are balanced by construction; edge counts and degrees are not
for task in ("T0", "T1", "T2"):
    a = ds.audit_distribution(corpus.manifest, "train", task, technique="NL")
    print(f"{task} ({ds.TASK_NAMES[task]}): {len(a.counts)} classes, deviation {a.max_abs_deviation}, "
          f"uniform {a.uniform}")

# images, layouts and orderings land next to the manifest
ds.write_graphs(corpus.graphs, out)
ds.materialize_images(corpus, out, {"NL": RenderConfig(size=64), "AM": RenderConfig(size=64)})
ds.write_manifest(corpus.manifest, out / "manifest.jsonl")
again = ds.read_manifest(out / "manifest.jsonl")
print("manifest round-trip:", len(again) == len(corpus.manifest), "->", out)
