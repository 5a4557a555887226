"""
The experiment pipeline end to end
==================================

The same stages the ``vizbench`` command runs: generate graphs, render,
build the dataset, train, evaluate, compare and report. A tiny config keeps
this to a few seconds.
"""
import json
import sys
import tempfile
from pathlib import Path

from vizbench.harness.cli import main

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp(prefix="vizbench-demo-"))
out.mkdir(parents=True, exist_ok=True)

config = out / "tiny.toml"
config.write_text("""\
name = "tiny"
seed = 5
tasks = ["T0"]
techniques = ["NL", "AM"]

[corpus]
kind = "counting"
node_min = 10
node_max = 14
densities = [0.2, 0.4]
train_val_graphs = 60
validation_fraction = 0.25
test_graphs = 20

[render]
size = 32
grid_lines = false

[train]
epochs = 3
batch_size = 8
precision = "float64"

[[architectures]]
name = "lenet"
kind = "lenet"
fc_widths = [16, 8]
""")

# same as: vizbench run --config tiny.toml --out <dir>/run
run = out / "run"
assert main(["run", "--config", str(config), "--out", str(run), "-q"]) == 0
# three epochs on 60 graphs is far too little to learn counting; the
# report will say so (R2 below the learned threshold, no winner declared)
report = json.loads((run / "report.json").read_text())
for cell in report["cells"]:
    print(cell["task"], cell["technique"], "R2 =", None if cell["r2"] is None else round(cell["r2"], 3))
for row in report["comparisons"]:
    print(row["metric"], "p =", round(row["p_value"], 4), "winner:", row["winner_technique"])

# a second call with --resume finds every stage up to date
assert main(["run", "--config", str(config), "--out", str(run), "--resume", "-q"]) == 0
print("report:", run / "report.md")
