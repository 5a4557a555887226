"""
Training a small CNN from scratch
=================================

A LeNet-style network learns to tell a blank adjacency matrix from a
complete one. Gradients are analytic; a finite-difference check confirms
them on a small batch.
"""
import numpy as np

from vizbench.graph import Graph
from vizbench.nn import ImageSet, TrainConfig, build_lenet, init_params, loss_and_grads, predict_all, train
from vizbench.render import RenderConfig, render_adjacency_matrix

cfg = RenderConfig(size=32, grid_lines=False)
images, labels = [], []
for n in range(3, 30):
    blank = Graph(n, ())
    full = Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))
    for g, label in ((blank, 0), (full, 1)):
        images.append(render_adjacency_matrix(g, np.arange(n), cfg).pixels)
        labels.append(label)
data = ImageSet([f"s{i}" for i in range(len(labels))], labels, images=np.stack(images))

spec = build_lenet(32, 2, (32, 16))
print(spec.name, "with", spec.structural_layer_count(), "layers besides activations")

# central differences agree with backprop on one weight tensor
params = init_params(spec, 0)
x, y = data.batch(np.arange(4)), data.labels[:4]
_, grads = loss_and_grads(spec, params, x, y)
w = params["L0.w"]
i = (0, 0, 2, 2)
h = 1e-6
w[i] += h
up = loss_and_grads(spec, params, x, y)[0]
w[i] -= 2 * h
down = loss_and_grads(spec, params, x, y)[0]
w[i] += h
print("d loss / d w: analytic %.6e, numeric %.6e" % (grads["L0.w"][i], (up - down) / (2 * h)))

result = train(spec, data, TrainConfig(epochs=5, batch_size=8, seed=0, precision="float64"))
for e, loss in enumerate(result.losses, 1):
    print(f"epoch {e}: loss {loss:.4f}")
print("training accuracy:", predict_all(result.checkpoints[-1], data).score("accuracy"))
