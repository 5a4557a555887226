"""
Scoring predictions and comparing techniques
============================================

Metrics score one technique; paired signed-rank tests decide whether one
technique's errors are smaller than the other's.
"""
import numpy as np

from vizbench import metrics as M
from vizbench import stats as S

rng = np.random.default_rng(0)
truth = rng.integers(10, 31, 250)
good = np.clip(truth + rng.integers(-1, 2, 250), 0, None)     # off by at most one
poor = np.clip(truth + rng.integers(-6, 7, 250), 0, None)

for name in ("mse", "accuracy", "percent10", "delta10"):
    print(f"{name:9s} good {M.score(name, truth, good):8.3f}   poor {M.score(name, truth, poor):8.3f}")
print("R2 good %.3f poor %.3f (learned above %.1f)" % (M.r2(truth, good), M.r2(truth, poor), M.LEARNED_THRESHOLD))
print("MCC good %.3f" % M.mcc(truth, good))

ids = [f"i{k}" for k in range(250)]
a = M.PredictionSet(ids, truth, poor, technique="NL")
b = M.PredictionSet(ids, truth, good, technique="AM")
c = M.compare_techniques(a, b)
print(f"mean |err| NL {c.mean_abs_diff_a:.3f}, AM {c.mean_abs_diff_b:.3f}, p = {c.p_value:.2e}, winner {c.winner}")

# small samples use the exact null distribution
w = S.wilcoxon_signed_rank([1.5, 2.0, -0.5, 3.0, 2.5, 4.0])
print("exact signed-rank:", w.method, "W+ =", w.statistic, "p =", round(w.p_value, 4))

# Kruskal-Wallis on two fully separated groups
k = S.kruskal_wallis([(1, 2, 3), (4, 5, 6)])
print("Kruskal-Wallis H = %.4f, p = %.4f" % (k.H, k.p_value))
