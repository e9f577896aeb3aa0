"""
ROC-AUC as a pair-ordering probability
======================================

AUC is the probability that a random positive outscores a random
negative, with ties worth half. The rank-sum formula computes it in
O(n log n); here we check it against direct pair counting.
"""

import numpy as np

from aucsweep import PredictionBatch, roc_auc

# hand-checkable case: 4 ordered pairs win, 2 lose -> 4/6
batch = PredictionBatch([0.9, 0.8, 0.4, 0.7, 0.1], [1, -1, 1, -1, -1])
print(f"AUC = {roc_auc(batch).auc}")

# count pairs directly to see where the number comes from
pos = batch.positive_predictions()
neg = batch.negative_predictions()
wins = (pos[:, None] > neg[None, :]).sum()
ties = (pos[:, None] == neg[None, :]).sum()
print(f"pairs: {wins} wins + {ties} ties of {pos.size * neg.size} "
      f"-> {(wins + 0.5 * ties) / (pos.size * neg.size)}")

# ties get half credit, exactly
tied = PredictionBatch([1.0, 1.0, 0.0, 0.0], [1, -1, 1, -1])
print(f"with ties: {roc_auc(tied).auc}")

# AUC only looks at the ordering, so monotone rescaling changes nothing
rng = np.random.default_rng(1)
scores = rng.normal(size=500)
labels = np.where(rng.uniform(size=500) < 0.3, 1, -1)
a = roc_auc(PredictionBatch(scores, labels)).auc
b = roc_auc(PredictionBatch(np.tanh(3.0 * scores) * 100.0, labels)).auc
print(f"raw scores {a:.6f} == squashed scores {b:.6f}")

# degenerate inputs are rejected rather than guessed at
try:
    roc_auc(PredictionBatch([0.2, 0.4], [1, 1]))
except ValueError as exc:
    print(f"single-class batch: {exc}")
