"""
Pairwise ranking losses two ways: brute force and sort-and-sweep
================================================================

The square and squared hinge losses below sum one term per
(positive, negative) pair, so the obvious implementation costs
n_pos * n_neg work. The functional versions collapse that sum into
per-example quadratics and cost O(n) / O(n log n). Same numbers,
different algorithms.
"""

import numpy as np

from aucsweep import (MarginConfig, PredictionBatch, functional_square_loss,
                      functional_squared_hinge_loss, naive_square_loss,
                      naive_squared_hinge_loss)

# a tiny scored batch: labels are +1 / -1
batch = PredictionBatch(predictions=[2.1, 0.3, 1.4, -0.8, 0.9],
                        labels=[1, -1, 1, -1, -1])
cfg = MarginConfig(margin=1.0)

print(f"{batch.n_pos} positives x {batch.n_neg} negatives "
      f"= {batch.pair_count} pairs")

for name, naive, fast in [
    ("square", naive_square_loss, functional_square_loss),
    ("squared hinge", naive_squared_hinge_loss, functional_squared_hinge_loss),
]:
    slow = naive(batch, cfg)
    quick = fast(batch, cfg)
    print(f"{name:>14}: naive {slow.value:.12f}  functional {quick.value:.12f}")

# the hinge only charges pairs the model has not yet separated by the
# margin, so it is never larger than the square loss
rng = np.random.default_rng(0)
n = 5000
wide = PredictionBatch(rng.normal(size=n),
                       np.where(rng.uniform(size=n) < 0.2, 1, -1))
sq = functional_square_loss(wide, cfg).value
hi = functional_squared_hinge_loss(wide, cfg).value
print(f"\nn={n}: square {sq:.1f} >= squared hinge {hi:.1f}")

# raising the margin demands more separation and raises both losses
for margin in [0.0, 0.5, 1.0, 2.0]:
    value = functional_squared_hinge_loss(wide, MarginConfig(margin)).value
    print(f"margin {margin:3.1f} -> squared hinge {value:12.1f}")
