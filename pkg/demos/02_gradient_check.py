"""
Checking the analytic gradients against central differences
============================================================
"""

import numpy as np

from aucsweep import (MarginConfig, PredictionBatch, functional_square_loss,
                      functional_squared_hinge_loss, logistic_loss)

rng = np.random.default_rng(7)
n = 40
preds = rng.normal(size=n)
labels = np.where(rng.uniform(size=n) < 0.4, 1, -1)
cfg = MarginConfig(margin=1.0)

losses = {
    "square": lambda x, grad=False: functional_square_loss(
        PredictionBatch(x, labels), cfg, want_gradient=grad),
    "squared hinge": lambda x, grad=False: functional_squared_hinge_loss(
        PredictionBatch(x, labels), cfg, want_gradient=grad),
    "logistic": lambda x, grad=False: logistic_loss(
        PredictionBatch(x, labels), want_gradient=grad),
}

step = 1e-5
for name, fn in losses.items():
    analytic = fn(preds, grad=True).gradient
    # central difference, one coordinate at a time
    numeric = np.empty(n)
    for i in range(n):
        bumped = preds.copy()
        bumped[i] += step
        up = fn(bumped).value
        bumped[i] -= 2 * step
        down = fn(bumped).value
        numeric[i] = (up - down) / (2 * step)
    worst = np.max(np.abs(analytic - numeric) / np.maximum(1.0, np.abs(numeric)))
    print(f"{name:>14}: max rel deviation from finite differences {worst:.2e}")
