"""Shared reference implementations, written before the library code.

Everything here is deliberately literal: explicit Python loops over pairs,
no shared code with the package under test. These are the ground truth the
fast implementations must reproduce.
"""

from __future__ import annotations

import numpy as np
import pytest


def pairwise_reference(predictions, labels, margin, hinge):
    """Value and gradient of the all-pairs loss by literal double loop."""
    predictions = [float(v) for v in predictions]
    labels = [int(v) for v in labels]
    value = 0.0
    grad = [0.0] * len(predictions)
    for j, (pj, yj) in enumerate(zip(predictions, labels)):
        if yj != 1:
            continue
        for k, (pk, yk) in enumerate(zip(predictions, labels)):
            if yk != -1:
                continue
            t = margin - pj + pk
            if hinge and not t > 0.0:
                continue
            value += t * t
            grad[j] += -2.0 * t
            grad[k] += 2.0 * t
    return value, np.array(grad)


def auc_reference(predictions, labels):
    """AUC by counting pairs, half credit for ties. Returns None if undefined."""
    pos = [float(p) for p, y in zip(predictions, labels) if y == 1]
    neg = [float(p) for p, y in zip(predictions, labels) if y == -1]
    if not pos or not neg:
        return None
    credit = 0.0
    for pj in pos:
        for pk in neg:
            if pj > pk:
                credit += 1.0
            elif pj == pk:
                credit += 0.5
    return credit / (len(pos) * len(neg))


def central_difference(f, x, step=1e-5):
    """Central finite-difference gradient of a scalar function of a vector."""
    x = np.asarray(x, dtype=np.float64)
    grad = np.zeros_like(x)
    for i in range(x.size):
        hi = x.copy()
        lo = x.copy()
        hi[i] += step
        lo[i] -= step
        grad[i] = (f(hi) - f(lo)) / (2.0 * step)
    return grad


def random_labels(rng, n, pos_fraction=None):
    """Labels with a random imbalance; single-class outcomes are allowed."""
    if pos_fraction is None:
        pos_fraction = rng.uniform(0.0, 1.0)
    return np.where(rng.uniform(size=n) < pos_fraction, 1, -1).astype(np.int64)


def rel_err(got, want, floor=1.0):
    got = np.asarray(got, dtype=np.float64)
    want = np.asarray(want, dtype=np.float64)
    denom = np.maximum(floor, np.abs(want))
    return float(np.max(np.abs(got - want) / denom)) if got.size else 0.0


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
