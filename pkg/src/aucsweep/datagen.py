"""Synthetic imbalanced data with a known optimal ranking direction.

Features are drawn from two spherical Gaussians on opposite sides of the
origin, so linear separability is controlled by one scalar and the best
achievable AUC has a closed form, which makes end-to-end training results
checkable against an analytic target.

Randomness comes from ``numpy.random.default_rng`` (the PCG64 generator),
so identical seeds and parameters reproduce identical datasets bit for bit
across runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.stats import norm


@dataclass
class Dataset:
    """Feature matrix with -1/+1 labels and provenance metadata.

    ``provenance`` records how the rows came to be: generator parameters
    for fresh draws, and for splits the parent's metadata plus the
    ``source_indices`` of each row in the parent dataset (used to assert
    split disjointness).
    """

    features: np.ndarray
    labels: np.ndarray
    provenance: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.features = np.asarray(self.features, dtype=np.float64)
        self.labels = np.asarray(self.labels, dtype=np.int64)
        if self.features.ndim != 2:
            raise ValueError("features must be a 2-D array")
        if self.labels.shape != (self.features.shape[0],):
            raise ValueError("labels must be one per feature row")

    @property
    def n(self) -> int:
        return self.features.shape[0]

    @property
    def n_pos(self) -> int:
        return int((self.labels == 1).sum())

    @property
    def n_neg(self) -> int:
        return int((self.labels == -1).sum())


@dataclass(frozen=True)
class SplitSpec:
    """Controls for carving one balanced dataset into protocol splits.

    ``imratio`` is the positive-class fraction targeted in the train pool
    by discarding positives (negatives are never removed). The balanced
    test split is reserved first so imbalancing cannot contaminate it.
    ``test_fraction`` sets its share of the full dataset and
    ``subtrain_fraction`` the share of the remaining train pool that goes
    to subtrain rather than validation, stratified by class.
    """

    imratio: float
    subtrain_fraction: float = 0.8
    test_fraction: float = 0.2
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0.0 < self.imratio <= 0.5:
            raise ValueError(f"imratio must be in (0, 0.5], got {self.imratio}")
        if not 0.0 < self.subtrain_fraction < 1.0:
            raise ValueError("subtrain_fraction must be in (0, 1)")
        if not 0.0 < self.test_fraction < 1.0:
            raise ValueError("test_fraction must be in (0, 1)")


def generate_gaussian_mixture(n: int, p: int, class_separation: float,
                              seed: int = 0) -> Dataset:
    """Balanced two-Gaussian dataset with tunable difficulty.

    Positives are N(+mu * 1, I_p), negatives N(-mu * 1, I_p) with
    mu = class_separation / (2 * sqrt(p)); the class means then sit exactly
    ``class_separation`` apart in Euclidean distance regardless of p.
    Rows are shuffled so label order carries no information.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    if p < 1:
        raise ValueError("need p >= 1")
    if class_separation < 0:
        raise ValueError("class_separation must be >= 0")
    rng = np.random.default_rng(seed)
    n_pos = n // 2
    labels = np.concatenate([np.ones(n_pos, dtype=np.int64),
                             -np.ones(n - n_pos, dtype=np.int64)])
    mu = class_separation / (2.0 * math.sqrt(p))
    features = rng.standard_normal((n, p)) + mu * labels[:, None]
    perm = rng.permutation(n)
    return Dataset(
        features[perm], labels[perm],
        provenance={"generator": "gaussian_mixture", "n": n, "p": p,
                    "class_separation": class_separation, "seed": seed},
    )


def bayes_auc(class_separation: float) -> float:
    """Best achievable AUC for the mixture above.

    Along the oracle direction (the all-ones vector, normalized), scores of
    the two classes are unit-variance Gaussians whose means differ by
    ``class_separation``, so the probability a positive outranks a negative
    is Phi(class_separation / sqrt(2)).
    """
    return float(norm.cdf(class_separation / math.sqrt(2.0)))


def _take(data: Dataset, indices: np.ndarray, split: str, spec: SplitSpec) -> Dataset:
    return Dataset(
        data.features[indices], data.labels[indices],
        provenance={"parent": data.provenance, "split": split,
                    "source_indices": np.array(indices),
                    "imratio": spec.imratio, "seed": spec.seed},
    )


def apply_imbalance_and_split(data: Dataset, spec: SplitSpec
                              ) -> tuple[Dataset, Dataset, Dataset]:
    """Reserve a balanced test set, imbalance the rest, split it stratified.

    Procedure, deterministic given ``spec.seed``:

    1. shuffle each class's row indices;
    2. reserve round(n * test_fraction / 2) rows per class as the balanced
       test split;
    3. keep every remaining negative and only
       round(imratio * n_neg / (1 - imratio)) positives, so the realized
       train ratio lands within one example of ``imratio``;
    4. split the train pool subtrain/validation by ``subtrain_fraction``
       within each class, preserving the imbalance on both sides.

    Returns ``(subtrain, validation, test)``. Raises ValueError when the
    requested ratio needs more positives than remain, or rounds to zero.
    """
    rng = np.random.default_rng(spec.seed)
    pos_idx = rng.permutation(np.flatnonzero(data.labels == 1))
    neg_idx = rng.permutation(np.flatnonzero(data.labels == -1))

    per_class_test = int(round(data.n * spec.test_fraction / 2.0))
    if per_class_test < 1:
        raise ValueError("test_fraction too small: empty test split")
    if per_class_test > min(pos_idx.size, neg_idx.size):
        raise ValueError("test_fraction too large for the available classes")
    test_idx = np.concatenate([pos_idx[:per_class_test], neg_idx[:per_class_test]])
    pos_pool = pos_idx[per_class_test:]
    neg_pool = neg_idx[per_class_test:]

    n_keep_pos = int(round(spec.imratio * neg_pool.size / (1.0 - spec.imratio)))
    if n_keep_pos < 1:
        raise ValueError(f"imratio {spec.imratio} rounds to zero positives")
    if n_keep_pos > pos_pool.size:
        raise ValueError(
            f"imratio {spec.imratio} needs {n_keep_pos} positives, "
            f"only {pos_pool.size} available after the test reservation"
        )
    pos_pool = pos_pool[:n_keep_pos]

    n_sub_pos = int(round(spec.subtrain_fraction * pos_pool.size))
    n_sub_neg = int(round(spec.subtrain_fraction * neg_pool.size))
    sub_idx = np.concatenate([pos_pool[:n_sub_pos], neg_pool[:n_sub_neg]])
    val_idx = np.concatenate([pos_pool[n_sub_pos:], neg_pool[n_sub_neg:]])

    subtrain = _take(data, rng.permutation(sub_idx), "subtrain", spec)
    validation = _take(data, rng.permutation(val_idx), "validation", spec)
    test = _take(data, rng.permutation(test_idx), "test", spec)
    return subtrain, validation, test
