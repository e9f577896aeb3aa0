"""Minibatch SGD for a linear scorer under the pairwise or logistic losses.

The protocol mirrors common practice for heavily imbalanced ranking tasks:
train on the imbalanced subtrain split, track validation AUC every epoch,
select the epoch that maximizes it, and report test AUC at that epoch.
Because epoch metrics use the sub-quadratic losses and the rank-based AUC,
full-dataset evaluation every epoch stays cheap.

Divergence (non-finite scores, loss, or parameters, e.g. from an oversized
learning rate) is an expected outcome of a grid search, so it is recorded
on the run instead of raising.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field

import numpy as np

from .batch import MarginConfig, Normalization, PredictionBatch
from .datagen import Dataset
from .losses import LossKind, loss_dispatch
from .metrics import roc_auc


@dataclass
class LinearModel:
    weights: np.ndarray
    bias: float

    def scores(self, features: np.ndarray) -> np.ndarray:
        return features @ self.weights + self.bias


@dataclass(frozen=True)
class TrainConfig:
    loss_kind: LossKind
    margin: float = 1.0
    normalization: Normalization = Normalization.TOTAL_OVER_PAIRS
    batch_size: int = 100
    learning_rate: float = 0.01
    epochs: int = 20
    seed: int = 0

    def __post_init__(self) -> None:
        if self.batch_size < 1:
            raise ValueError("batch_size must be >= 1")
        if not self.learning_rate > 0:
            raise ValueError("learning_rate must be > 0")
        if self.epochs < 1:
            raise ValueError("epochs must be >= 1")

    def margin_config(self) -> MarginConfig:
        return MarginConfig(self.margin, self.normalization)


@dataclass(frozen=True)
class EpochRecord:
    epoch: int
    subtrain_loss: float
    subtrain_auc: float
    valid_auc: float


@dataclass
class TrainRun:
    """Everything observed while training one configuration.

    ``selected_epoch`` is the earliest epoch attaining the maximum
    validation AUC (None when the run diverged before completing any
    epoch), ``test_auc`` the test AUC of the model snapshot at that epoch
    (NaN when unavailable), and ``model`` that snapshot itself.
    """

    config: TrainConfig
    records: list[EpochRecord] = field(default_factory=list)
    selected_epoch: int | None = None
    test_auc: float = math.nan
    diverged: bool = False
    model: LinearModel | None = None


def _dataset_auc(model_w: np.ndarray, model_b: float, data: Dataset) -> float:
    scores = data.features @ model_w + model_b
    return roc_auc(PredictionBatch(scores, data.labels)).auc


def sgd_train(subtrain: Dataset, validation: Dataset, test: Dataset,
              config: TrainConfig) -> TrainRun:
    """Train a linear model from zero initialization; deterministic by seed.

    Each epoch shuffles the subtrain rows with the run's own generator,
    steps through consecutive minibatches (the last one may be short), and
    then logs subtrain loss, subtrain AUC, and validation AUC on the full
    splits. A single-class minibatch contributes a zero gradient under the
    pairwise losses, so it leaves the model untouched by construction.
    """
    rng = np.random.default_rng(config.seed)
    cfg = config.margin_config()
    features, labels = subtrain.features, subtrain.labels
    n, p = features.shape
    w = np.zeros(p)
    b = 0.0
    run = TrainRun(config=config)
    best_val = -math.inf

    # Oversized learning rates overflow scores to inf by design; the checks
    # below turn that into run.diverged, so the IEEE warnings are noise here.
    with np.errstate(over="ignore", invalid="ignore"):
        for epoch in range(1, config.epochs + 1):
            perm = rng.permutation(n)
            for start in range(0, n, config.batch_size):
                rows = perm[start:start + config.batch_size]
                x_mb = features[rows]
                scores = x_mb @ w + b
                if not np.isfinite(scores).all():
                    run.diverged = True
                    break
                out = loss_dispatch(config.loss_kind,
                                    PredictionBatch(scores, labels[rows]),
                                    cfg, want_gradient=True)
                if not np.isfinite(out.value) or not np.isfinite(out.gradient).all():
                    run.diverged = True
                    break
                w -= config.learning_rate * (x_mb.T @ out.gradient)
                b -= config.learning_rate * float(out.gradient.sum())
            if not run.diverged and not (np.isfinite(w).all() and np.isfinite(b)):
                run.diverged = True
            if run.diverged:
                break

            sub_scores = features @ w + b
            if not np.isfinite(sub_scores).all():
                run.diverged = True
                break
            sub_out = loss_dispatch(config.loss_kind,
                                    PredictionBatch(sub_scores, labels), cfg)
            if not np.isfinite(sub_out.value):
                run.diverged = True
                break
            sub_auc = roc_auc(PredictionBatch(sub_scores, labels)).auc
            val_auc = _dataset_auc(w, b, validation)
            run.records.append(EpochRecord(epoch, sub_out.value, sub_auc, val_auc))
            if val_auc > best_val:
                best_val = val_auc
                run.selected_epoch = epoch
                run.model = LinearModel(w.copy(), b)

    if run.model is not None:
        run.test_auc = _dataset_auc(run.model.weights, run.model.bias, test)
    return run


def grid_search(subtrain: Dataset, validation: Dataset, test: Dataset,
                batch_sizes: list[int], learning_rates: list[float],
                base_config: TrainConfig) -> tuple[TrainRun, list[TrainRun]]:
    """Train every (batch_size, learning_rate) cell and pick the best run.

    Cells run in the given order with identical seeds, so the search is
    reproducible. The winner maximizes validation AUC at its selected
    epoch; exact ties keep the earliest cell. Raises RuntimeError when
    every run diverged before logging a single epoch.
    """
    if not batch_sizes or not learning_rates:
        raise ValueError("grid must contain at least one batch size and learning rate")
    runs: list[TrainRun] = []
    best: TrainRun | None = None
    best_val = -math.inf
    for bs in batch_sizes:
        for lr in learning_rates:
            config = TrainConfig(
                loss_kind=base_config.loss_kind, margin=base_config.margin,
                normalization=base_config.normalization, batch_size=bs,
                learning_rate=lr, epochs=base_config.epochs, seed=base_config.seed,
            )
            run = sgd_train(subtrain, validation, test, config)
            runs.append(run)
            if run.selected_epoch is not None:
                val = run.records[run.selected_epoch - 1].valid_auc
                if val > best_val:
                    best_val = val
                    best = run
    if best is None:
        raise RuntimeError(
            "every grid cell diverged before completing an epoch; "
            "no model can be selected"
        )
    return best, runs


def write_run_table(runs: list[TrainRun], path: str) -> None:
    """One CSV row per (run, epoch); divergent epoch-less runs log epoch 0.

    Columns: loss_kind, batch_size, learning_rate, epoch, subtrain_loss,
    subtrain_auc, valid_auc, diverged.
    """
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["loss_kind", "batch_size", "learning_rate", "epoch",
                         "subtrain_loss", "subtrain_auc", "valid_auc", "diverged"])
        for run in runs:
            base = [run.config.loss_kind.value, run.config.batch_size,
                    repr(run.config.learning_rate)]
            if not run.records:
                writer.writerow(base + [0, "nan", "nan", "nan", run.diverged])
            for rec in run.records:
                writer.writerow(base + [rec.epoch, repr(rec.subtrain_loss),
                                        repr(rec.subtrain_auc), repr(rec.valid_auc),
                                        run.diverged])
