"""Ranking quality metrics and the per-example logistic baseline."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import expit
from scipy.stats import rankdata

from .batch import LossOutput, PredictionBatch


@dataclass(frozen=True)
class AucResult:
    auc: float
    n_pos: int
    n_neg: int


def roc_auc(batch: PredictionBatch) -> AucResult:
    """Exact ROC-AUC with half credit for tied scores.

    Computed in O(n log n) from the rank-sum identity: with average ranks
    r_i over the pooled scores,

        AUC = (sum of positive ranks - n_pos*(n_pos+1)/2) / (n_pos * n_neg),

    which equals the fraction of (positive, negative) pairs ranked
    correctly, counting ties as 1/2.

    Raises
    ------
    ValueError
        If the batch lacks positives or negatives; AUC is undefined there
        and silently returning 0.5 would mask protocol bugs.
    """
    if batch.n_pos == 0 or batch.n_neg == 0:
        raise ValueError(
            f"AUC undefined: need both classes, got {batch.n_pos} positives "
            f"and {batch.n_neg} negatives"
        )
    ranks = rankdata(batch.predictions, method="average")
    rank_sum = float(ranks[batch.pos_mask].sum())
    u_stat = rank_sum - batch.n_pos * (batch.n_pos + 1) / 2.0
    return AucResult(u_stat / (batch.n_pos * batch.n_neg), batch.n_pos, batch.n_neg)


def logistic_loss(batch: PredictionBatch, want_gradient: bool = False) -> LossOutput:
    """Sum of log(1 + exp(-y_i * yhat_i)) with overflow-safe evaluation.

    Uses logaddexp(0, -y*yhat), so a score of -100 on a positive costs
    ~100.0 instead of overflowing. The gradient is -y_i * sigmoid(-y_i *
    yhat_i), elementwise. Every example contributes one term, hence
    ``pair_count`` reports n rather than a pair count.
    """
    t = -(batch.labels * batch.predictions)
    value = float(np.logaddexp(0.0, t).sum())
    grad = None
    if want_gradient:
        grad = -batch.labels * expit(t)
    return LossOutput(value, grad, batch.n)
