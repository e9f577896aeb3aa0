"""Core containers shared by every loss and metric routine.

A batch pairs real-valued predictions with binary labels in {-1, +1}.
All loss functions in this package consume :class:`PredictionBatch` and a
:class:`MarginConfig` and emit a :class:`LossOutput`, so the quadratic
reference implementations and the fast ones are interchangeable in tests
and in the trainer.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np


class Normalization(Enum):
    """How a summed loss is scaled before being reported.

    TOTAL_OVER_PAIRS reports the raw sum over all loss terms.
    MEAN_OVER_PAIRS divides by the number of summed terms (positive/negative
    pairs for the ranking losses, examples for the logistic loss), which
    keeps gradient magnitudes comparable across batch sizes during SGD.
    """

    TOTAL_OVER_PAIRS = "total"
    MEAN_OVER_PAIRS = "mean-pairs"


@dataclass(frozen=True)
class MarginConfig:
    """Margin and normalization settings for the pairwise ranking losses.

    Parameters
    ----------
    margin:
        Non-negative margin m. A positive/negative pair is fully satisfied
        once the positive scores at least ``margin`` above the negative.
    normalization:
        See :class:`Normalization`. Defaults to the raw total.
    """

    margin: float = 1.0
    normalization: Normalization = Normalization.TOTAL_OVER_PAIRS

    def __post_init__(self) -> None:
        m = float(self.margin)
        if not np.isfinite(m) or m < 0.0:
            raise ValueError(f"margin must be finite and >= 0, got {self.margin!r}")
        object.__setattr__(self, "margin", m)


class PredictionBatch:
    """Immutable-by-convention pair of prediction and label vectors.

    Parameters
    ----------
    predictions:
        Real-valued scores, any shape-(n,) array-like. Stored as float64.
        NaN or infinite scores are rejected here so that downstream code
        never has to re-check.
    labels:
        Shape-(n,) array-like of -1 / +1 integers.

    Notes
    -----
    ``n == 0`` and single-class batches are legal; the pairwise losses
    define them as zero loss with zero gradient.
    """

    __slots__ = ("predictions", "labels", "pos_mask", "neg_mask", "n_pos", "n_neg")

    def __init__(self, predictions, labels) -> None:
        preds = np.asarray(predictions, dtype=np.float64)
        labs = np.asarray(labels)
        if preds.ndim != 1 or labs.ndim != 1:
            raise ValueError("predictions and labels must be one-dimensional")
        if preds.shape[0] != labs.shape[0]:
            raise ValueError(
                f"length mismatch: {preds.shape[0]} predictions vs {labs.shape[0]} labels"
            )
        if preds.size and not np.isfinite(preds).all():
            raise ValueError("predictions must be finite (no NaN or Inf)")
        if labs.dtype.kind == "f":
            if labs.size and not np.isfinite(labs).all():
                raise ValueError("labels must be finite")
            rounded = labs.astype(np.int64)
            if labs.size and not np.array_equal(rounded, labs):
                raise ValueError("labels must be -1 or +1")
            labs = rounded
        else:
            labs = labs.astype(np.int64)
        if labs.size and not np.isin(labs, (-1, 1)).all():
            raise ValueError("labels must be -1 or +1")

        self.predictions = preds
        self.labels = labs
        self.pos_mask = labs == 1
        self.neg_mask = ~self.pos_mask
        self.n_pos = int(self.pos_mask.sum())
        self.n_neg = labs.size - self.n_pos

    @property
    def n(self) -> int:
        return self.predictions.size

    @property
    def pair_count(self) -> int:
        """Number of positive/negative pairs, n_pos * n_neg."""
        return self.n_pos * self.n_neg

    def positive_predictions(self) -> np.ndarray:
        return self.predictions[self.pos_mask]

    def negative_predictions(self) -> np.ndarray:
        return self.predictions[self.neg_mask]

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"PredictionBatch(n={self.n}, n_pos={self.n_pos}, n_neg={self.n_neg})"


@dataclass(frozen=True)
class LossOutput:
    """Value (and optionally gradient) of a loss over one batch.

    ``pair_count`` is the number of summed loss terms: n_pos * n_neg for the
    pairwise ranking losses, n for the per-example logistic loss. When
    ``pair_count`` is zero the value is zero and the gradient (if requested)
    is identically zero.
    """

    value: float
    gradient: np.ndarray | None
    pair_count: int
