"""All-pairs ranking losses over positive/negative prediction pairs.

Given predictions yhat and labels y in {-1, +1}, the losses here sum a
margin penalty over every (positive, negative) pair:

    L = sum_{j: y_j=+1} sum_{k: y_k=-1} ell(yhat_j - yhat_k)

with ell(z) = (m - z)^2 for the square loss and ell(z) = max(0, m - z)^2
for the squared hinge. Minimizing either pushes positives above negatives,
so both act as differentiable surrogates for ROC-AUC.

Two implementations are provided per loss. The ``naive_*`` functions
enumerate all n_pos * n_neg pairs and exist as the reference oracle; they
are deliberately never optimized beyond chunked vectorization and keep
Theta(n_pos * n_neg) work. The ``functional_*`` versions exploit that each
positive example contributes a quadratic in the negative's score, so the
whole inner sum collapses into one accumulated quadratic:

* square loss: every pair is active, so a single coefficient triple serves
  all negatives and the loss is a plain O(n) reduction, no sorting;
* squared hinge: a pair is active only while yhat_j - yhat_k < m, so after
  sorting margin-augmented scores once, a prefix sweep maintains exactly
  the coefficients of the active positives, giving O(n log n) total.

Gradients are analytic and exact, computed in the same pass (plus one
backward sweep for the hinge's positive examples), never by automatic
differentiation.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .batch import LossOutput, MarginConfig, Normalization, PredictionBatch
from .metrics import logistic_loss

# Positive rows per block in the quadratic reference loops. Bounds peak
# memory at roughly _CHUNK * n_neg floats without changing the Theta(n^2)
# work the oracle is required to perform.
_CHUNK = 512


class LossKind(Enum):
    SQUARE = "square"
    SQUARED_HINGE = "squared-hinge"
    LOGISTIC = "logistic"


@dataclass(frozen=True)
class QuadCoefficients:
    """Coefficients of an accumulated quadratic q(x) = a*x^2 + b*x + c.

    One positive example with score s contributes the triple
    (1, 2*(m - s), (m - s)^2), i.e. the pair loss (m - s + x)^2 viewed as a
    quadratic in the negative score x. Sums of triples represent sums of
    per-positive loss curves.
    """

    a: float
    b: float
    c: float

    def evaluate(self, x: float) -> float:
        return self.a * x * x + self.b * x + self.c


@dataclass(frozen=True)
class SweepPlan:
    """Sort order shared by the squared-hinge loss and gradient sweeps.

    ``augmented`` holds yhat_i for positives and yhat_i + m for negatives;
    a pair (j, k) is active exactly when augmented_j < augmented_k, with
    boundary ties contributing exactly zero. ``order`` sorts ``augmented``
    ascending with positives placed before negatives at equal values
    (stable in the original index), which makes either sweep direction
    deterministic and safe at ties.
    """

    augmented: np.ndarray
    order: np.ndarray


def _finalize(value: float, grad_full: np.ndarray | None, pair_count: int,
              cfg: MarginConfig) -> LossOutput:
    """Apply normalization and wrap into a LossOutput."""
    if cfg.normalization is Normalization.MEAN_OVER_PAIRS and pair_count > 0:
        value = value / pair_count
        if grad_full is not None:
            grad_full = grad_full / pair_count
    return LossOutput(float(value), grad_full, pair_count)


def _naive_pair_loss(batch: PredictionBatch, cfg: MarginConfig, hinge: bool,
                     want_gradient: bool) -> LossOutput:
    pos = batch.positive_predictions()
    neg = batch.negative_predictions()
    value = 0.0
    grad_pos = np.zeros(pos.size)
    grad_neg = np.zeros(neg.size)
    if pos.size and neg.size:
        for start in range(0, pos.size, _CHUNK):
            block = pos[start:start + _CHUNK]
            # t[j, k] = m - yhat_j + yhat_k; the pair term is t^2, with the
            # hinge keeping only t > 0 (equivalently yhat_j - yhat_k < m).
            t = cfg.margin - block[:, None] + neg[None, :]
            if hinge:
                t = np.where(t > 0.0, t, 0.0)
            value += float(np.einsum("jk,jk->", t, t))
            if want_gradient:
                grad_pos[start:start + _CHUNK] = -2.0 * t.sum(axis=1)
                grad_neg += 2.0 * t.sum(axis=0)
    grad_full = None
    if want_gradient:
        grad_full = np.zeros(batch.n)
        grad_full[batch.pos_mask] = grad_pos
        grad_full[batch.neg_mask] = grad_neg
    return _finalize(value, grad_full, batch.pair_count, cfg)


def naive_square_loss(batch: PredictionBatch, cfg: MarginConfig,
                      want_gradient: bool = True) -> LossOutput:
    """All-pairs square loss by direct pair enumeration.

    Reference implementation, Theta(n_pos * n_neg) time. The gradient is
    the per-pair accumulation of d/dyhat_j = -2*(m - yhat_j + yhat_k) and
    d/dyhat_k = +2*(m - yhat_j + yhat_k).
    """
    return _naive_pair_loss(batch, cfg, hinge=False, want_gradient=want_gradient)


def naive_squared_hinge_loss(batch: PredictionBatch, cfg: MarginConfig,
                             want_gradient: bool = True) -> LossOutput:
    """All-pairs squared hinge loss by direct pair enumeration.

    Reference implementation, Theta(n_pos * n_neg) time. Pairs contribute
    only while yhat_j - yhat_k < m; at the boundary the term and its
    derivative are both exactly zero.
    """
    return _naive_pair_loss(batch, cfg, hinge=True, want_gradient=want_gradient)


def square_loss_coefficients(batch: PredictionBatch, cfg: MarginConfig) -> QuadCoefficients:
    """Accumulated quadratic for the square loss over all positives.

    a = n_pos, b = sum_j 2*(m - yhat_j), c = sum_j (m - yhat_j)^2. The
    total loss is then sum_k q(yhat_k) over negatives k.
    """
    z = cfg.margin - batch.positive_predictions()
    return QuadCoefficients(float(batch.n_pos), float(2.0 * z.sum()), float((z * z).sum()))


def functional_square_loss(batch: PredictionBatch, cfg: MarginConfig,
                           want_gradient: bool = False) -> LossOutput:
    """All-pairs square loss in O(n) time without sorting.

    Every pair is active for the square loss, so one coefficient triple
    serves every negative:

        L = a * sum(yhat_k^2) + b * sum(yhat_k) + c * n_neg.

    Gradients are closed-form: 2*a*yhat_k + b for a negative and
    -2*(n_neg*(m - yhat_j) + sum_k yhat_k) for a positive.
    """
    coef = square_loss_coefficients(batch, cfg)
    neg = batch.negative_predictions()
    neg_sum = float(neg.sum())
    value = coef.a * float(neg @ neg) + coef.b * neg_sum + coef.c * neg.size
    grad_full = None
    if want_gradient:
        grad_full = np.zeros(batch.n)
        if batch.pair_count:
            pos = batch.positive_predictions()
            grad_full[batch.neg_mask] = 2.0 * coef.a * neg + coef.b
            grad_full[batch.pos_mask] = -2.0 * (neg.size * (cfg.margin - pos) + neg_sum)
    if batch.pair_count == 0:
        value = 0.0
    return _finalize(value, grad_full, batch.pair_count, cfg)


def build_sweep_plan(batch: PredictionBatch, cfg: MarginConfig) -> SweepPlan:
    """Sort margin-augmented scores once for reuse across hinge passes."""
    augmented = batch.predictions + np.where(batch.neg_mask, cfg.margin, 0.0)
    # lexsort is stable and sorts by the last key first: ascending augmented
    # score, then positives (False) ahead of negatives at exact ties.
    order = np.lexsort((batch.neg_mask, augmented))
    return SweepPlan(augmented=augmented, order=order)


def functional_squared_hinge_loss(batch: PredictionBatch, cfg: MarginConfig,
                                  want_gradient: bool = False,
                                  plan: SweepPlan | None = None) -> LossOutput:
    """All-pairs squared hinge loss in O(n log n) time.

    Walks the sweep plan's sorted order once. Each positive deposits its
    quadratic triple into running coefficient sums (a, b, c); each negative
    k then reads off its total penalty a*yhat_k^2 + b*yhat_k + c, because
    precisely the positives with yhat_j < yhat_k + m have been deposited.

    The negative gradients fall out of the same forward pass as
    2*a*yhat_k + b. Positive gradients need the mirror image, a backward
    pass accumulating the count and score-sum of negatives with
    yhat_k > yhat_j - m, giving -2*(count*(m - yhat_j) + score_sum).

    Passing a precomputed ``plan`` skips the sort, which is the dominant
    cost when evaluating repeatedly at the same ordering.
    """
    if plan is None:
        plan = build_sweep_plan(batch, cfg)
    preds = batch.predictions[plan.order]
    is_pos = batch.pos_mask[plan.order]

    z = np.where(is_pos, cfg.margin - preds, 0.0)
    a = np.cumsum(is_pos)
    b = np.cumsum(2.0 * z)
    c = np.cumsum(z * z)

    is_neg = ~is_pos
    neg_scores = preds[is_neg]
    a_at_neg = a[is_neg]
    b_at_neg = b[is_neg]
    c_at_neg = c[is_neg]
    value = float(np.sum(a_at_neg * neg_scores * neg_scores
                         + b_at_neg * neg_scores + c_at_neg))

    grad_full = None
    if want_gradient:
        grad_sorted = np.zeros(batch.n)
        grad_sorted[is_neg] = 2.0 * a_at_neg * neg_scores + b_at_neg
        # Suffix sums over negatives; at a positive position the inclusive
        # suffix equals the exclusive one, so no off-by-one to handle.
        cnt_after = np.cumsum(is_neg[::-1])[::-1]
        sum_after = np.cumsum((preds * is_neg)[::-1])[::-1]
        pos_scores = preds[is_pos]
        grad_sorted[is_pos] = -2.0 * (cnt_after[is_pos] * (cfg.margin - pos_scores)
                                      + sum_after[is_pos])
        grad_full = np.zeros(batch.n)
        grad_full[plan.order] = grad_sorted
    if batch.pair_count == 0:
        value = 0.0
        if grad_full is not None:
            grad_full = np.zeros(batch.n)
    return _finalize(value, grad_full, batch.pair_count, cfg)


def loss_dispatch(kind: LossKind, batch: PredictionBatch, cfg: MarginConfig,
                  want_gradient: bool = False) -> LossOutput:
    """Uniform entry point over the three trainable losses.

    Pairwise kinds route to their sub-quadratic implementations. The
    logistic loss ignores the margin; MEAN_OVER_PAIRS averages it over
    examples, its own notion of summed terms.
    """
    if kind is LossKind.SQUARE:
        return functional_square_loss(batch, cfg, want_gradient)
    if kind is LossKind.SQUARED_HINGE:
        return functional_squared_hinge_loss(batch, cfg, want_gradient)
    if kind is LossKind.LOGISTIC:
        out = logistic_loss(batch, want_gradient)
        if cfg.normalization is Normalization.MEAN_OVER_PAIRS and out.pair_count > 0:
            grad = None if out.gradient is None else out.gradient / out.pair_count
            return LossOutput(out.value / out.pair_count, grad, out.pair_count)
        return out
    raise ValueError(f"unknown loss kind: {kind!r}")
