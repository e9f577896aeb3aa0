import numpy as np
import pytest

from aucsweep import MarginConfig, Normalization, PredictionBatch


def test_counts_and_masks():
    batch = PredictionBatch([0.5, -0.2, 0.1], [1, 1, -1])
    assert batch.n == 3
    assert batch.n_pos == 2
    assert batch.n_neg == 1
    assert batch.pair_count == 2
    assert batch.pos_mask.tolist() == [True, True, False]
    np.testing.assert_array_equal(batch.positive_predictions(), [0.5, -0.2])
    np.testing.assert_array_equal(batch.negative_predictions(), [0.1])


def test_empty_and_single_class_batches_are_legal():
    empty = PredictionBatch([], [])
    assert empty.n == 0 and empty.pair_count == 0
    only_pos = PredictionBatch([1.0, 2.0], [1, 1])
    assert only_pos.pair_count == 0


def test_float_labels_accepted_when_exact():
    batch = PredictionBatch([0.1, 0.2], [1.0, -1.0])
    assert batch.labels.dtype == np.int64
    assert batch.labels.tolist() == [1, -1]


@pytest.mark.parametrize("preds,labels", [
    ([0.1, 0.2], [1]),                  # length mismatch
    ([0.1, np.nan], [1, -1]),           # NaN prediction
    ([0.1, np.inf], [1, -1]),           # Inf prediction
    ([0.1, 0.2], [1, 0]),               # label outside {-1, +1}
    ([0.1, 0.2], [1, 2]),
    ([0.1, 0.2], [1.0, -0.5]),          # fractional float label
    ([[0.1, 0.2]], [[1, -1]]),          # wrong dimensionality
    ([0.1, 0.2], [1, np.nan]),
])
def test_invalid_batches_rejected(preds, labels):
    with pytest.raises(ValueError):
        PredictionBatch(preds, labels)


def test_margin_config_defaults_and_validation():
    cfg = MarginConfig()
    assert cfg.margin == 1.0
    assert cfg.normalization is Normalization.TOTAL_OVER_PAIRS
    assert MarginConfig(0.0).margin == 0.0
    for bad in (-0.5, np.nan, np.inf):
        with pytest.raises(ValueError):
            MarginConfig(bad)
