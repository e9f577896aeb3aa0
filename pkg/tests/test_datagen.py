import numpy as np
import pytest

from aucsweep import (PredictionBatch, SplitSpec, apply_imbalance_and_split,
                      bayes_auc, generate_gaussian_mixture, roc_auc)


def test_generation_is_deterministic():
    a = generate_gaussian_mixture(500, 8, 2.0, seed=7)
    b = generate_gaussian_mixture(500, 8, 2.0, seed=7)
    assert a.features.tobytes() == b.features.tobytes()
    assert a.labels.tobytes() == b.labels.tobytes()
    c = generate_gaussian_mixture(500, 8, 2.0, seed=8)
    assert a.features.tobytes() != c.features.tobytes()


def test_generation_shapes_and_balance():
    data = generate_gaussian_mixture(1001, 5, 1.0, seed=0)
    assert data.features.shape == (1001, 5)
    assert data.n_pos == 500 and data.n_neg == 501
    assert data.provenance["class_separation"] == 1.0


def test_class_means_sit_separation_apart():
    sep = 3.0
    data = generate_gaussian_mixture(40_000, 6, sep, seed=3)
    pos_mean = data.features[data.labels == 1].mean(axis=0)
    neg_mean = data.features[data.labels == -1].mean(axis=0)
    assert np.linalg.norm(pos_mean - neg_mean) == pytest.approx(sep, abs=0.1)


def test_oracle_direction_reaches_bayes_auc():
    sep = 4.0
    target = bayes_auc(sep)
    assert 0.995 < target < 1.0  # Phi(4/sqrt(2)) ~ 0.9977
    data = generate_gaussian_mixture(4000, 10, sep, seed=11)
    scores = data.features.sum(axis=1)  # all-ones direction is optimal
    auc = roc_auc(PredictionBatch(scores, data.labels)).auc
    assert abs(auc - target) < 0.02


def test_bayes_auc_endpoints():
    assert bayes_auc(0.0) == 0.5
    assert bayes_auc(50.0) == pytest.approx(1.0)


@pytest.mark.parametrize("bad_kwargs", [
    dict(n=1, p=3, class_separation=1.0),
    dict(n=10, p=0, class_separation=1.0),
    dict(n=10, p=3, class_separation=-1.0),
])
def test_generation_rejects_bad_parameters(bad_kwargs):
    with pytest.raises(ValueError):
        generate_gaussian_mixture(**bad_kwargs)


def test_split_counts_and_ratio():
    data = generate_gaussian_mixture(10_000, 4, 2.0, seed=1)
    spec = SplitSpec(imratio=0.01, seed=5)
    subtrain, validation, test = apply_imbalance_and_split(data, spec)

    # balanced test reserved first: 20% of n, half per class
    assert test.n == 2000
    assert test.n_pos == test.n_neg == 1000

    n_train = subtrain.n + validation.n
    realized = (subtrain.n_pos + validation.n_pos) / n_train
    assert abs(realized - spec.imratio) <= 1.0 / n_train

    # negatives are never removed
    assert subtrain.n_neg + validation.n_neg == 4000
    assert subtrain.n == pytest.approx(0.8 * n_train, abs=2)

    # stratification: both sides keep both classes
    assert subtrain.n_pos >= 1 and validation.n_pos >= 1


def test_split_disjoint_and_deterministic():
    data = generate_gaussian_mixture(2000, 3, 1.0, seed=2)
    spec = SplitSpec(imratio=0.1, seed=9)
    parts = apply_imbalance_and_split(data, spec)
    index_sets = [set(part.provenance["source_indices"].tolist()) for part in parts]
    assert all(len(s) == part.n for s, part in zip(index_sets, parts))
    assert not (index_sets[0] & index_sets[1])
    assert not (index_sets[0] & index_sets[2])
    assert not (index_sets[1] & index_sets[2])
    assert set().union(*index_sets) <= set(range(data.n))

    again = apply_imbalance_and_split(data, spec)
    for part, repeat in zip(parts, again):
        assert part.features.tobytes() == repeat.features.tobytes()
        assert part.labels.tobytes() == repeat.labels.tobytes()

    other = apply_imbalance_and_split(data, SplitSpec(imratio=0.1, seed=10))
    assert other[2].features.tobytes() != parts[2].features.tobytes()


def test_imratio_half_removes_nothing():
    data = generate_gaussian_mixture(1000, 2, 1.0, seed=4)
    subtrain, validation, _test = apply_imbalance_and_split(
        data, SplitSpec(imratio=0.5, seed=0))
    assert subtrain.n_pos + validation.n_pos == 400  # all non-test positives kept
    assert subtrain.n_neg + validation.n_neg == 400


def test_infeasible_imratio_errors():
    # odd n leaves one fewer positive than negatives; 0.5 is then unreachable
    data = generate_gaussian_mixture(11, 2, 1.0, seed=0)
    with pytest.raises(ValueError, match="positives"):
        apply_imbalance_and_split(data, SplitSpec(imratio=0.5, seed=0, test_fraction=0.2))
    # a ratio that rounds to zero positives is rejected, not silently empty
    small = generate_gaussian_mixture(100, 2, 1.0, seed=0)
    with pytest.raises(ValueError, match="zero"):
        apply_imbalance_and_split(small, SplitSpec(imratio=0.005, seed=0))


def test_split_spec_validation():
    for kwargs in (dict(imratio=0.0), dict(imratio=0.7),
                   dict(imratio=0.1, subtrain_fraction=1.0),
                   dict(imratio=0.1, test_fraction=0.0)):
        with pytest.raises(ValueError):
            SplitSpec(**kwargs)
