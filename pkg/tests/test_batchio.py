import numpy as np
import pytest

from aucsweep import PredictionBatch, read_batch_csv, write_batch_csv
from conftest import random_labels


def test_round_trip_is_value_identical(rng, tmp_path):
    n = 200
    batch = PredictionBatch(rng.normal(scale=100.0, size=n), random_labels(rng, n))
    path = tmp_path / "batch.csv"
    write_batch_csv(batch, str(path))
    back = read_batch_csv(str(path))
    np.testing.assert_array_equal(back.predictions, batch.predictions)
    np.testing.assert_array_equal(back.labels, batch.labels)


def test_read_known_file(tmp_path):
    path = tmp_path / "batch.csv"
    path.write_text("prediction,label\n0.5,1\n-0.2,1\n0.1,-1\n")
    batch = read_batch_csv(str(path))
    np.testing.assert_array_equal(batch.predictions, [0.5, -0.2, 0.1])
    np.testing.assert_array_equal(batch.labels, [1, 1, -1])


def test_header_only_file_is_an_empty_batch(tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text("prediction,label\n")
    assert read_batch_csv(str(path)).n == 0


@pytest.mark.parametrize("content,lineno", [
    ("score,label\n0.5,1\n", 1),                    # wrong header
    ("", 1),                                         # no header at all
    ("prediction,label\n0.5,1\noops,-1\n", 3),       # unparseable prediction
    ("prediction,label\nnan,1\n", 2),                # non-finite prediction
    ("prediction,label\n0.5,2\n", 2),                # label outside {-1, 1}
    ("prediction,label\n0.5,+1\n", 2),               # only the literals -1 / 1
    ("prediction,label\n0.5\n", 2),                  # missing field
    ("prediction,label\n0.5,1,9\n", 2),              # extra field
])
def test_parse_errors_carry_line_numbers(tmp_path, content, lineno):
    path = tmp_path / "bad.csv"
    path.write_text(content)
    with pytest.raises(ValueError, match=f"bad.csv:{lineno}:"):
        read_batch_csv(str(path))
