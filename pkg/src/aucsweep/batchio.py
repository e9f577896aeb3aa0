"""Reading and writing prediction batches as CSV files.

Format: a header line ``prediction,label`` followed by one row per
example; predictions are decimal floats, labels the literal ``-1`` or
``1``. Floats are written with ``repr`` so a write/read cycle returns the
identical batch.
"""

from __future__ import annotations

import csv
import math

import numpy as np

from .batch import PredictionBatch

_HEADER = ["prediction", "label"]


def read_batch_csv(path: str) -> PredictionBatch:
    """Parse a batch file, reporting the first offending line on error."""
    predictions: list[float] = []
    labels: list[int] = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header] != _HEADER:
            raise ValueError(f"{path}:1: expected header 'prediction,label', got {header}")
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 2:
                raise ValueError(f"{path}:{lineno}: expected 2 fields, got {len(row)}")
            raw_pred, raw_label = row[0].strip(), row[1].strip()
            try:
                pred = float(raw_pred)
            except ValueError:
                raise ValueError(f"{path}:{lineno}: bad prediction {raw_pred!r}") from None
            if not math.isfinite(pred):
                raise ValueError(f"{path}:{lineno}: prediction must be finite, got {raw_pred!r}")
            if raw_label not in ("-1", "1"):
                raise ValueError(f"{path}:{lineno}: label must be -1 or 1, got {raw_label!r}")
            predictions.append(pred)
            labels.append(int(raw_label))
    return PredictionBatch(np.array(predictions, dtype=np.float64),
                           np.array(labels, dtype=np.int64))


def write_batch_csv(batch: PredictionBatch, path: str) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(_HEADER)
        for pred, label in zip(batch.predictions, batch.labels):
            writer.writerow([repr(float(pred)), int(label)])
