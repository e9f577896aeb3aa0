"""Wall-clock scaling measurements for the loss implementations.

Each benchmark point times one algorithm on one synthetic batch size:
standard normal predictions, balanced labels. The quadratic reference
implementations are capped at ``naive_cutoff`` and any call exceeding
``timeout`` marks that algorithm's larger sizes as missing rather than
stalling the whole run. Empirical complexity is read off as the OLS slope
of log(seconds) against log(n) over the largest measured decade.
"""

from __future__ import annotations

import csv
import math
import time
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

import numpy as np

from .batch import MarginConfig, PredictionBatch
from .losses import (functional_square_loss, functional_squared_hinge_loss,
                     naive_square_loss, naive_squared_hinge_loss)
from .metrics import logistic_loss


class Algorithm(Enum):
    NAIVE_SQUARE = "NaiveSquare"
    NAIVE_SQUARED_HINGE = "NaiveSquaredHinge"
    FUNCTIONAL_SQUARE = "FunctionalSquare"
    FUNCTIONAL_SQUARED_HINGE = "FunctionalSquaredHinge"
    LOGISTIC = "Logistic"


_QUADRATIC = {Algorithm.NAIVE_SQUARE, Algorithm.NAIVE_SQUARED_HINGE}

_CALLS: dict[Algorithm, Callable[[PredictionBatch, MarginConfig, bool], object]] = {
    Algorithm.NAIVE_SQUARE:
        lambda batch, cfg, g: naive_square_loss(batch, cfg, want_gradient=g),
    Algorithm.NAIVE_SQUARED_HINGE:
        lambda batch, cfg, g: naive_squared_hinge_loss(batch, cfg, want_gradient=g),
    Algorithm.FUNCTIONAL_SQUARE:
        lambda batch, cfg, g: functional_square_loss(batch, cfg, want_gradient=g),
    Algorithm.FUNCTIONAL_SQUARED_HINGE:
        lambda batch, cfg, g: functional_squared_hinge_loss(batch, cfg, want_gradient=g),
    Algorithm.LOGISTIC:
        lambda batch, cfg, g: logistic_loss(batch, want_gradient=g),
}


@dataclass(frozen=True)
class BenchPoint:
    """Median seconds for loss-only and loss-plus-gradient calls.

    ``repetitions`` counts the timed calls per number (a warm-up call is
    made first and discarded). NaN seconds mark a point skipped because an
    earlier, smaller size already exceeded the timeout.
    """

    n: int
    algorithm: Algorithm
    seconds_loss: float
    seconds_grad: float
    repetitions: int


@dataclass(frozen=True)
class SlopeEstimate:
    algorithm: Algorithm
    slope: float | None
    n_points: int
    low_confidence: bool


def _make_batch(n: int, rng: np.random.Generator) -> PredictionBatch:
    preds = rng.standard_normal(n)
    labels = np.ones(n, dtype=np.int64)
    labels[n // 2:] = -1
    return PredictionBatch(preds, labels[rng.permutation(n)])


def _median_seconds(call: Callable[[], object], repetitions: int,
                    timeout: float) -> float:
    start = time.perf_counter()
    call()  # warm-up, discarded
    if time.perf_counter() - start > timeout:
        return math.nan
    times = []
    for _ in range(repetitions):
        start = time.perf_counter()
        call()
        times.append(time.perf_counter() - start)
    return float(np.median(times))


def run_benchmark(sizes: Sequence[int],
                  algorithms: Sequence[Algorithm] | None = None,
                  seed: int = 0,
                  naive_cutoff: int = 20_000,
                  timeout: float = 60.0,
                  repetitions: int = 3,
                  margin: float = 1.0) -> list[BenchPoint]:
    """Time every (algorithm, size) cell; batch generation is not timed.

    ``sizes`` must be strictly increasing so the timeout logic can skip
    everything larger once an algorithm blows its budget. Quadratic
    algorithms are simply not attempted above ``naive_cutoff``.
    """
    if algorithms is None:
        algorithms = list(Algorithm)
    sizes = [int(n) for n in sizes]
    if any(b <= a for a, b in zip(sizes, sizes[1:])) or not sizes:
        raise ValueError("sizes must be non-empty and strictly increasing")
    if min(sizes) < 2:
        raise ValueError("sizes must be >= 2")
    if repetitions < 3:
        raise ValueError("need at least 3 repetitions for a median")

    rng = np.random.default_rng(seed)
    cfg = MarginConfig(margin=margin)
    points: list[BenchPoint] = []
    timed_out: set[Algorithm] = set()
    for n in sizes:
        batch = _make_batch(n, rng)
        for alg in algorithms:
            if alg in _QUADRATIC and n > naive_cutoff:
                continue
            if alg in timed_out:
                points.append(BenchPoint(n, alg, math.nan, math.nan, repetitions))
                continue
            fn = _CALLS[alg]
            sec_grad = _median_seconds(lambda: fn(batch, cfg, True), repetitions, timeout)
            if math.isnan(sec_grad):
                timed_out.add(alg)
                points.append(BenchPoint(n, alg, math.nan, math.nan, repetitions))
                continue
            sec_loss = _median_seconds(lambda: fn(batch, cfg, False), repetitions, timeout)
            points.append(BenchPoint(n, alg, sec_loss, sec_grad, repetitions))
    return points


def fit_loglog_slopes(points: Sequence[BenchPoint],
                      metric: str = "grad") -> dict[Algorithm, SlopeEstimate]:
    """OLS slope of log10(seconds) vs log10(n) per algorithm.

    The fit uses only the largest measured decade (n >= n_max / 10), where
    per-call overhead is smallest; if that window holds fewer than three
    points the fit falls back to all finite points and is flagged
    low-confidence. Algorithms with fewer than two finite points are
    reported as not estimable (slope None).
    """
    if metric not in ("loss", "grad"):
        raise ValueError("metric must be 'loss' or 'grad'")
    by_alg: dict[Algorithm, list[tuple[int, float]]] = {}
    for pt in points:
        seconds = pt.seconds_grad if metric == "grad" else pt.seconds_loss
        if math.isfinite(seconds) and seconds > 0:
            by_alg.setdefault(pt.algorithm, []).append((pt.n, seconds))

    estimates: dict[Algorithm, SlopeEstimate] = {}
    for alg, data in by_alg.items():
        data.sort()
        n_max = data[-1][0]
        decade = [(n, s) for n, s in data if n * 10 >= n_max]
        low_confidence = len(decade) < 3
        if low_confidence:
            decade = data
        if len(decade) < 2:
            estimates[alg] = SlopeEstimate(alg, None, len(decade), True)
            continue
        log_n = np.log10([n for n, _ in decade])
        log_s = np.log10([s for _, s in decade])
        slope = float(np.polyfit(log_n, log_s, 1)[0])
        estimates[alg] = SlopeEstimate(alg, slope, len(decade), low_confidence)
    return estimates


def write_bench_csv(points: Sequence[BenchPoint], path: str) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "algorithm", "seconds_loss", "seconds_grad", "repetitions"])
        for pt in points:
            writer.writerow([pt.n, pt.algorithm.value, repr(pt.seconds_loss),
                             repr(pt.seconds_grad), pt.repetitions])


def read_bench_csv(path: str) -> list[BenchPoint]:
    points = []
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            points.append(BenchPoint(int(row["n"]), Algorithm(row["algorithm"]),
                                     float(row["seconds_loss"]),
                                     float(row["seconds_grad"]),
                                     int(row["repetitions"])))
    return points
