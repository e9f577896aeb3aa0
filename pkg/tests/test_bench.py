import math

import pytest

from aucsweep import (Algorithm, BenchPoint, fit_loglog_slopes, read_bench_csv,
                      run_benchmark, write_bench_csv)


def synthetic_points(alg, law, sizes, reps=3):
    return [BenchPoint(n, alg, law(n), law(n), reps) for n in sizes]


def test_small_run_produces_finite_times():
    points = run_benchmark([10, 50], seed=0, repetitions=3, naive_cutoff=100)
    assert len(points) == 2 * len(Algorithm)
    for pt in points:
        assert pt.repetitions == 3
        assert pt.seconds_loss > 0.0 and math.isfinite(pt.seconds_loss)
        assert pt.seconds_grad > 0.0 and math.isfinite(pt.seconds_grad)


def test_naive_cutoff_skips_quadratic_algorithms():
    points = run_benchmark([10, 200], seed=0, naive_cutoff=100)
    naive_ns = [pt.n for pt in points
                if pt.algorithm in (Algorithm.NAIVE_SQUARE, Algorithm.NAIVE_SQUARED_HINGE)]
    assert naive_ns == [10, 10]
    functional_ns = sorted(pt.n for pt in points
                           if pt.algorithm is Algorithm.FUNCTIONAL_SQUARE)
    assert functional_ns == [10, 200]


def test_timeout_marks_points_missing_not_fatal():
    points = run_benchmark([10, 50], algorithms=[Algorithm.FUNCTIONAL_SQUARE],
                           seed=0, timeout=0.0)
    assert len(points) == 2
    assert all(math.isnan(pt.seconds_loss) and math.isnan(pt.seconds_grad)
               for pt in points)


def test_run_benchmark_validates_inputs():
    with pytest.raises(ValueError):
        run_benchmark([100, 10])
    with pytest.raises(ValueError):
        run_benchmark([])
    with pytest.raises(ValueError):
        run_benchmark([10], repetitions=2)


def test_slope_recovers_exact_power_laws():
    sizes = [1_000, 10_000, 20_000, 50_000, 100_000]  # 4 points in the top decade
    pts = (synthetic_points(Algorithm.FUNCTIONAL_SQUARE, lambda n: 1e-8 * n, sizes)
           + synthetic_points(Algorithm.NAIVE_SQUARE, lambda n: 1e-10 * n * n, sizes))
    slopes = fit_loglog_slopes(pts)
    assert slopes[Algorithm.FUNCTIONAL_SQUARE].slope == pytest.approx(1.0, abs=1e-9)
    assert slopes[Algorithm.NAIVE_SQUARE].slope == pytest.approx(2.0, abs=1e-9)
    assert not slopes[Algorithm.NAIVE_SQUARE].low_confidence


def test_slope_uses_top_decade_only():
    # constant overhead floor at small n would bias a whole-range fit; the
    # top decade [n_max/10, n_max] must see through it
    sizes = [100, 1_000, 10_000, 20_000, 50_000, 100_000]
    law = lambda n: 1e-4 + 1e-12 * n * n
    slopes = fit_loglog_slopes(synthetic_points(Algorithm.NAIVE_SQUARE, law, sizes))
    est = slopes[Algorithm.NAIVE_SQUARE]
    assert est.n_points == 4  # 10k, 20k, 50k, 100k
    assert not est.low_confidence
    assert 1.6 <= est.slope <= 2.4


def test_slope_two_points_flagged_low_confidence():
    pts = synthetic_points(Algorithm.LOGISTIC, lambda n: 1e-8 * n, [100, 1_000])
    est = fit_loglog_slopes(pts)[Algorithm.LOGISTIC]
    assert est.slope == pytest.approx(1.0)
    assert est.low_confidence
    assert est.n_points == 2


def test_slope_not_estimable_from_one_point():
    pts = synthetic_points(Algorithm.LOGISTIC, lambda n: 1e-8 * n, [100])
    est = fit_loglog_slopes(pts)[Algorithm.LOGISTIC]
    assert est.slope is None


def test_slope_ignores_missing_points():
    pts = synthetic_points(Algorithm.FUNCTIONAL_SQUARE, lambda n: 1e-8 * n,
                           [100, 1_000, 10_000])
    pts.append(BenchPoint(100_000, Algorithm.FUNCTIONAL_SQUARE,
                          math.nan, math.nan, 3))
    est = fit_loglog_slopes(pts)[Algorithm.FUNCTIONAL_SQUARE]
    assert est.slope == pytest.approx(1.0)


def test_bench_csv_round_trip(tmp_path):
    points = run_benchmark([10, 30], algorithms=[Algorithm.FUNCTIONAL_SQUARE,
                                                 Algorithm.LOGISTIC], seed=1)
    path = tmp_path / "bench.csv"
    write_bench_csv(points, str(path))
    with open(path) as fh:
        assert fh.readline().strip() == "n,algorithm,seconds_loss,seconds_grad,repetitions"
    assert read_bench_csv(str(path)) == points
