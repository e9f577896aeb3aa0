"""
Measuring the empirical complexity of each loss implementation
==============================================================

Times every algorithm over a geometric ladder of batch sizes, then fits
a log-log slope over the top decade. The pair-summing baselines come out
near slope 2, the sweep implementations near slope 1.
"""

from aucsweep import fit_loglog_slopes, run_benchmark, write_bench_csv

sizes = [100, 1000, 10_000, 20_000, 50_000, 100_000]

# quadratic algorithms are skipped above naive_cutoff so the run stays short
points = run_benchmark(sizes, seed=0, repetitions=3, naive_cutoff=20_000)

print(f"{'algorithm':<22} {'n':>9} {'loss (s)':>12} {'loss+grad (s)':>14}")
for pt in points:
    print(f"{pt.algorithm.value:<22} {pt.n:>9} "
          f"{pt.seconds_loss:>12.6f} {pt.seconds_grad:>14.6f}")

print("\nfitted log-log slopes (loss+grad timings, top decade):")
for algorithm, est in fit_loglog_slopes(points, metric="grad").items():
    flag = "  (few points)" if est.low_confidence else ""
    print(f"{algorithm.value:<22} slope {est.slope:.2f} "
          f"from {est.n_points} points{flag}")

write_bench_csv(points, "bench_demo.csv")
print("\nwrote bench_demo.csv")
