"""Exact all-pairs AUC surrogate losses in sub-quadratic time.

The square ranking loss over all positive/negative pairs evaluates in
O(n), the squared hinge in O(n log n), both with exact analytic gradients
that match the quadratic-time pair enumeration to floating-point accuracy.
Around the losses: rank-based ROC-AUC, synthetic imbalanced data with a
known optimum, a minibatch SGD trainer with grid search, and a scaling
benchmark harness.
"""

from .batch import LossOutput, MarginConfig, Normalization, PredictionBatch
from .batchio import read_batch_csv, write_batch_csv
from .bench import (Algorithm, BenchPoint, SlopeEstimate, fit_loglog_slopes,
                    read_bench_csv, run_benchmark, write_bench_csv)
from .datagen import (Dataset, SplitSpec, apply_imbalance_and_split, bayes_auc,
                      generate_gaussian_mixture)
from .losses import (LossKind, QuadCoefficients, SweepPlan, build_sweep_plan,
                     functional_square_loss, functional_squared_hinge_loss,
                     loss_dispatch, naive_square_loss, naive_squared_hinge_loss,
                     square_loss_coefficients)
from .metrics import AucResult, logistic_loss, roc_auc
from .trainer import (EpochRecord, LinearModel, TrainConfig, TrainRun,
                      grid_search, sgd_train, write_run_table)

__version__ = "0.1.0"

__all__ = [
    "Algorithm", "AucResult", "BenchPoint", "Dataset", "EpochRecord",
    "LinearModel", "LossKind", "LossOutput", "MarginConfig", "Normalization",
    "PredictionBatch", "QuadCoefficients", "SlopeEstimate", "SplitSpec",
    "SweepPlan", "TrainConfig", "TrainRun", "apply_imbalance_and_split",
    "bayes_auc", "build_sweep_plan", "fit_loglog_slopes",
    "functional_square_loss", "functional_squared_hinge_loss", "grid_search",
    "logistic_loss", "loss_dispatch", "naive_square_loss",
    "naive_squared_hinge_loss", "read_batch_csv", "read_bench_csv", "roc_auc",
    "run_benchmark", "sgd_train", "square_loss_coefficients", "write_batch_csv",
    "write_bench_csv", "write_run_table", "generate_gaussian_mixture",
]
