"""
Training a linear scorer on heavily imbalanced data
===================================================

With 1% positives, per-example losses spend almost all their gradient
on the majority class. The pairwise squared hinge optimizes the ranking
of positives over negatives directly, which is the quantity AUC grades.
"""

from aucsweep import (LossKind, Normalization, SplitSpec, TrainConfig,
                      apply_imbalance_and_split, bayes_auc,
                      generate_gaussian_mixture, grid_search)

# two spherical Gaussians, class means 4 apart in 10 dimensions
data = generate_gaussian_mixture(n=10_000, p=10, class_separation=4.0, seed=42)
splits = apply_imbalance_and_split(data, SplitSpec(imratio=0.01, seed=42))
subtrain, validation, test = splits
print(f"subtrain {subtrain.n} ({subtrain.n_pos} pos), "
      f"validation {validation.n} ({validation.n_pos} pos), "
      f"test {test.n} balanced")
print(f"best possible AUC for this geometry: {bayes_auc(4.0):.4f}\n")

for kind, lrs in [(LossKind.SQUARED_HINGE, [0.01, 0.1, 1.0]),
                  (LossKind.LOGISTIC, [0.1, 1.0, 10.0])]:
    base = TrainConfig(loss_kind=kind,
                       normalization=Normalization.MEAN_OVER_PAIRS,
                       epochs=20, seed=42)
    best, runs = grid_search(subtrain, validation, test,
                             batch_sizes=[500, 1000], learning_rates=lrs,
                             base_config=base)
    print(f"{kind.value}: picked batch_size={best.config.batch_size} "
          f"lr={best.config.learning_rate} at epoch {best.selected_epoch}")
    print(f"  validation AUC {best.records[best.selected_epoch - 1].valid_auc:.4f}, "
          f"test AUC {best.test_auc:.4f}")
