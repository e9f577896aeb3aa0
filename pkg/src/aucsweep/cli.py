"""Command-line front end.

Subcommands: ``loss``, ``grad``, ``auc`` evaluate a batch CSV file;
``bench`` writes scaling measurements; ``train`` runs the synthetic
imbalanced-training protocol. All floats are printed with ``repr`` (full
round-trip precision). Exit status is nonzero on any contract violation,
including unparseable input files.
"""

from __future__ import annotations

import argparse
import sys

from .batch import MarginConfig, Normalization
from .batchio import read_batch_csv
from .bench import Algorithm, run_benchmark, write_bench_csv
from .datagen import SplitSpec, apply_imbalance_and_split, generate_gaussian_mixture
from .losses import (LossKind, loss_dispatch, naive_square_loss,
                     naive_squared_hinge_loss)
from .metrics import roc_auc
from .trainer import TrainConfig, grid_search, write_run_table

_NORMALIZATIONS = {n.value: n for n in Normalization}


def _add_loss_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("input", help="batch CSV file (header: prediction,label)")
    parser.add_argument("--loss", default="square",
                        choices=[k.value for k in LossKind])
    parser.add_argument("--margin", type=float, default=1.0)
    parser.add_argument("--normalize", default="total", choices=sorted(_NORMALIZATIONS))
    parser.add_argument("--naive", action="store_true",
                        help="use the quadratic reference implementation")


def _evaluate(args: argparse.Namespace, parser: argparse.ArgumentParser,
              want_gradient: bool):
    kind = LossKind(args.loss)
    if args.naive and kind is LossKind.LOGISTIC:
        parser.error("--naive applies only to the pairwise losses")
    batch = read_batch_csv(args.input)
    cfg = MarginConfig(args.margin, _NORMALIZATIONS[args.normalize])
    if args.naive:
        fn = naive_square_loss if kind is LossKind.SQUARE else naive_squared_hinge_loss
        return fn(batch, cfg, want_gradient=want_gradient)
    return loss_dispatch(kind, batch, cfg, want_gradient=want_gradient)


def cmd_loss(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    out = _evaluate(args, parser, want_gradient=False)
    print(repr(out.value))
    return 0


def cmd_grad(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    out = _evaluate(args, parser, want_gradient=True)
    print("index,gradient")
    for i, g in enumerate(out.gradient):
        print(f"{i},{repr(float(g))}")
    return 0


def cmd_auc(args: argparse.Namespace) -> int:
    result = roc_auc(read_batch_csv(args.input))
    print(repr(result.auc))
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    if args.algorithms:
        algorithms = [Algorithm(name) for name in args.algorithms.split(",") if name]
    else:
        algorithms = None
    points = run_benchmark(sizes, algorithms, seed=args.seed,
                           naive_cutoff=args.naive_cutoff, timeout=args.timeout,
                           repetitions=args.repetitions)
    write_bench_csv(points, args.out)
    print(f"wrote {len(points)} benchmark points to {args.out}")
    return 0


def cmd_train(args: argparse.Namespace) -> int:
    data = generate_gaussian_mixture(args.n, args.p, args.separation, seed=args.seed)
    spec = SplitSpec(imratio=args.imratio, seed=args.seed)
    subtrain, validation, test = apply_imbalance_and_split(data, spec)
    base = TrainConfig(loss_kind=LossKind(args.loss), margin=args.margin,
                       normalization=_NORMALIZATIONS[args.normalize],
                       epochs=args.epochs, seed=args.seed)
    batch_sizes = [int(s) for s in args.batch_sizes.split(",") if s]
    learning_rates = [float(s) for s in args.lrs.split(",") if s]
    best, runs = grid_search(subtrain, validation, test, batch_sizes,
                             learning_rates, base)
    if args.out:
        write_run_table(runs, args.out)
        print(f"wrote {sum(max(len(r.records), 1) for r in runs)} rows to {args.out}")
    sel = best.records[best.selected_epoch - 1]
    print(f"selected loss={best.config.loss_kind.value} "
          f"batch_size={best.config.batch_size} "
          f"learning_rate={best.config.learning_rate} epoch={best.selected_epoch} "
          f"valid_auc={repr(sel.valid_auc)} test_auc={repr(best.test_auc)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aucsweep",
        description="Exact all-pairs AUC surrogate losses in sub-quadratic time.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_loss = sub.add_parser("loss", help="print the loss value of a batch file")
    _add_loss_flags(p_loss)
    p_grad = sub.add_parser("grad", help="print per-example gradients as CSV")
    _add_loss_flags(p_grad)

    p_auc = sub.add_parser("auc", help="print the ROC-AUC of a batch file")
    p_auc.add_argument("input")

    p_bench = sub.add_parser("bench", help="time the implementations across sizes")
    p_bench.add_argument("--sizes", required=True,
                         help="comma-separated batch sizes, strictly increasing")
    p_bench.add_argument("--algorithms", default="",
                         help="comma-separated algorithm names (default: all); "
                              "choices: " + ",".join(a.value for a in Algorithm))
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--naive-cutoff", type=int, default=20_000)
    p_bench.add_argument("--timeout", type=float, default=60.0)
    p_bench.add_argument("--repetitions", type=int, default=3)
    p_bench.add_argument("--out", required=True, help="output CSV path")

    p_train = sub.add_parser("train", help="grid-search SGD on synthetic data")
    p_train.add_argument("--n", type=int, default=10_000)
    p_train.add_argument("--p", type=int, default=10)
    p_train.add_argument("--separation", type=float, default=4.0)
    p_train.add_argument("--imratio", type=float, default=0.01)
    p_train.add_argument("--loss", default="squared-hinge",
                         choices=[k.value for k in LossKind])
    p_train.add_argument("--margin", type=float, default=1.0)
    p_train.add_argument("--normalize", default="mean-pairs",
                         choices=sorted(_NORMALIZATIONS))
    p_train.add_argument("--batch-sizes", default="1000")
    p_train.add_argument("--lrs", default="0.01,0.1,1.0")
    p_train.add_argument("--epochs", type=int, default=20)
    p_train.add_argument("--seed", type=int, default=0)
    p_train.add_argument("--out", default="", help="run table CSV path")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "loss":
            return cmd_loss(args, parser)
        if args.command == "grad":
            return cmd_grad(args, parser)
        if args.command == "auc":
            return cmd_auc(args)
        if args.command == "bench":
            return cmd_bench(args)
        if args.command == "train":
            return cmd_train(args)
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    raise AssertionError("unreachable")


def entry() -> None:  # console_scripts hook
    sys.exit(main())


if __name__ == "__main__":
    entry()
