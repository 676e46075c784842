"""Command line interface.

    recon run --image PATH --method M [pattern and method options]
    recon table --id {1..5} --images DIR --csv PATH
    recon selftest

Exit codes: 0 success, 2 configuration error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import sys

from .errors import ConfigError, NumericalError, ReconError
from .harness import (ExperimentConfig, METHODS, PATTERNS, max_threads,
                      reproduce_table, run_experiment)
from .selfcheck import run_all

EXIT_CONFIG = 2
EXIT_NUMERICAL = 3


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="recon",
        description="Image reconstruction from row-subsampled 2D Fourier data")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run one reconstruction")
    run.add_argument("--image", required=True, help="8-bit PGM or PNG input")
    run.add_argument("--method", required=True, choices=METHODS)
    run.add_argument("--pattern", default="rows2", choices=PATTERNS)
    run.add_argument("--rate", type=int, default=4, dest="r",
                     help="reduction rate r")
    run.add_argument("--lowpass", type=int, default=43, dest="L",
                     help="low-pass width L (odd)")
    run.add_argument("--lambda", type=float, default=100.0, dest="lam",
                     help="data weight of the TV stage")
    run.add_argument("--tau", type=float, default=0.03)
    run.add_argument("--sigma", type=float, default=None)
    run.add_argument("--theta", type=float, default=1.0)
    run.add_argument("--iters", type=int, default=None, dest="n_iter")
    run.add_argument("--mu", type=float, default=1.6)
    run.add_argument("--eps", type=float, default=0.05)
    run.add_argument("--gamma", type=int, default=3)
    run.add_argument("--smooth", type=int, default=0, dest="n_smooth")
    run.add_argument("--window", type=int, default=11,
                     help="interpolation window size (odd)")
    run.add_argument("--out", default=".", dest="out_dir")
    run.add_argument("--csv", default=None, help="append the result row here")
    run.add_argument("--save-image", action="store_true", dest="save_recon")

    table = sub.add_parser("table", help="reproduce one benchmark table")
    table.add_argument("--id", type=int, required=True, choices=range(1, 6),
                       dest="table_id")
    table.add_argument("--images", required=True,
                       help="directory holding <image>.png / <image>.pgm")
    table.add_argument("--csv", required=True)

    sub.add_parser("selftest", help="run built-in correctness checks")
    return parser


def _cmd_run(args):
    config = ExperimentConfig(
        image=args.image, method=args.method, pattern=args.pattern,
        r=args.r, L=args.L, lam=args.lam, tau=args.tau, sigma=args.sigma,
        theta=args.theta, n_iter=args.n_iter, mu=args.mu, eps=args.eps,
        gamma=args.gamma, n_smooth=args.n_smooth, window=args.window,
        out_dir=args.out_dir, save_recon=args.save_recon)
    row = run_experiment(config)
    print(f"image={row.image_id} method={row.method} pattern={row.pattern} "
          f"r={row.r} L={row.L} psnr={row.psnr_db:.4f} tv={row.tv_value:.4f} "
          f"fidelity={row.data_fidelity:.3e} time_ms={row.wall_time_ms:.1f}")
    if args.csv:
        import csv as _csv
        from dataclasses import asdict
        with open(args.csv, "a", newline="") as fh:
            writer = _csv.DictWriter(fh, fieldnames=list(asdict(row)))
            if fh.tell() == 0:
                writer.writeheader()
            writer.writerow(asdict(row))
    return 0


def _cmd_table(args):
    rows = reproduce_table(args.table_id, args.images, args.csv)
    n_dominant = sum(1 for r in rows if r["hybrid_ge_tv"] == "pass")
    n_hybrid = sum(1 for r in rows if r["method"] == "hybrid")
    print(f"table {args.table_id}: {len(rows)} rows -> {args.csv} "
          f"(threads={max_threads()})")
    if n_hybrid:
        print(f"hybrid >= tv in {n_dominant}/{n_hybrid} rows")
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "table":
            return _cmd_table(args)
        return 0 if run_all() else EXIT_NUMERICAL
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (NumericalError, ReconError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
