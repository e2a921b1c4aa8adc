"""Command-line entry point: ``ggrey <command> [flags]``.

Exit codes: 0 success, 1 computation or check failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import sys

import numpy as np

from .. import governing as gv
from .. import timechange as tc
from ..errors import GGreyError, UsageError
from ..processes import analytic_moment, paper_literal_moment, sample_ggbm_paths
from .checks import run_suite
from .config import ENV_VAR, SUITES, GridSpec, build_config
from .report import VerificationReport, fmt, parse_records

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common(p):
    p.add_argument("--alpha", type=float)
    p.add_argument("--rho", type=float)
    p.add_argument("--theta", type=float)
    p.add_argument("--grid", help="start:stop:n[:geom]")
    p.add_argument("--paths", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--suite", help=f"one of {', '.join(SUITES)}")
    p.add_argument("--tol-scale", dest="tol_scale", type=float)
    p.add_argument("--workers", type=int)
    p.add_argument("--method", choices=("cholesky", "circulant"))
    p.add_argument("--config", help=f"key = value file (default: ${ENV_VAR})")


def build_parser():
    parser = _Parser(prog="ggrey", description="Gamma-grey measure and process toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = sub.add_parser("sample", help="tempered Gamma-grey Brownian paths as CSV")
    _common(p)
    p = sub.add_parser("ypaths", help="random-time paths t -> t Y as CSV")
    _common(p)
    p = sub.add_parser("moments", help="analytic and printed-form moments on the time grid")
    _common(p)
    p.add_argument("--orders", default="2,4", help="comma-separated even orders")
    p = sub.add_parser("density", help="marginal density of B(Y(t^alpha)) at one time")
    _common(p)
    p.add_argument("--x", dest="xgrid", default="-3:3:61", help="start:stop:n")
    p.add_argument("--time", type=float, default=1.0)
    p.add_argument("--convention", choices=tuple(gv.CONVENTIONS), default="canonical")
    p = sub.add_parser("verify", help="run check suites")
    _common(p)
    p = sub.add_parser("report", help="render a structured records file")
    p.add_argument("--in", dest="infile", required=True)
    return parser


_CONFIG_KEYS = ("alpha", "rho", "theta", "grid", "paths", "seed", "out", "suite", "tol_scale",
                "workers", "method")


@contextlib.contextmanager
def _sink(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def write_csv(fh, header, columns):
    fh.write(",".join(header) + "\n")
    for row in zip(*columns):
        fh.write(",".join(fmt(v) for v in row) + "\n")


def _cmd_sample(cfg, args):
    grid = cfg.grid.time_grid()
    batch = sample_ggbm_paths(cfg.params, grid, cfg.paths, cfg.seed, method=cfg.method, workers=cfg.workers)
    header = ["time"] + [f"path_{i}" for i in range(cfg.paths)]
    with _sink(cfg.out) as fh:
        write_csv(fh, header, [grid.times] + list(batch.values))
    return EXIT_OK


def _cmd_ypaths(cfg, args):
    # t = 0 is allowed here: every path starts at Y(0) = 0
    times = cfg.grid.points()
    rng = np.random.default_rng(cfg.seed)
    paths = tc.sample_Y_path(cfg.rho, times, rng, size=cfg.paths)
    header = ["time"] + [f"path_{i}" for i in range(cfg.paths)]
    with _sink(cfg.out) as fh:
        write_csv(fh, header, [times] + list(paths))
    return EXIT_OK


def _cmd_moments(cfg, args):
    try:
        orders = [int(k) for k in args.orders.split(",") if k.strip()]
    except ValueError:
        raise UsageError(f"bad --orders {args.orders!r}") from None
    if not orders or any(k < 0 for k in orders):
        raise UsageError("--orders needs nonnegative integers")
    times = cfg.grid.time_grid().times
    header, cols = ["time"], [times]
    for k in orders:
        header += [f"moment_{k}", f"literal_{k}"]
        cols.append([analytic_moment(cfg.params, t, k) for t in times])
        cols.append([paper_literal_moment(cfg.params, t, k) for t in times])
    with _sink(cfg.out) as fh:
        write_csv(fh, header, cols)
    return EXIT_OK


def _cmd_density(cfg, args):
    xs = GridSpec.parse(args.xgrid).points()
    params = gv.GoverningParams(cfg.alpha, cfg.rho)
    dens = gv.density_1d(params, xs, args.time, args.convention)
    with _sink(cfg.out) as fh:
        write_csv(fh, ["x", "density"], [xs, dens])
    return EXIT_OK


def _cmd_verify(cfg, args):
    report = VerificationReport(run_suite(cfg.suite, cfg)).scaled(cfg.tol_scale)
    sys.stdout.write(report.to_text())
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(report.to_records())
    return EXIT_OK if report.ok else EXIT_FAIL


def _cmd_report(args):
    try:
        with open(args.infile, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.infile}: {exc.strerror}") from None
    try:
        report = parse_records(text)
    except ValueError as exc:
        raise UsageError(f"{args.infile}: {exc}") from None
    sys.stdout.write(report.to_text())
    return EXIT_OK if report.ok else EXIT_FAIL


_COMMANDS = {"sample": _cmd_sample, "ypaths": _cmd_ypaths, "moments": _cmd_moments,
             "density": _cmd_density, "verify": _cmd_verify}


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        if args.command == "report":
            return _cmd_report(args)
        flags = {k: getattr(args, k) for k in _CONFIG_KEYS}
        cfg = build_config(flags, args.config)
        return _COMMANDS[args.command](cfg, args)
    except UsageError as exc:
        print(f"ggrey: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GGreyError, ArithmeticError, ValueError) as exc:
        print(f"ggrey: error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
