"""Command line entry point.

Exit codes: 0 success, 1 a verification failed, 2 usage or parameter error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import algebra, bench as bench_mod, verify as verify_mod
from .convolution import ConvMethod, convolve
from .errors import HConvError, SingularSymbol
from .grid import Spectrum
from .io import RunConfig, dump_function, read_function, write_function
from .report import reports_to_json
from .solvers import (
    FredholmProblem,
    HeatProblem,
    fredholm_report,
    heat_estimate_report,
    solve_fredholm,
    solve_heat_convolution,
    solve_heat_spectral,
)
from .transform import TransformMethod, h_forward, h_inverse
from .wiener_levy import check_nonvanishing, wiener_levy_eta

METHODS = ("direct", "spectral", "quadrature", "accelerated")
DEFAULT_SIZES = (257, 1025, 4097)


class UsageError(Exception):
    pass


def _exponent(text: str) -> float:
    if text.lower() in ("inf", "infinity"):
        return math.inf
    try:
        num, _, den = text.partition("/")
        return float(num) / float(den) if den else float(num)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid exponent {text!r}") from None


def _sizes(text: str) -> list[int]:
    if not text.strip():
        return []
    try:
        return [int(s) for s in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid size list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--a", type=float)
    common.add_argument("--b", type=float)
    common.add_argument("--grid-L", dest="grid_L", type=float)
    common.add_argument("--grid-N", dest="grid_N", type=int)
    common.add_argument("--config", help="JSON run configuration; flags take precedence")
    common.add_argument("--seed", type=int)
    common.add_argument("--json", action="store_true", help="machine-readable reports")
    common.add_argument("--output")

    parser = argparse.ArgumentParser(prog="hconv", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, inputs=0, method=None):
        p = sub.add_parser(name, parents=[common], help=help_)
        for flag in ("--input", "--input2", "--input3")[:inputs]:
            p.add_argument(flag, required=True)
        if method:
            p.add_argument("--method", choices=METHODS, default=method)
        return p

    add("transform", "forward transform of a function file", 1, "accelerated")
    add("inverse", "inverse transform of a spectrum file", 1, "accelerated")
    p = add("convolve", "convolution of two function files; --input3 convolves a third", 2,
            "spectral")
    p.add_argument("--input3")
    p = add("power", "k-th convolution power", 1)
    p.add_argument("--k", type=int, required=True)
    p = add("radius", "spectral radius trace", 1)
    p.add_argument("--kmax", type=int, default=20)
    add("wiener-levy", "eta with H eta = Hg / (1 + Hg)", 1)
    add("solve-fredholm", "solve f + f*g = g*k (input: g, input2: k)", 2)
    p = add("solve-heat", "heat equation; method spectral or direct (convolution form)", 1,
            "spectral")
    p.add_argument("--time", type=float, required=True)
    p.add_argument("--diffusion", type=float, default=1.0)
    for flag in ("--p", "--q", "--r"):
        p.add_argument(flag, type=_exponent)
    p = add("verify", "run verification suites")
    p.add_argument("--suite", choices=("all",) + verify_mod.SUITES, default="all")
    p.add_argument("--n-samples", dest="n_samples", type=int, default=50)
    for flag in ("--p", "--q", "--r"):
        p.add_argument(flag, type=_exponent)
    p = add("bench", "direct vs spectral convolution timing table")
    p.add_argument("--sizes", type=_sizes, default=list(DEFAULT_SIZES),
                   help="comma-separated odd sizes, ascending")
    p.add_argument("--repeats", type=int, default=5)
    return parser


def _config(args) -> RunConfig:
    flags = dict(a=args.a, b=args.b, L=args.grid_L, N=args.grid_N, seed=args.seed)
    if args.config:
        return RunConfig.from_file(args.config, **flags)
    return RunConfig().updated(**flags)


def _read(args, path, kind=None):
    grid = None
    if args.grid_L is not None or args.grid_N is not None:
        grid = _config(args).grid
    if kind is None:
        return read_function(path, grid)
    return read_function(path, grid, kind)


def _emit(args, f):
    if args.output:
        write_function(args.output, f)
    else:
        dump_function(f, sys.stdout)


def _transform_method(args):
    if args.method not in ("quadrature", "accelerated"):
        raise UsageError(f"--method {args.method} is not a transform method")
    return TransformMethod(args.method)


def _report_exit(args, reports) -> int:
    if args.json:
        print(reports_to_json(reports))
    else:
        for r in reports:
            print(r.line())
    return 0 if all(r.passed for r in reports) else 1


def run(args) -> int:
    cfg = _config(args)
    params = cfg.params
    cmd = args.command

    if cmd == "transform":
        f = _read(args, args.input)
        _emit(args, h_forward(f, params, method=_transform_method(args)))
    elif cmd == "inverse":
        F = _read(args, args.input, Spectrum)
        _emit(args, h_inverse(F, params, method=_transform_method(args)))
    elif cmd == "convolve":
        if args.method not in ("direct", "spectral"):
            raise UsageError(f"--method {args.method} is not a convolution method")
        method = ConvMethod(args.method)
        f, g = _read(args, args.input), _read(args, args.input2)
        out = convolve(f, g, params, method)
        if args.input3:
            out = convolve(out, _read(args, args.input3), params, method)
        _emit(args, out)
    elif cmd == "power":
        _emit(args, algebra.conv_power(_read(args, args.input), args.k, params))
    elif cmd == "radius":
        trace = algebra.spectral_radius_trace(_read(args, args.input), params, args.kmax)
        out = {"k_max": trace.k_max, "roots": trace.roots.tolist(),
               "gelfand_value": trace.gelfand_value, "relative_gap": trace.relative_gap(),
               "outside_mass": trace.outside_mass}
        if args.json:
            print(json.dumps(out, indent=2, sort_keys=True))
        else:
            for k, root in enumerate(trace.roots, start=1):
                print(f"{k:4d} {root:.12g}")
            print(f"gelfand {trace.gelfand_value:.12g}  gap {trace.relative_gap():.4g}")
    elif cmd == "wiener-levy":
        g = _read(args, args.input)
        thr = cfg.tol("nonvanishing_threshold")
        cert = check_nonvanishing(g, params, thr)
        msg = (f"min|1+Hg| = {cert.min_abs:.6g} at y = {cert.node_argmin:.6g}, "
               f"conditioning {cert.conditioning:.4g}")
        print(msg, file=sys.stderr)
        if not cert.valid:
            print("symbol 1 + Hg vanishes numerically; no inverse", file=sys.stderr)
            return 1
        _emit(args, wiener_levy_eta(g, params, thr))
    elif cmd == "solve-fredholm":
        prob = FredholmProblem(_read(args, args.input), _read(args, args.input2), params)
        f = solve_fredholm(prob, cfg.tol("nonvanishing_threshold"))
        reports = fredholm_report(prob, cfg.tol("fredholm_residual"))
        _emit(args, f)
        if args.json:
            print(reports_to_json(reports), file=sys.stderr)
        return 0 if all(r.passed for r in reports) else 1
    elif cmd == "solve-heat":
        prob = HeatProblem(args.diffusion, args.time, _read(args, args.input), params)
        if args.method == "spectral":
            u = solve_heat_spectral(prob)
        elif args.method == "direct":
            u = solve_heat_convolution(prob, ConvMethod.DIRECT)
        else:
            raise UsageError("solve-heat accepts --method spectral or direct")
        _emit(args, u)
        exps = (args.p, args.q, args.r)
        if any(e is not None for e in exps):
            if None in exps:
                raise UsageError("--p, --q and --r must be given together")
            rep = heat_estimate_report(prob, *exps)
            print(reports_to_json([rep]) if args.json else rep.line(), file=sys.stderr)
            return 0 if rep.passed else 1
    elif cmd == "verify":
        exps = (args.p, args.q, args.r)
        if any(e is not None for e in exps) and None in exps:
            raise UsageError("--p, --q and --r must be given together")
        extra = exps if None not in exps else None
        return _report_exit(args, verify_mod.run_suite(args.suite, cfg, args.n_samples, extra))
    elif cmd == "bench":
        rows = bench_mod.bench(cfg, args.sizes, args.repeats)
        text = bench_mod.to_csv(rows)
        if args.output:
            with open(args.output, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0 if all(r["max_discrepancy"] <= cfg.tol("cross_method") for r in rows) else 1
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except SingularSymbol as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (HConvError, UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
