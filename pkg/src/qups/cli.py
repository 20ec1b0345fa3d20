"""
Command-line front end.

Subcommands: ``gen``, ``analyze``, ``profile``, ``search`` and
``verify-bounds``. Exit codes: 0 success, 2 usage or invalid parameters,
3 resource budget exceeded, 4 a verification check failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .errors import DomainError, ResourceError
from .fileformat import dumps, read_pointset
from .generators import (gen_fibonacci, gen_frolov_points, gen_grid_aniso, gen_grid_regular,
                         gen_hexagonal_cf, gen_kronecker, gen_rank1, named_alpha)
from .lattice import dual_shortest
from .metrics import (covering_radius_enclosure, default_grid_resolution, nestedness_check,
                      separation_radius, star_discrepancy_exact, star_discrepancy_lb)
from .numtheory import is_prime
from .search import SearchConfig, auto_thresholds, search_generators
from .verify import SUITES, format_table, run_suite

EXIT_OK, EXIT_USAGE, EXIT_RESOURCE, EXIT_VERIFY = 0, 2, 3, 4

KINDS = ("rank1", "fibonacci", "hexcf", "kronecker", "frolov", "grid", "grid-aniso")
METRICS = ("sep", "cover", "mesh", "dstar", "dual")


class UsageError(DomainError):
    pass


# ---------------------------------------------------------------------------
# argument helpers


def int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.replace(" ", "").split(",") if v]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def parse_indices(spec: str) -> list[int]:
    """``pow2:a..b`` gives ``2**a, ..., 2**b``; ``a..b`` a range; else a comma list."""
    spec = spec.strip()
    try:
        if spec.startswith("pow2:"):
            lo, hi = spec[5:].split("..")
            return [2 ** i for i in range(int(lo), int(hi) + 1)]
        if ".." in spec:
            lo, hi = spec.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(v) for v in spec.split(",") if v]
    except ValueError:
        raise UsageError(f"bad index spec {spec!r}; use pow2:a..b, a..b or a comma list") from None


def parse_alpha(name: str, dim: int):
    if name in ("pow2", "golden", "liouville"):
        return named_alpha(name, dim)
    fields = [v for v in name.split(",") if v]
    if len(fields) != dim:
        raise UsageError(f"alpha has {len(fields)} components but --dim is {dim}")
    return tuple(fields)


def _rational(text):
    if text is None:
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"expected a rational number, got {text!r}") from None


def _require(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--kind {args.kind} requires {', '.join(missing)}")


def build_pointset(args):
    """Point set described by the shared generator flags."""
    kind = args.kind
    if kind == "rank1":
        _require(args, "g", "N")
        return gen_rank1(args.g, args.N)
    if kind == "fibonacci":
        _require(args, "m")
        return gen_fibonacci(args.m)
    if kind == "hexcf":
        _require(args, "k")
        return gen_hexagonal_cf(args.k)
    if kind == "kronecker":
        _require(args, "count")
        return gen_kronecker(parse_alpha(args.alpha, args.dim), args.count, args.include_zero)
    if kind == "frolov":
        _require(args, "a")
        delta = None
        if args.delta is not None:
            delta = [_rational(v) for v in args.delta.split(",")]
        return gen_frolov_points(args.dim, _rational(args.a), delta)
    if kind == "grid":
        _require(args, "m")
        return gen_grid_regular(args.m, args.dim)
    if kind == "grid-aniso":
        _require(args, "m")
        return gen_grid_aniso(args.m, args.dim)
    raise UsageError(f"unknown kind {kind!r}")


def add_generator_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--dim", type=int, default=2, help="dimension (kronecker, frolov, grids)")
    p.add_argument("--m", type=int, help="Fibonacci index or grid size")
    p.add_argument("--k", type=int, help="hexagonal family index")
    p.add_argument("--g", type=int_list, help="generating vector, e.g. 1,5")
    p.add_argument("--N", type=int, help="number of rank-1 points")
    p.add_argument("--alpha", default="pow2",
                   help="pow2, golden, liouville or comma-separated decimals")
    p.add_argument("--count", type=int, help="number of Kronecker points")
    p.add_argument("--include-zero", action="store_true", help="start Kronecker at n = 0")
    p.add_argument("--a", help="Frolov scaling factor (rational)")
    p.add_argument("--delta", help="Frolov shift, comma-separated rationals")


def _write(text: str, out) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


# ---------------------------------------------------------------------------
# subcommands


def cmd_gen(args) -> int:
    P = build_pointset(args)
    _write(dumps(P, [f"generated by qups {__version__}"]), args.out)
    return EXIT_OK


def cmd_analyze(args) -> int:
    metrics = [m for m in args.metrics.split(",") if m]
    if not metrics:
        raise UsageError("--metrics must name at least one of " + ",".join(METRICS))
    unknown = sorted(set(metrics) - set(METRICS))
    if unknown:
        raise UsageError(f"unknown metrics {unknown}; choose from {','.join(METRICS)}")
    P = read_pointset(args.input)
    p = args.norm
    report = {"tool": "qups", "version": __version__, "input": str(args.input),
              "n": P.n, "d": P.d, "p": args.norm_label, "representation": P.representation,
              "family": P.family,
              "params": dict(P.params, metrics=metrics, grid=args.grid),
              "errors": {}}
    q = None
    if "sep" in metrics or "mesh" in metrics:
        try:
            q = separation_radius(P, p)
            report["q"] = float(q)
            if isinstance(q, Fraction):
                report["q_exact"] = str(q)
        except DomainError as exc:
            report["errors"]["sep"] = str(exc)
    if "cover" in metrics or "mesh" in metrics:
        try:
            cov = covering_radius_enclosure(P, p, args.grid)
            report["h_lo"], report["h_hi"] = cov.lower, cov.upper
            report["params"]["grid"] = cov.resolution
            if q is not None and "mesh" in metrics:
                report["rho_lo"], report["rho_hi"] = cov.lower / float(q), cov.upper / float(q)
        except ResourceError as exc:
            report["errors"]["cover"] = str(exc)
    if "dstar" in metrics:
        try:
            ds = star_discrepancy_exact(P)
            report["dstar"], report["dstar_is_lower_bound"] = float(ds), False
            if isinstance(ds, Fraction):
                report["dstar_exact"] = str(ds)
        except ResourceError:
            report["dstar"] = float(star_discrepancy_lb(P, args.trials, args.seed))
            report["dstar_is_lower_bound"] = True
    if "dual" in metrics:
        if args.g is None and args.N is None and "g" in P.params and "N" in P.params:
            args.g, args.N = P.params["g"], P.params["N"]
        if args.g is None or args.N is None:
            report["errors"]["dual"] = "dual figures need --g and --N for the rank-1 lattice"
        else:
            report["kappa"] = int(dual_shortest(args.g, args.N, 1).value)
            report["sigma"] = 1.0 / dual_shortest(args.g, args.N, 2).value
            report["params"].update(g=args.g, N=args.N)
    _write(json.dumps(report, indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_RESOURCE if report["errors"] and all(
        k in report["errors"] for k in metrics) else EXIT_OK


PROFILE_COLUMNS = ["index", "n", "q", "h_lo", "h_hi", "rho_lo", "rho_hi", "q_scaled", "nested"]


def cmd_profile(args) -> int:
    indices = parse_indices(args.indices)
    if any(b <= a for a, b in zip(indices, indices[1:])) or not indices:
        raise UsageError("indices must be non-empty and strictly increasing")
    if args.kind == "kronecker":
        args.count = indices[-1]
        full = build_pointset(args)
        sets = [full.prefix(i) for i in indices]
    else:
        sets = []
        for i in indices:
            if args.kind == "frolov":
                args.a = str(i)
            elif args.kind in ("fibonacci", "grid", "grid-aniso"):
                args.m = i
            elif args.kind == "hexcf":
                args.k = i
            elif args.kind == "rank1":
                raise UsageError("profile of rank1 needs a family; use fibonacci or hexcf")
            sets.append(build_pointset(args))
    grid = args.grid or default_grid_resolution(sets[-1].d, sets[-1].n)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(PROFILE_COLUMNS)
    prev = None
    for i, P in zip(indices, sets):
        q = float(separation_radius(P, args.norm))
        cov = covering_radius_enclosure(P, args.norm, grid)
        nested = "" if prev is None else str(nestedness_check(prev, P)).lower()
        writer.writerow([i, P.n, repr(q), repr(cov.lower), repr(cov.upper), repr(cov.lower / q),
                         repr(cov.upper / q), repr(q * P.n ** (1.0 / P.d)), nested])
        prev = P
    _write(buf.getvalue(), args.out)
    return EXIT_OK


def cmd_search(args) -> int:
    if not is_prime(args.N):
        raise UsageError(f"N = {args.N} is not prime; the search requires a prime N")
    if args.thresholds == "auto":
        kd, kp = auto_thresholds(args.N, args.dim)
    else:
        kd, kp = args.kappa_dual_min, args.kappa_primal_min
    cfg = SearchConfig(N=args.N, d=args.dim, mode=args.mode, sample_size=args.samples,
                       seed=args.seed, kappa_dual_min=kd, kappa_primal_min=kp,
                       dstar_max=args.dstar_max, include_zero=args.include_zero,
                       measure_mesh=args.mesh, budget=args.budget)
    res = search_generators(cfg)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([f"g{j + 1}" for j in range(args.dim)] + ["kappa_primal", "kappa_dual", "dstar", "rho_hi"])
    for rec in res.passing:
        row = rec.row()
        writer.writerow(list(rec.g) + [repr(row["kappa_primal"]), row["kappa_dual"],
                                       "" if row["dstar"] is None else repr(row["dstar"]),
                                       "" if row["rho_hi"] is None else repr(row["rho_hi"])])
    _write(buf.getvalue(), args.out)
    summary = dict(res.summary(), tool="qups", version=__version__, seed=args.seed,
                   threshold_source=args.thresholds)
    text = json.dumps(summary, indent=2, sort_keys=True) + "\n"
    if args.summary:
        Path(args.summary).write_text(text)
    elif args.out not in (None, "-"):
        sys.stdout.write(text)
    return EXIT_RESOURCE if res.truncated else EXIT_OK


def cmd_verify_bounds(args) -> int:
    rows = run_suite(args.suite)
    print(format_table(rows))
    failed = [r for r in rows if not r.ok]
    if failed:
        for r in failed:
            print(f"violated: {r.suite}: {r.name}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qups", description="Lattice point sets and quasi-uniformity diagnostics.")
    parser.add_argument("--version", action="version", version=f"qups {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a point set file")
    add_generator_flags(p)
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", help="measure a point set file")
    p.add_argument("input")
    p.add_argument("--metrics", default="sep,cover,mesh", help=f"comma list from {','.join(METRICS)}")
    p.add_argument("--norm", default="inf", choices=["1", "2", "inf"])
    p.add_argument("--grid", type=int, help="covering grid resolution per axis")
    p.add_argument("--trials", type=int, default=20_000, help="corner samples for the D* lower bound")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--g", type=int_list, help="rank-1 generating vector, for dual figures")
    p.add_argument("--N", type=int, help="rank-1 modulus, for dual figures")
    p.add_argument("--out", help="output JSON path (default stdout)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("profile", help="quasi-uniformity along a growing family")
    add_generator_flags(p)
    p.add_argument("--indices", required=True, help="pow2:a..b, a..b or a comma list")
    p.add_argument("--norm", default="inf", choices=["1", "2", "inf"])
    p.add_argument("--grid", type=int, help="fixed covering grid resolution")
    p.add_argument("--out", help="output CSV path (default stdout)")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("search", help="scan rank-1 generating vectors for prime N")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--thresholds", choices=["auto", "manual"], default="manual")
    p.add_argument("--kappa-dual-min", type=float, default=0.0)
    p.add_argument("--kappa-primal-min", type=float, default=0.0)
    p.add_argument("--dstar-max", type=float)
    p.add_argument("--mode", choices=["exhaustive", "random"], default="exhaustive")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--include-zero", action="store_true", help="allow zero coordinates in g")
    p.add_argument("--mesh", action="store_true", help="measure the mesh ratio of passing g")
    p.add_argument("--budget", type=int, default=1_000_000, help="maximum vectors scanned")
    p.add_argument("--out", help="CSV of passing vectors (default stdout)")
    p.add_argument("--summary", help="summary JSON path")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify-bounds", help="run the bound-checking suites")
    p.add_argument("--suite", default="all", choices=list(SUITES) + ["all"])
    p.set_defaults(func=cmd_verify_bounds)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "norm", None) is not None:
        args.norm_label = args.norm
        args.norm = math.inf if args.norm == "inf" else float(args.norm)
    try:
        return args.func(args)
    except ResourceError as exc:
        print(f"qups: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except DomainError as exc:
        print(f"qups: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"qups: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
