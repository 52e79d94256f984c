"""Command-line front end: eval, distance, scan, stats.

Exit codes: 0 success, 1 usage error, 2 data error.  Randomized
commands print their seed so every run is replayable.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import codes, recipe, search, tables
from .distance import (
    DEFAULT_BZ_BUDGET,
    low_weight_witness,
    min_distance_bz,
    min_distance_exhaustive,
)

USAGE_ERROR = 1
DATA_ERROR = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _build_parser() -> _Parser:
    p = _Parser(prog="plotkin", description=__doc__)
    default_threads = int(os.environ.get("PLOTKIN_THREADS", "1"))
    p.add_argument("--threads", type=int, default=default_threads,
                   help="cap on internal parallelism (engines are currently serial)")
    sub = p.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate a recipe file")
    pe.add_argument("recipe", help="path to a .rcp recipe")
    pe.add_argument("--out", help="write the generator matrix here")

    pd = sub.add_parser("distance", help="compute or bound a minimum distance")
    pd.add_argument("generator", help="generator matrix file")
    pd.add_argument("--method", choices=("exhaustive", "bz", "witness"),
                    default="bz")
    pd.add_argument("--budget", type=int, default=DEFAULT_BZ_BUDGET,
                    help="max codeword evaluations")
    pd.add_argument("--target", type=int, help="witness search stops at this weight")
    pd.add_argument("--seed", type=int, default=0)

    ps = sub.add_parser("scan", help="Plotkin scan of a bounds snapshot")
    ps.add_argument("--table", required=True)
    ps.add_argument("--q", type=int, required=True)
    ps.add_argument("--nmin", type=int)
    ps.add_argument("--nmax", type=int)
    ps.add_argument("--shortened", action="store_true",
                    help="also emit shortening-derived rows")
    ps.add_argument("--out", help="write findings TSV here (default stdout)")

    pt = sub.add_parser("stats", help="per-q Plotkin coverage statistics")
    pt.add_argument("--table", required=True)
    return p


def _cmd_eval(args) -> int:
    ast = recipe.load_recipe(args.recipe)
    code = recipe.eval_recipe(ast, working_dir=os.path.dirname(os.path.abspath(args.recipe)))
    info = code.d_info
    if info.kind == "unknown":
        dtxt = "d unknown"
    elif info.kind == "exact":
        dtxt = f"d={info.lower}"
    else:
        dtxt = f"d>={info.lower}" + (f" d<={info.upper}" if info.upper is not None else "")
        dtxt += " (propagated)"
    print(f"[{code.n},{code.k}] {dtxt}")
    if args.out:
        codes.save_code(args.out, code)
    return 0


def _cmd_distance(args) -> int:
    code = codes.load_code(args.generator)
    if args.budget < 0:
        print("error: --budget must be >= 0", file=sys.stderr)
        return USAGE_ERROR
    if args.method == "exhaustive":
        res = min_distance_exhaustive(code)
    elif args.method == "bz":
        res = min_distance_bz(code, budget=args.budget)
    else:
        target = args.target if args.target is not None else 1
        res = low_weight_witness(code, target=target, budget=args.budget,
                                 seed=args.seed)
    print(res)
    return 0


def _cmd_scan(args) -> int:
    table = tables.load_snapshot(args.table)
    n_range = None
    if args.nmin is not None or args.nmax is not None:
        half = tables.LIMITS.get(args.q, 0) // 2
        n_range = (args.nmin or 1, args.nmax or half)
    findings = search.plotkin_scan(table, args.q, n_range)
    if args.shortened:
        findings = findings + search.shortened_findings(table, findings)
    tsv = search.findings_to_tsv(findings)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(tsv)
    else:
        sys.stdout.write(tsv)
    return 0


def _cmd_stats(args) -> int:
    table = tables.load_snapshot(args.table)
    print("q\tn_even_cells\tplotkin\tpercent")
    for q in sorted(tables.LIMITS):
        total, achievable, pct = search.stats(table, q)
        print(f"{q}\t{total}\t{achievable}\t{pct}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else USAGE_ERROR
    if args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return USAGE_ERROR
    try:
        if args.command == "eval":
            return _cmd_eval(args)
        if args.command == "distance":
            return _cmd_distance(args)
        if args.command == "scan":
            return _cmd_scan(args)
        if args.command == "stats":
            return _cmd_stats(args)
    except (recipe.RecipeError, tables.TableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_ERROR
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_ERROR
    return USAGE_ERROR  # pragma: no cover


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
