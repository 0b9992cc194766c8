"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
budget exceeded.  Text and CSV output print floats with 15 significant
digits; JSON uses Python's shortest-roundtrip float repr.  Identical
invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import bounds as bounds_mod
from . import eigenfunctions, krawtchouk, spectrum
from .errors import (
    BudgetExceededError,
    InvalidDegreeError,
    InvalidParameterError,
    ZeroFunctionError,
)
from .hamming import DEFAULT_DENSE_LIMIT, build_graph, incidence_matrix

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


@dataclass
class RunConfig:
    dense_limit: int = DEFAULT_DENSE_LIMIT
    workers: int = 1
    merge_eps_scale: float = spectrum.MERGE_EPS_SCALE
    fmt: str = "text"

    def __post_init__(self):
        if self.dense_limit <= 0 or self.workers < 1:
            raise InvalidParameterError("budgets and worker counts must be positive")


def _fmt(x: float) -> str:
    return format(float(x), ".15g")


def _radii(args) -> tuple[int, int]:
    if args.r is not None:
        if args.r1 is not None or args.r2 is not None:
            raise InvalidParameterError("give either --r or --r1/--r2, not both")
        return 0, args.r
    if args.r1 is None or args.r2 is None:
        raise InvalidParameterError("need --r or both --r1 and --r2")
    return args.r1, args.r2


def _workers_from_env(explicit: int | None) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get("BALLSPEC_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError as exc:
            raise InvalidParameterError(f"bad BALLSPEC_THREADS value {env!r}") from exc
    return 1


def _emit_table(table: spectrum.SpectrumTable, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(table.to_dict()))
    elif fmt == "csv":
        print("\n".join(table.csv_lines()))
    else:
        for line in table.lines:
            ts = ";".join(str(t) for t in line.contributors)
            print(f"{_fmt(line.value)} {line.multiplicity} {ts}")


def cmd_spectrum(args) -> int:
    r1, r2 = _radii(args)
    merge_eps = args.merge_eps_scale * (args.n + 1)
    _emit_table(spectrum.full_spectrum(args.n, r1, r2, merge_eps=merge_eps), args.format)
    return EXIT_OK


def cmd_incidence(args) -> int:
    if args.r < 1:
        raise InvalidParameterError("incidence needs r >= 1")
    if args.show_matrix:
        mat = incidence_matrix(args.n, args.r)
        for row in mat:
            print(" ".join(str(int(v)) for v in row))
        return EXIT_OK
    _emit_table(spectrum.full_spectrum(args.n, args.r - 1, args.r), args.format)
    return EXIT_OK


def _verify_cases(max_n: int) -> list[tuple[int, int, int]]:
    cases = []
    for n in range(1, max_n + 1):
        for r2 in range(n // 2 + 1):
            for r1 in range(r2 + 1):
                cases.append((n, r1, r2))
    return cases


def cmd_verify(args, config: RunConfig) -> int:
    if args.all:
        if args.max_n is None:
            raise InvalidParameterError("--all requires --max-n")
        cases = _verify_cases(args.max_n)
        workers = config.workers

        def run(case):
            n, r1, r2 = case
            return spectrum.verify_against_oracle(
                n, r1, r2, tol=args.tol, dense_limit=config.dense_limit
            )

        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                reports = list(pool.map(run, cases))
        else:
            reports = [run(c) for c in cases]
        print("n,r1,r2,vertices,max_deviation,passed")
        ok = True
        for rep in sorted(reports, key=lambda r: (r.n, r.r1, r.r2)):
            ok = ok and rep.passed
            print(
                f"{rep.n},{rep.r1},{rep.r2},{rep.vertex_count},"
                f"{_fmt(rep.max_deviation)},{str(rep.passed).lower()}"
            )
        return EXIT_OK if ok else EXIT_VERIFY_FAIL

    r1, r2 = _radii(args)
    rep = spectrum.verify_against_oracle(
        args.n, r1, r2, tol=args.tol, dense_limit=config.dense_limit
    )
    print(rep.summary())
    return EXIT_OK if rep.passed else EXIT_VERIFY_FAIL


def cmd_krawtchouk(args) -> int:
    if args.eval is not None:
        p = krawtchouk.build(args.n, args.k)
        print(krawtchouk.eval_exact(p, args.eval))
    elif args.coeffs:
        p = krawtchouk.build(args.n, args.k)
        print(f"scale {p.scale}")
        print(" ".join(str(c) for c in p.coeffs))
    elif args.first_root:
        print(_fmt(krawtchouk.first_root(args.n, args.k, args.tol)))
    else:
        p = krawtchouk.build(args.n, args.k)
        rl = krawtchouk.roots(p, args.tol)
        print(" ".join(_fmt(v) for v in rl.values))
    return EXIT_OK


def cmd_bounds(args) -> int:
    if args.log2s is not None:
        log2_s = args.log2s
    elif args.s is not None:
        log2_s = bounds_mod.log2_big(int(args.s))
    else:
        raise InvalidParameterError("need --log2s or --s")
    report = bounds_mod.ball_bound(args.n, log2_s)
    if args.format == "csv":
        print(bounds_mod.BoundsReport.CSV_HEADER)
        print(report.csv_row())
    elif args.format == "text":
        for key, value in report.to_dict().items():
            print(f"{key} {_fmt(value) if isinstance(value, float) else value}")
    else:
        print(json.dumps(report.to_dict()))
    return EXIT_OK


def cmd_eigenfunction(args) -> int:
    r1, r2 = _radii(args)
    if args.y is not None:
        y = int(args.y, 2)
    else:
        y = (1 << args.t) - 1
    fn = eigenfunctions.synthesize(args.n, r1, r2, args.t, y, args.which)
    if args.format == "text":
        print(f"lambda {_fmt(fn.eigenvalue)}")
        print(f"residual {_fmt(fn.residual)}")
        print("coeffs " + " ".join(_fmt(c) for c in fn.coeffs))
    else:
        print(json.dumps(fn.to_dict()))
    return EXIT_OK


def cmd_export(args) -> int:
    r1, r2 = _radii(args)
    g = build_graph(args.n, r1, r2)
    for line in g.edge_lines():
        print(line)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ballspec",
        description="Spectra and eigenfunctions of weight-band subgraphs of the binary cube",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_band(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--r", type=int, default=None, help="ball radius (r1=0)")
        p.add_argument("--r1", type=int, default=None)
        p.add_argument("--r2", type=int, default=None)

    p = sub.add_parser("spectrum", help="closed-form spectrum table")
    add_band(p)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--merge-eps-scale", type=float, default=spectrum.MERGE_EPS_SCALE,
                   help="coincidence threshold is this times (n+1)")

    p = sub.add_parser("verify", help="cross-check the table against the dense oracle")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--r1", type=int, default=None)
    p.add_argument("--r2", type=int, default=None)
    p.add_argument("--all", action="store_true", help="sweep all bands up to --max-n")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--dense-limit", type=int, default=DEFAULT_DENSE_LIMIT)
    p.add_argument("--workers", type=int, default=None,
                   help="worker pool size (default: BALLSPEC_THREADS or 1)")

    p = sub.add_parser("krawtchouk", help="exact polynomial operations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--roots", action="store_true", help="certified roots (default)")
    p.add_argument("--first-root", action="store_true")
    p.add_argument("--eval", type=int, default=None, metavar="X")
    p.add_argument("--coeffs", action="store_true")
    p.add_argument("--tol", type=float, default=krawtchouk.DEFAULT_TOL)

    p = sub.add_parser("bounds", help="entropy/eigenvalue bounds report")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--log2s", type=float, default=None)
    p.add_argument("--s", type=str, default=None, help="cardinality (integer, any size)")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")

    p = sub.add_parser("eigenfunction", help="synthesize an explicit eigenfunction")
    add_band(p)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--y", type=str, default=None, help="origin mask as a bitstring")
    p.add_argument("--which", type=int, default=0)
    p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("incidence", help="spectrum of two adjacent spheres")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--show-matrix", action="store_true")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("export", help="edge list of a band graph, one 'u v' per line")
    add_band(p)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "spectrum":
            return cmd_spectrum(args)
        if args.command == "verify":
            config = RunConfig(
                dense_limit=args.dense_limit,
                workers=_workers_from_env(args.workers),
            )
            return cmd_verify(args, config)
        if args.command == "krawtchouk":
            return cmd_krawtchouk(args)
        if args.command == "bounds":
            return cmd_bounds(args)
        if args.command == "eigenfunction":
            return cmd_eigenfunction(args)
        if args.command == "incidence":
            return cmd_incidence(args)
        if args.command == "export":
            return cmd_export(args)
        raise InvalidParameterError(f"unknown command {args.command}")
    except (InvalidParameterError, InvalidDegreeError, ZeroFunctionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
