"""
Command-line front end.

    rsdp gen       --q 13 --z 4 --n 24 --k 12 --w 5 --seed 7 --out inst.json
    rsdp solve     inst.json --algorithm stern --ell 2 --v 2
    rsdp oracle    inst.json
    rsdp estimate  --q 157 --z 4 --n 312 --R 0.5 --W 0.34 --algorithm bjmm_plus:2
    rsdp sweep     --q 157 --z 2 --R 0.5 --grid 0:1:0.02 --algorithm stern --algorithm bjmm:2
    rsdp table

Payloads (JSON, CSV) go to stdout or --out; progress goes to stderr.
Exit codes: 0 success, 2 usage or input error, 3 solver exhausted.
"""

import argparse
import json
import math
import sys
from pathlib import Path
from typing import List, Optional

from asymptotics.optimizer import OptimizerSettings
from asymptotics.security import AlgorithmSpec, parse_grid, security_bits, sweep_curve
from asymptotics.table import report_csv, table_report
from galois_core.instance import instance_to_json, read_instance, sample_instance
from galois_core.oracle import brute_force_solve
from galois_core.uniqueness import uniqueness_log2
from shared.debug_log import debug
from shared.errors import ConfigError, InputError, RSDPError
from shared.settings import get_settings, load_settings, use_settings
from solvers.config import ALGORITHMS, SolverConfig
from solvers.isd import solve
from solvers.planner import plan_config

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_EXHAUSTED = 3


def _int_tuple(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from None


def _emit(text: str, out: Optional[str]) -> None:
    """Write a payload to --out, or to stdout."""
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
        debug.info(f"Wrote {out}")
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def _optimizer_settings(args) -> OptimizerSettings:
    overrides = {}
    if getattr(args, "max_mem", None) is not None:
        overrides["max_mem"] = args.max_mem
    if getattr(args, "restricted_base", False):
        overrides["restricted_base"] = True
    return OptimizerSettings.from_settings(**overrides)


def cmd_gen(args) -> int:
    instance = sample_instance(args.q, args.z, args.n, args.k, args.w, args.seed)
    value, unique = uniqueness_log2(args.n, args.k, args.w, args.q, args.z)
    debug.info(f"log2 expected solutions = {value:.3f} ({'unique' if unique else 'not unique'} w.h.p.)")
    _emit(instance_to_json(instance), args.out)
    return EXIT_OK


def _default_v(args) -> Optional[int]:
    if args.v is not None:
        return args.v
    return None if args.algorithm == "shifted_bcj" else 0


def cmd_solve(args) -> int:
    instance = read_instance(args.instance)
    common = dict(seed=args.seed, iteration_cap=args.iteration_cap, threads=args.threads,
                  audit=args.audit or None)
    if args.auto:
        config = plan_config(instance, args.algorithm, args.levels or 2, **common)
    else:
        config = SolverConfig(algorithm=args.algorithm, levels=args.levels or 0, ell=args.ell,
                              v=_default_v(args), eps=args.eps or (), b=args.b or (), c=args.c or (),
                              windows=args.windows, **common)
    report = solve(instance, config)
    _emit(report.to_json(), args.out)
    return EXIT_OK if report.found else EXIT_EXHAUSTED


def cmd_oracle(args) -> int:
    instance = read_instance(args.instance)
    limit = args.work_limit if args.work_limit is not None else get_settings().oracle.work_limit
    solutions = brute_force_solve(instance, limit)
    debug.info(f"{len(solutions)} solution(s)")
    _emit(json.dumps([[int(x) for x in e] for e in solutions], separators=(",", ":")) + "\n", args.out)
    return EXIT_OK


def _resolve_weight(args, n: int) -> tuple:
    if (args.k is None) == (args.R is None):
        raise InputError("Give exactly one of --k and --R")
    if (args.w is None) == (args.W is None):
        raise InputError("Give exactly one of --w and --W")
    k = args.k if args.k is not None else round(args.R * n)
    w = args.w if args.w is not None else round(args.W * n)
    return k, w


def cmd_estimate(args) -> int:
    k, w = _resolve_weight(args, args.n)
    spec = AlgorithmSpec.parse(args.algorithm)
    if args.levels is not None:
        spec = AlgorithmSpec(spec.name, args.levels)
    estimate = security_bits(args.q, args.z, args.n, k, w, spec, _optimizer_settings(args))
    _emit(json.dumps(estimate.to_dict(), indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    if (args.q is None) == (args.Q is None):
        raise InputError("Give exactly one of --q and --Q")
    Q = math.log2(args.q) if args.q is not None else args.Q
    algorithms = [AlgorithmSpec.parse(text) for text in (args.algorithm or ["stern"])]
    table = sweep_curve(Q, args.z, args.R, parse_grid(args.grid), algorithms, _optimizer_settings(args))
    _emit(table.to_csv(), args.out)
    return EXIT_OK


def cmd_table(args) -> int:
    entries = table_report(settings=_optimizer_settings(args))
    _emit(report_csv(entries), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rsdp", description="Restricted syndrome decoding toolkit")
    parser.add_argument("--verbose", action="store_true", help="Print debug messages")
    parser.add_argument("--quiet", action="store_true", help="Print errors only")
    parser.add_argument("--config", help="Settings TOML (default: data/rsdp.toml)")
    parser.add_argument("--threads", type=int, default=None, help="Solver worker threads (0 = one per CPU)")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="Sample an instance with a planted solution")
    gen.add_argument("--q", type=int, required=True)
    gen.add_argument("--z", type=int, required=True)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--k", type=int, required=True)
    gen.add_argument("--w", type=int, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", help="Instance file (default: stdout)")
    gen.set_defaults(handler=cmd_gen)

    slv = sub.add_parser("solve", help="Run an ISD solver on an instance file")
    slv.add_argument("instance")
    slv.add_argument("--algorithm", choices=ALGORITHMS, default="stern")
    slv.add_argument("--levels", type=int, default=None, help="Representation levels (bjmm family)")
    slv.add_argument("--ell", type=int, default=0)
    slv.add_argument("--v", type=int, default=None, help="Weight on the k+l information positions")
    slv.add_argument("--eps", type=_int_tuple, help="Cancelling overlaps per level, e.g. 2,0")
    slv.add_argument("--b", type=_int_tuple, help="E_plus overlaps per level")
    slv.add_argument("--c", type=_int_tuple, help="Absorbed E_plus pairs per level")
    slv.add_argument("--windows", type=_int_tuple, help="Cumulative windows c_1,...,c_a")
    slv.add_argument("--iteration-cap", type=int, default=None)
    slv.add_argument("--seed", type=int, default=0)
    slv.add_argument("--auto", action="store_true", help="Derive the configuration from the asymptotic optimum")
    slv.add_argument("--audit", action="store_true", help="Check every intermediate list")
    slv.add_argument("--out", help="Report file (default: stdout)")
    slv.set_defaults(handler=cmd_solve)

    orc = sub.add_parser("oracle", help="List every solution by exhaustive search")
    orc.add_argument("instance")
    orc.add_argument("--work-limit", type=int, default=None)
    orc.add_argument("--out")
    orc.set_defaults(handler=cmd_oracle)

    est = sub.add_parser("estimate", help="Asymptotic security estimate")
    est.add_argument("--q", type=int, required=True)
    est.add_argument("--z", type=int, required=True)
    est.add_argument("--n", type=int, required=True)
    est.add_argument("--k", type=int)
    est.add_argument("--R", type=float)
    est.add_argument("--w", type=int)
    est.add_argument("--W", type=float)
    est.add_argument("--algorithm", default="bjmm_plus:2", help="stern, bjmm:A, bjmm_plus:A or shifted_bcj:A")
    est.add_argument("--levels", type=int, default=None)
    est.add_argument("--max-mem", type=float, default=None, help="Cap on the memory exponent")
    est.add_argument("--restricted-base", action="store_true", help="No E_plus symbols in base lists")
    est.add_argument("--out")
    est.set_defaults(handler=cmd_estimate)

    swp = sub.add_parser("sweep", help="Optimized F over a grid of weights (CSV)")
    swp.add_argument("--q", type=int)
    swp.add_argument("--Q", type=float, help="log2 q, instead of --q")
    swp.add_argument("--z", type=int, required=True)
    swp.add_argument("--R", type=float, default=0.5)
    swp.add_argument("--grid", default="0:1:0.02", help="start:stop:step or a comma separated list")
    swp.add_argument("--algorithm", action="append", help="Repeatable; e.g. stern, bjmm:2, bjmm_plus:3")
    swp.add_argument("--max-mem", type=float, default=None)
    swp.add_argument("--out")
    swp.set_defaults(handler=cmd_sweep)

    tbl = sub.add_parser("table", help="Recompute the work factors of published parameter sets (CSV)")
    tbl.add_argument("--out")
    tbl.set_defaults(handler=cmd_table)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = load_settings(args.config) if args.config else get_settings()
        use_settings(settings)
        try:
            debug.set_level(settings.logging.level)
        except ValueError as e:
            raise ConfigError(str(e)) from e
        if args.verbose:
            debug.set_level("DEBUG")
        if args.quiet:
            debug.set_level("ERROR")
        return args.handler(args)
    except RSDPError as e:
        debug.error(str(e))
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())
