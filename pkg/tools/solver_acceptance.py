#!/usr/bin/env python3
"""
Solver acceptance run.

Samples seeded instances, solves each with the concrete solvers and
cross-checks every found vector against the exhaustive oracle:

- restricted Stern and BJMM(2) on (q=13, z=4, n=24, k=12, w=5), 100 seeds, >= 95 found each
- shifted BCJ on full-weight (q=29, z=2, n=20, k=8, w=20), 50 seeds, >= 48 found

Run with: uv run python tools/solver_acceptance.py [--instances 20] [--only stern]
"""

import argparse
import logging
import sys
import time
from dataclasses import replace
from pathlib import Path

import numpy as np
from tqdm import tqdm

SCRIPT_DIR = Path(__file__).parent
PROJECT_ROOT = SCRIPT_DIR.parent
sys.path.insert(0, str(PROJECT_ROOT))

from galois_core.instance import sample_instance  # noqa: E402
from galois_core.oracle import brute_force_solve  # noqa: E402
from shared.debug_log import debug  # noqa: E402
from solvers.config import SolverConfig  # noqa: E402
from solvers.isd import solve  # noqa: E402

logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

# name -> (q, z, n, k, w), config, instances, required successes
RUNS = {
    "stern": ((13, 4, 24, 12, 5), SolverConfig(algorithm="stern", ell=2, v=2), 100, 95),
    "bjmm": ((13, 4, 24, 12, 5),
             SolverConfig(algorithm="bjmm", levels=2, ell=4, v=4, eps=(2, 0)), 100, 95),
    "shifted_bcj": ((29, 2, 20, 8, 20),
                    SolverConfig(algorithm="shifted_bcj", levels=1, ell=4, v=None, eps=(0,)), 50, 48),
}


def run(name: str, instances: int) -> bool:
    params, config, default_count, required = RUNS[name]
    count = instances or default_count
    needed = required if count == default_count else int(np.ceil(count * required / default_count))
    found = mismatches = 0
    started = time.perf_counter()
    for seed in tqdm(range(count), desc=name, unit="inst"):
        instance = sample_instance(*params, seed=seed)
        report = solve(instance, replace(config, seed=seed))
        solutions = brute_force_solve(instance)
        if report.found:
            found += 1
            if not any(np.array_equal(report.e, s) for s in solutions):
                mismatches += 1
                logger.error(f"{name} seed {seed}: reported vector is not an oracle solution")
        if len(solutions) != 1:
            logger.warning(f"{name} seed {seed}: {len(solutions)} solutions")
    elapsed = time.perf_counter() - started
    ok = found >= needed and mismatches == 0
    logger.info(f"{name}: {found}/{count} found (need {needed}), {mismatches} mismatches, {elapsed:.1f} s")
    return ok


def main():
    ap = argparse.ArgumentParser(description="Run the concrete solver acceptance checks")
    ap.add_argument("--instances", type=int, default=0, help="Instances per solver (default: full count)")
    ap.add_argument("--only", choices=sorted(RUNS), action="append", help="Restrict to these solvers")
    args = ap.parse_args()

    debug.set_level("WARN")
    results = {name: run(name, args.instances) for name in (args.only or RUNS)}
    for name, ok in results.items():
        logger.info(f"{name}: {'PASS' if ok else 'FAIL'}")
    sys.exit(0 if all(results.values()) else 1)


if __name__ == "__main__":
    main()
