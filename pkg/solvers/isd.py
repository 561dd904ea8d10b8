"""
Restricted Prange, Stern/Dumer and BJMM(a) / BJMM(a)+ solvers.

All three share the iteration engine; they differ in the level tree:
Prange checks e2 = 0 only, Stern builds one concatenation merge, BJMM
adds a representation merges on top.
"""

from dataclasses import replace
from typing import Optional

from galois_core.instance import DecodingInstance
from shared.debug_log import debug
from shared.errors import ConfigError
from solvers.config import (
    SolverConfig,
    default_iteration_cap,
    merge_windows,
    validate_config,
    variant_for,
)
from solvers.engine import IterationPlan, run_solver
from solvers.report import SolverReport


def _plan(instance: DecodingInstance, config: SolverConfig) -> IterationPlan:
    shapes = validate_config(config, instance.n, instance.k, instance.w, instance.restricted)
    variant = variant_for(config, instance.restricted)
    k_ell = instance.k + config.ell
    windows = merge_windows(config, shapes, variant, k_ell, instance.z, instance.q)
    return IterationPlan(instance=instance, shapes=shapes, windows=windows, ell=config.ell)


def _run(instance: DecodingInstance, config: SolverConfig) -> SolverReport:
    plan = _plan(instance, config)
    cap = config.iteration_cap
    if cap is None:
        cap = default_iteration_cap(instance.n, instance.k, instance.w, config.ell, config.v)
    debug.debug(f"{config.algorithm}: l={config.ell} v={config.v} shapes={plan.shapes} "
                f"windows={plan.windows} cap={cap}")
    return run_solver(lambda counter: plan, config, cap)


def solve_prange(instance: DecodingInstance, config: Optional[SolverConfig] = None) -> SolverReport:
    """Restricted Prange: s1 itself must be the error on the redundancy positions."""
    config = replace(config or SolverConfig(), algorithm="prange")
    return _run(instance, config)


def solve_stern(instance: DecodingInstance, config: SolverConfig) -> SolverReport:
    """Restricted Stern/Dumer: one concatenation merge on the l-symbol window."""
    return _run(instance, replace(config, algorithm="stern", levels=0))


def solve_bjmm(instance: DecodingInstance, config: SolverConfig, variant: str = "plain") -> SolverReport:
    """
    Restricted BJMM(a) (variant="plain") or BJMM(a)+ (variant="plus_z2",
    "plus_z4" or "plus_z6", matching the instance's z).
    """
    algorithm = "bjmm" if variant == "plain" else "bjmm_plus"
    config = replace(config, algorithm=algorithm)
    resolved = variant_for(config, instance.restricted)
    if resolved != variant:
        raise ConfigError(f"Variant {variant} does not match z={instance.z} (expected {resolved})")
    return _run(instance, config)


def solve(instance: DecodingInstance, config: SolverConfig) -> SolverReport:
    """Dispatch on config.algorithm."""
    if config.algorithm == "prange":
        return solve_prange(instance, config)
    if config.algorithm == "stern":
        return solve_stern(instance, config)
    if config.algorithm == "bjmm":
        return solve_bjmm(instance, config, "plain")
    if config.algorithm == "bjmm_plus":
        return solve_bjmm(instance, config, variant_for(config, instance.restricted))
    if config.algorithm == "shifted_bcj":
        from solvers.shifted import solve_shifted_bcj
        return solve_shifted_bcj(instance, config)
    raise ConfigError(f"Unknown algorithm {config.algorithm!r}")
