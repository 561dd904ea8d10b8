"""
Shifted BCJ for z=2.

A full-weight error in {1, -1}^n is shifted to e~ = (e + 1)/2 in {0, 1}^n
with syndrome s~ = (s + 1 H^T)/2. The binary instance has weight about
n/2 and is solved with -1 entries allowed in intermediate lists; eps_i
ones and eps_i minus ones cancel per level.
"""

import math
from dataclasses import replace
from typing import List, Optional

import numpy as np

from galois_core.error_sets import binary_set
from galois_core.instance import DecodingInstance
from galois_core.linalg import matmul_mod
from shared.debug_log import debug
from shared.errors import ConfigError, InputError
from solvers.config import (
    SolverConfig,
    check_weights,
    default_iteration_cap,
    merge_windows,
    validate_config,
)
from solvers.engine import IterationPlan, run_solver
from solvers.report import SolverReport


def _require_z2(instance: DecodingInstance):
    if instance.z != 2:
        raise InputError(f"The shift transform needs z=2, got z={instance.z}")


def shift_transform(instance: DecodingInstance, weight: Optional[int] = None) -> DecodingInstance:
    """
    Binary instance (H, s~, w~) of a z=2 instance.

    w~ is `weight` when given, else the number of +1 entries of the
    planted error, else n // 2.
    """
    _require_z2(instance)
    q, n = instance.q, instance.n
    half = pow(2, -1, q)
    ones_syndrome = matmul_mod(np.ones(n, dtype=np.int64), instance.H.T, q)
    s_shift = np.mod((instance.s + ones_syndrome) * half, q)

    planted = None
    e = instance.planted_e
    if e is not None and np.all(e != 0):
        planted = np.mod((e + 1) * half, q)
    if weight is None:
        weight = int(planted.sum()) if planted is not None else n // 2
    if planted is not None and int(planted.sum()) != weight:
        planted = None

    return DecodingInstance(restricted=binary_set(instance.field), n=n, k=instance.k, w=weight,
                            H=instance.H, s=s_shift, planted_e=planted, seed=instance.seed)


def unshift(e_shift: np.ndarray, q: int) -> np.ndarray:
    """e = 2 e~ - 1."""
    return np.mod(2 * np.asarray(e_shift, dtype=np.int64) - 1, q)


def weight_sweep(n: int) -> List[int]:
    """floor(n/2) +- 2 sqrt(n), nearest first."""
    center = n // 2
    radius = math.ceil(2 * math.sqrt(n))
    weights = [center]
    for d in range(1, radius + 1):
        for w in (center + d, center - d):
            if 0 <= w <= n:
                weights.append(w)
    return weights


def choose_v(config: SolverConfig, n: int, k: int, w_shift: int):
    """v closest to w~ (k+l)/n that satisfies the level rules, with its shapes."""
    k_ell = k + config.ell
    if config.v is not None:
        return config.v, check_weights(config, "shifted", n, k, w_shift, config.v)
    ideal = w_shift * k_ell / n
    for v in sorted(range(k_ell + 1), key=lambda x: (abs(x - ideal), x)):
        try:
            return v, check_weights(config, "shifted", n, k, w_shift, v)
        except ConfigError:
            continue
    raise ConfigError(f"No admissible v for weight {w_shift}")


def solve_shifted_bcj(instance: DecodingInstance, config: SolverConfig) -> SolverReport:
    """
    Solve a z=2 instance through its shifted binary instance.

    The shifted weight comes from the planted error when present; otherwise
    iterations cycle over weight_sweep(n).
    """
    _require_z2(instance)
    config = replace(config, algorithm="shifted_bcj")
    if instance.w != instance.n:
        debug.warn(f"shifted_bcj targets full weight; w={instance.w} < n={instance.n}")
    validate_config(replace(config, v=None), instance.n, instance.k, instance.w, binary_set(instance.field))

    planted = shift_transform(instance).planted_e
    weights = [int(planted.sum())] if planted is not None else weight_sweep(instance.n)

    plans, caps = [], []
    for w_shift in weights:
        shifted = shift_transform(instance, w_shift)
        v, shapes = choose_v(config, instance.n, instance.k, w_shift)
        windows = merge_windows(config, shapes, "shifted", instance.k + config.ell, 2, instance.q)
        plans.append(IterationPlan(instance=shifted, shapes=shapes, windows=windows, ell=config.ell,
                                   original=instance,
                                   to_original=lambda e, q=instance.q: unshift(e, q)))
        caps.append(default_iteration_cap(instance.n, instance.k, w_shift, config.ell, v))
        debug.debug(f"shifted_bcj: w~={w_shift} v={v} shapes={shapes} windows={windows}")

    cap = config.iteration_cap or len(plans) * max(caps)
    return run_solver(lambda counter: plans[counter % len(plans)], config, cap)
