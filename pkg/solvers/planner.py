"""
Finite configurations from the asymptotic optimum (`solve --auto`).

The optimizing L, V, E_i, B_i, C_i are scaled by n and rounded to the
nearest integers that satisfy the level parity rules. When the rounded
configuration is rejected the overlaps are dropped.
"""

from dataclasses import replace
from typing import List, Optional

from asymptotics.optimizer import OptimizerSettings
from asymptotics.security import AlgorithmSpec, security_bits
from galois_core.instance import DecodingInstance
from shared.debug_log import debug
from shared.errors import ConfigError
from solvers.config import SolverConfig, validate_config

ESTIMATED = ("stern", "bjmm", "bjmm_plus", "shifted_bcj")


def _clip(x: int, lo: int, hi: int) -> int:
    return max(lo, min(hi, x))


def _with_parity(x: int, parity: int, lo: int, hi: int) -> int:
    """Value nearest to x in [lo, hi] with x % 2 == parity (lo when none fits)."""
    for d in range(0, hi - lo + 2):
        for cand in (x - d, x + d):
            if lo <= cand <= hi and cand % 2 == parity:
                return cand
    return lo


def _scale_levels(variant: str, levels: int, n: int, v: int, E, B, C) -> tuple:
    eps: List[int] = []
    bs: List[int] = []
    cs: List[int] = []
    v_prev, m_prev = v, 0
    for i in range(levels):
        last = i == levels - 1
        e = max(0, round(E[i] * n))
        b = c = 0
        if variant in ("plus_z2", "plus_z4"):
            c = _with_parity(round(C[i] * n), m_prev % 2, 0, m_prev)
            b = _clip(round(B[i] * n), 0, v_prev // 2)
            v_next = v_prev // 2 + e + c
            if not last and v_next % 2:
                e = e + 1 if e == 0 else e - 1
            m_next = (m_prev - c) // 2 + b
            if not last and m_next % 2:
                b = b + 1 if b < v_prev // 2 else b - 1
            v_prev, m_prev = v_prev // 2 + e + c, (m_prev - c) // 2 + b
        elif variant == "plus_z6":
            b = _clip(round(B[i] * n), 0, v_prev // 2)
            if not last and (v_prev // 2 + e + b) % 2:
                e = e + 1 if e == 0 else e - 1
            v_prev = v_prev // 2 + e + b
        elif variant == "shifted":
            if not last and (m_prev // 2 + e) % 2:
                e = e + 1 if e == 0 else e - 1
            v_prev, m_prev = v_prev // 2 + e, m_prev // 2 + e
        else:
            if not last and (v_prev // 2 + e) % 2:
                e = e + 1 if e == 0 else e - 1
            v_prev = v_prev // 2 + e
        eps.append(e)
        bs.append(b)
        cs.append(c)
    return tuple(eps), tuple(bs), tuple(cs)


def plan_config(instance: DecodingInstance, algorithm: str, levels: int = 2, seed: int = 0,
                settings: Optional[OptimizerSettings] = None, **overrides) -> SolverConfig:
    """
    SolverConfig for `instance` derived from the optimized asymptotic parameters.

    Args:
        instance: Instance to be solved
        algorithm: prange, stern, bjmm, bjmm_plus or shifted_bcj
        levels: Representation levels of the BJMM family
        seed: Master seed of the run
        settings: Optimizer settings for the estimate
        **overrides: Further SolverConfig fields (threads, iteration_cap, ...)
    """
    n, k, w = instance.n, instance.k, instance.w
    if algorithm == "prange":
        return SolverConfig(algorithm="prange", seed=seed, **overrides)
    if algorithm not in ESTIMATED:
        raise ConfigError(f"Unknown algorithm {algorithm!r}")

    spec = AlgorithmSpec(algorithm, levels)
    estimate = security_bits(instance.q, instance.z, n, k, w, spec, settings)
    params = estimate.result.params
    variant = spec.model_variant(instance.z)
    depth = spec.levels

    ell = _clip(round(params.L * n), 0, n - k)
    k_ell = k + ell
    if variant == "shifted":
        v = None
        base_v = round(params.V * n)
    else:
        lo, hi = max(0, w - (n - k_ell)), min(w, k_ell)
        v = base_v = _clip(round(params.V * n), lo, hi)
        if depth:
            v = base_v = _with_parity(base_v, 0, lo, hi)
    eps, b, c = _scale_levels(variant, depth, n, base_v, params.E, params.B, params.C)

    config = SolverConfig(algorithm=algorithm, levels=depth, ell=ell, v=v,
                          eps=eps, b=b, c=c, seed=seed, **overrides)
    try:
        validate_config(config, n, k, w, instance.restricted)
    except ConfigError as e:
        debug.warn(f"Rounded configuration rejected ({e}); dropping overlaps")
        zeros = (0,) * depth
        if v is not None and depth:
            step = 2 ** depth
            lo, hi = max(0, w - (n - k_ell)), min(w, k_ell)
            fits = [x for x in range(lo, hi + 1) if x % step == 0]
            if fits:
                v = min(fits, key=lambda x: abs(x - v))
        config = replace(config, v=v, eps=zeros, b=zeros, c=zeros)
        validate_config(config, n, k, w, instance.restricted)
    debug.info(f"auto {algorithm}: l={config.ell} v={config.v} eps={config.eps} b={config.b} c={config.c} "
               f"({estimate.bits:.1f} bits estimated)")
    return config
