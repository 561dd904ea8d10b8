"""
Multi-start optimizer for the cost models.

The free parameters are mapped from the unit cube so that every entropy
argument stays in its domain by construction:

    L   = t * (1 - R)
    V   = lo + t * (hi - lo),  lo = max(0, W - (1-R-L)),  hi = min(W, R+L)
    per level, from the previous level's (V, M):
        C = t * M,  B = t * V / 2,  E = t * (free zeros)

Only window nesting and the optional memory cap can be violated; they
are penalized as weight * (viol + viol^2). Candidates from a coarse grid,
seeded random restarts and warm starts are ranked, and the best seeds
are refined by Nelder-Mead with a shrinking initial simplex. The result
is the best strictly feasible point evaluated.
"""

from dataclasses import dataclass, replace
from typing import List, Optional, Sequence

import numpy as np
from scipy.optimize import minimize

from asymptotics.models import (
    AsymptoticPoint,
    CostBreakdown,
    InternalParams,
    bjmm_cost,
    stern_cost,
    target_weight,
)
from shared.debug_log import debug
from shared.errors import ConfigError, DomainError, InfeasibleError
from shared.settings import OptimizerDefaults, get_settings

# Objective value of points outside the model's domain
_OUTSIDE = 1e3


@dataclass(frozen=True)
class OptimizerSettings:
    grid_density: int = 9
    restarts: int = 48
    restart_seed: int = 2023
    top_seeds: int = 6
    initial_step: float = 0.15
    shrink: float = 0.3
    step_floor: float = 1e-3
    penalty_weight: float = 50.0
    tolerance: float = 1e-4
    max_mem: Optional[float] = None
    # Force base lists without E_plus symbols (plus_z2 / plus_z4)
    restricted_base: bool = False

    def __post_init__(self):
        if self.tolerance <= 0:
            raise ConfigError("Optimizer tolerance must be positive")
        if self.grid_density < 2:
            raise ConfigError("Grid density must be at least 2")
        if not 0 < self.shrink < 1 or self.initial_step <= 0 or self.step_floor <= 0:
            raise ConfigError("Simplex schedule needs step > 0, floor > 0 and 0 < shrink < 1")
        if self.restarts < 0 or self.top_seeds < 1:
            raise ConfigError("Need restarts >= 0 and top_seeds >= 1")

    @classmethod
    def from_settings(cls, defaults: Optional[OptimizerDefaults] = None, **overrides) -> "OptimizerSettings":
        defaults = defaults or get_settings().optimizer
        base = cls(**{name: getattr(defaults, name) for name in OptimizerDefaults.__dataclass_fields__})
        return replace(base, **overrides)


@dataclass
class OptimizationResult:
    params: InternalParams
    cost: CostBreakdown
    unit: np.ndarray
    evaluations: int = 0

    @property
    def F(self) -> float:
        return self.cost.F


def dimension(variant: str, levels: int) -> int:
    per_level = {"stern": 0, "plain": 1, "shifted": 1, "plus_z6": 2, "plus_z2": 3, "plus_z4": 3}
    return 2 + per_level[variant] * levels


def decode(point: AsymptoticPoint, variant: str, levels: int, t: Sequence[float],
           restricted_base: bool = False) -> InternalParams:
    """InternalParams for a unit-cube vector."""
    t = np.clip(np.asarray(t, dtype=float), 0.0, 1.0)
    R = point.R
    W = target_weight(point, variant)
    L = t[0] * (1 - R)
    K = R + L
    lo, hi = max(0.0, W - (1 - K)), min(W, K)
    V = lo + t[1] * max(0.0, hi - lo)
    if variant == "stern":
        return InternalParams("stern", 0, L, V)

    Es, Bs, Cs = [], [], []
    V_prev, M_prev = V, 0.0
    idx = 2
    for i in range(levels):
        last = i == levels - 1
        b = c = 0.0
        if variant in ("plus_z2", "plus_z4"):
            te, tb, tc = t[idx:idx + 3]
            idx += 3
            if restricted_base and last:
                tb, tc = 0.0, 1.0
            c = tc * M_prev
            b = tb * V_prev / 2
            e = te * max(0.0, K - V_prev - M_prev)
            V_prev, M_prev = V_prev / 2 + e + c, (M_prev - c) / 2 + b
        elif variant == "plus_z6":
            te, tb = t[idx:idx + 2]
            idx += 2
            b = tb * V_prev / 2
            e = te * max(0.0, K - V_prev)
            V_prev = V_prev / 2 + e + b
        elif variant == "shifted":
            e = t[idx] * max(0.0, K - V_prev - M_prev) / 2
            idx += 1
            V_prev, M_prev = V_prev / 2 + e, M_prev / 2 + e
        else:
            e = t[idx] * max(0.0, K - V_prev)
            idx += 1
            V_prev = V_prev / 2 + e
        Es.append(e)
        Bs.append(b)
        Cs.append(c)
    return InternalParams(variant, levels, L, V, tuple(Es), tuple(Bs), tuple(Cs))


def embed_plain(t_plain: Sequence[float], variant: str, levels: int) -> np.ndarray:
    """Unit vector of a plus variant that reproduces a plain BJMM point (B = C = 0)."""
    t_plain = np.asarray(t_plain, dtype=float)
    extra = dimension(variant, 1) - 3
    out = list(t_plain[:2])
    for i in range(levels):
        out.append(t_plain[2 + i])
        out.extend([0.0] * extra)
    return np.array(out)


def evaluate(point: AsymptoticPoint, params: InternalParams, max_mem: Optional[float] = None) -> CostBreakdown:
    if params.variant == "stern":
        return stern_cost(point, params.L, params.V, max_mem)
    return bjmm_cost(point, params, max_mem)


class _Objective:
    """Penalized objective that remembers the best strictly feasible point."""

    def __init__(self, point, variant, levels, settings: OptimizerSettings):
        self.point = point
        self.variant = variant
        self.levels = levels
        self.settings = settings
        self.evaluations = 0
        self.best: Optional[tuple] = None

    def __call__(self, t) -> float:
        self.evaluations += 1
        t = np.clip(np.asarray(t, dtype=float), 0.0, 1.0)
        try:
            params = decode(self.point, self.variant, self.levels, t, self.settings.restricted_base)
            cost = evaluate(self.point, params, self.settings.max_mem)
        except DomainError:
            return _OUTSIDE
        viol = cost.violation
        if cost.feasible and (self.best is None or cost.F < self.best[0].F):
            self.best = (cost, t.copy())
        return cost.F + self.settings.penalty_weight * (viol + viol * viol)


def _simplex(x: np.ndarray, step: float) -> np.ndarray:
    vertices = [x.copy()]
    for i in range(x.size):
        v = x.copy()
        v[i] = v[i] + step if v[i] + step <= 1.0 else v[i] - step
        vertices.append(np.clip(v, 0.0, 1.0))
    return np.array(vertices)


def _candidates(dim: int, settings: OptimizerSettings, warm: Sequence[np.ndarray]) -> List[np.ndarray]:
    pool = []
    axis = np.linspace(0.0, 1.0, settings.grid_density)
    for fill in (0.0, 0.05, 0.2):
        for tl in axis:
            for tv in axis:
                pool.append(np.array([tl, tv] + [fill] * (dim - 2)))
    rng = np.random.default_rng(settings.restart_seed)
    for _ in range(settings.restarts):
        pool.append(10.0 ** rng.uniform(-3.0, 0.0, size=dim))
    pool.extend(np.clip(np.asarray(w, dtype=float), 0.0, 1.0) for w in warm if len(w) == dim)
    return pool


def optimize(point: AsymptoticPoint, variant: str, levels: int = 0,
             settings: Optional[OptimizerSettings] = None,
             warm_starts: Sequence[np.ndarray] = ()) -> OptimizationResult:
    """
    Minimize F over the free parameters of one model.

    Args:
        point: (Q, Z, R, W)
        variant: stern, plain, plus_z2, plus_z4, plus_z6 or shifted
        levels: Representation levels (0 for stern)
        settings: Optimizer settings; from data/rsdp.toml when None
        warm_starts: Unit-cube vectors tried alongside the grid

    Raises:
        InfeasibleError: no strictly feasible point was evaluated
    """
    settings = settings or OptimizerSettings.from_settings()
    if variant == "stern":
        levels = 0
    elif levels < 1:
        raise ConfigError(f"{variant} needs at least one level")
    dim = dimension(variant, levels)
    if point.W == 0 and variant != "shifted":
        params = InternalParams(variant, levels, 0.0, 0.0)
        return OptimizationResult(params=params, cost=evaluate(point, params), unit=np.zeros(dim))
    objective = _Objective(point, variant, levels, settings)
    warm = [np.asarray(w, dtype=float) for w in warm_starts]

    if variant.startswith("plus_"):
        plain = optimize(point, "plain", levels, replace(settings, restricted_base=False))
        warm.append(embed_plain(plain.unit, variant, levels))

    pool = _candidates(dim, settings, warm)
    scored = sorted(((objective(t), i) for i, t in enumerate(pool)), key=lambda s: s)
    seeds = []
    for value, i in scored:
        if value >= _OUTSIDE or any(np.allclose(pool[i], s) for s in seeds):
            continue
        seeds.append(pool[i])
        if len(seeds) >= settings.top_seeds:
            break

    for seed in seeds:
        x = seed.copy()
        step = settings.initial_step
        while step >= settings.step_floor:
            result = minimize(objective, x, method="Nelder-Mead", bounds=[(0.0, 1.0)] * dim,
                              options={"initial_simplex": _simplex(x, step),
                                       "xatol": 1e-7, "fatol": settings.tolerance / 10,
                                       "maxiter": 400 * dim, "adaptive": True})
            x = np.clip(result.x, 0.0, 1.0)
            step *= settings.shrink

    if objective.best is None:
        raise InfeasibleError(f"No feasible {variant} point at {point}")
    cost, unit = objective.best
    debug.debug(f"optimize {variant}({levels}) at W={point.W:.4f}: F={cost.F:.6f} "
                f"after {objective.evaluations} evaluations")
    return OptimizationResult(params=cost.params, cost=cost, unit=unit,
                              evaluations=objective.evaluations)
