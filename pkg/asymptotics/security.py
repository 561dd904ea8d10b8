"""
Security estimates and weight sweeps on top of the optimizer.
"""

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np
from scipy.optimize import bisect

from asymptotics.entropy import h
from asymptotics.models import AsymptoticPoint, CostBreakdown
from asymptotics.optimizer import OptimizationResult, OptimizerSettings, embed_plain, optimize
from shared.debug_log import debug
from shared.errors import DomainError, InfeasibleError, InputError, UnsupportedZError

ESTIMATORS = ("stern", "bjmm", "bjmm_plus", "shifted_bcj")


@dataclass(frozen=True)
class AlgorithmSpec:
    """An estimator family with its level count, written `bjmm_plus:3` on the command line."""
    name: str
    levels: int = 0

    def __post_init__(self):
        if self.name not in ESTIMATORS:
            raise InputError(f"Unknown algorithm {self.name!r}; expected one of {', '.join(ESTIMATORS)}")
        if self.name == "stern":
            object.__setattr__(self, "levels", 0)
        elif self.levels < 1:
            raise InputError(f"{self.name} needs a level count >= 1")

    @classmethod
    def parse(cls, text: str) -> "AlgorithmSpec":
        name, _, levels = text.strip().partition(":")
        if not levels:
            return cls(name, 0 if name == "stern" else 2)
        try:
            return cls(name, int(levels))
        except ValueError:
            raise InputError(f"Bad level count in {text!r}") from None

    @property
    def label(self) -> str:
        return self.name if self.name == "stern" else f"{self.name}:{self.levels}"

    def model_variant(self, z: int) -> str:
        if self.name == "stern":
            return "stern"
        if self.name == "bjmm":
            return "plain"
        if self.name == "shifted_bcj":
            if z != 2:
                raise InputError(f"shifted_bcj needs z=2, got z={z}")
            return "shifted"
        if z not in (2, 4, 6):
            raise UnsupportedZError(f"bjmm_plus is defined for z in (2, 4, 6), got z={z}")
        return f"plus_z{z}"


@dataclass
class SecurityEstimate:
    q: int
    z: int
    n: int
    k: int
    w: int
    algorithm: AlgorithmSpec
    result: OptimizationResult

    @property
    def F(self) -> float:
        return self.result.F

    @property
    def bits(self) -> float:
        return self.result.F * self.n

    @property
    def cost(self) -> CostBreakdown:
        return self.result.cost

    def to_dict(self) -> dict:
        out = {"q": self.q, "z": self.z, "n": self.n, "k": self.k, "w": self.w,
               "algorithm": self.algorithm.label, "bits": self.bits}
        out.update(self.cost.to_dict())
        return out


def _check_parameters(q: int, z: int, n: int, k: int, w: int):
    if z < 1 or (q - 1) % z:
        raise InputError(f"z={z} must divide q-1={q - 1}")
    if n < 1 or not 0 < k < n or not 0 <= w <= n:
        raise InputError(f"Need n >= 1, 0 < k < n and 0 <= w <= n, got n={n}, k={k}, w={w}")


def security_bits(q: int, z: int, n: int, k: int, w: int, algorithm: AlgorithmSpec,
                  settings: Optional[OptimizerSettings] = None) -> SecurityEstimate:
    """
    Optimized F at (log2 q, log2 z, k/n, w/n), scaled by n.

    The estimate carries the optimizing parameters so a finite solver
    configuration can be derived from them.
    """
    _check_parameters(q, z, n, k, w)
    variant = algorithm.model_variant(z)
    if variant == "shifted" and w != n:
        raise InputError(f"shifted_bcj estimates full weight only, got w={w} < n={n}")
    point = AsymptoticPoint.of(q, z, k / n, w / n)
    result = optimize(point, variant, algorithm.levels, settings)
    estimate = SecurityEstimate(q, z, n, k, w, algorithm, result)
    debug.info(f"{algorithm.label} q={q} z={z} n={n} k={k} w={w}: {estimate.bits:.2f} bits (F={estimate.F:.6f})")
    return estimate


@dataclass
class SweepTable:
    algorithms: List[AlgorithmSpec]
    rows: List[tuple] = field(default_factory=list)

    def column(self, algorithm: str) -> Dict[float, Optional[float]]:
        idx = [a.label for a in self.algorithms].index(AlgorithmSpec.parse(algorithm).label)
        return {W: values[idx] for W, values in self.rows}

    def to_csv(self) -> str:
        lines = [",".join(["W"] + [a.label for a in self.algorithms])]
        for W, values in self.rows:
            cells = ["" if v is None else f"{v:.6f}" for v in values]
            lines.append(",".join([f"{W:.6f}"] + cells))
        return "\n".join(lines) + "\n"


def parse_grid(text: str) -> List[float]:
    """`start:stop:step` (stop included) or a comma separated list."""
    try:
        if ":" in text:
            start, stop, step = (float(x) for x in text.split(":"))
            if step <= 0:
                raise InputError(f"Grid step must be positive in {text!r}")
            count = int(math.floor((stop - start) / step + 1e-9)) + 1
            grid = [round(start + i * step, 12) for i in range(max(count, 0))]
        else:
            grid = [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"Malformed grid {text!r}") from None
    if not grid or any(not 0 <= W <= 1 for W in grid):
        raise InputError(f"Grid {text!r} must be non-empty and within [0, 1]")
    return grid


def sweep_curve(Q: float, z: int, R: float, grid: Sequence[float], algorithms: Sequence[AlgorithmSpec],
                settings: Optional[OptimizerSettings] = None) -> SweepTable:
    """
    Optimized F for every (W, algorithm).

    Each cell is warm-started from the previous W's optimum of the same
    algorithm; plus cells also start from the same row's plain optimum of equal
    depth. Cells without a feasible point are left empty.
    """
    Z = math.log2(z)
    table = SweepTable(list(algorithms))
    previous: Dict[str, np.ndarray] = {}
    ordered = sorted(range(len(table.algorithms)), key=lambda i: table.algorithms[i].name == "bjmm_plus")
    for W in grid:
        point = AsymptoticPoint(Q, Z, R, W)
        values: List[Optional[float]] = [None] * len(table.algorithms)
        plain_units: Dict[int, np.ndarray] = {}
        for i in ordered:
            algorithm = table.algorithms[i]
            variant = algorithm.model_variant(z)
            if variant == "shifted" and abs(W - 1.0) > 1e-12:
                continue
            warm = [previous[algorithm.label]] if algorithm.label in previous else []
            if variant.startswith("plus_") and algorithm.levels in plain_units:
                # plain optimum of this row, embedded with B = C = 0
                warm.append(embed_plain(plain_units[algorithm.levels], variant, algorithm.levels))
            try:
                result = optimize(point, variant, algorithm.levels, settings, warm_starts=warm)
            except (InfeasibleError, DomainError) as e:
                debug.warn(f"sweep {algorithm.label} at W={W}: {e}")
                continue
            previous[algorithm.label] = result.unit
            if variant == "plain":
                plain_units[algorithm.levels] = result.unit
            values[i] = result.F
        table.rows.append((W, values))
        debug.debug(f"sweep W={W:.4f}: {values}")
    return table


def uniqueness_exponent(point: AsymptoticPoint) -> float:
    """h(W) + Z W - (1-R) Q; negative means a unique solution with high probability."""
    return h(point.W) + point.Z * point.W - (1 - point.R) * point.Q


def unique_weight_boundary(Q: float, Z: float, R: float) -> Optional[float]:
    """
    Largest unique weight W*, the root of h(W) + Z W = (1-R) Q.

    The left side increases on [0, z/(z+1)] up to log2(z+1); None when it
    stays below (1-R) Q, i.e. every weight is unique.
    """
    top = 2.0 ** Z / (2.0 ** Z + 1.0)

    def excess(W: float) -> float:
        return uniqueness_exponent(AsymptoticPoint(Q, Z, R, W))

    if excess(top) < 0:
        return None
    return bisect(excess, 0.0, top, xtol=1e-12)
