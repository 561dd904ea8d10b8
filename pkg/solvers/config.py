"""
Solver configuration and the per-level shapes it implies.

Level 0 holds candidates for e2 (v symbols from E); level a holds the
base lists built by concatenation merge. Going from level i-1 to level i:

- plain:       v_i = v_{i-1}/2 + eps_i
- plus_z2/z4:  v_i = v_{i-1}/2 + eps_i + c_i,  m_i = (m_{i-1} - c_i)/2 + b_i
- plus_z6:     v_i = v_{i-1}/2 + eps_i + b_i
- shifted:     v_i = v_{i-1}/2 + eps_i,        m_i = m_{i-1}/2 + eps_i

with m_0 = 0. For the shifted variant "E" is {1} and "E_plus" is {-1}.
"""

import math
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import List, Optional, Tuple

from galois_core.error_sets import RestrictedSet
from shared.errors import ConfigError
from shared.settings import get_settings
from solvers.representations import count_representations

ALGORITHMS = ("prange", "stern", "bjmm", "bjmm_plus", "shifted_bcj")


@dataclass(frozen=True)
class LevelShape:
    level: int
    v: int        # symbols from E
    m: int = 0    # symbols from E_plus


@dataclass(frozen=True)
class SolverConfig:
    algorithm: str = "stern"
    levels: int = 0
    ell: int = 0
    # None lets the shifted solver pick v per guessed weight
    v: Optional[int] = 0
    eps: Tuple[int, ...] = ()
    b: Tuple[int, ...] = ()
    c: Tuple[int, ...] = ()
    # Explicit cumulative windows c_1 >= ... >= c_a
    windows: Optional[Tuple[int, ...]] = None
    iteration_cap: Optional[int] = None
    seed: int = 0
    threads: Optional[int] = None
    audit: Optional[bool] = None
    guard_limit: Optional[int] = None

    def __post_init__(self):
        for name in ("eps", "b", "c"):
            value = tuple(int(x) for x in getattr(self, name))
            object.__setattr__(self, name, value or (0,) * self.levels)
        if self.windows is not None:
            object.__setattr__(self, "windows", tuple(int(x) for x in self.windows))

    @property
    def depth(self) -> int:
        """Number of representation levels."""
        return self.levels if self.algorithm in ("bjmm", "bjmm_plus", "shifted_bcj") else 0

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def variant_for(config: SolverConfig, restricted: RestrictedSet) -> str:
    """Symbol-count variant used by the level tree."""
    if config.algorithm == "shifted_bcj":
        return "shifted"
    if config.algorithm != "bjmm_plus":
        return "plain"
    if restricted.z not in (2, 4, 6) or not restricted.E_plus:
        raise ConfigError(f"No extension alphabet for z={restricted.z}, q={restricted.q}")
    return f"plus_z{restricted.z}"


def level_shapes(config: SolverConfig, variant: str, v: int, k_ell: int) -> List[LevelShape]:
    """Shapes of levels 0..a, checking non-negativity, parity and length."""
    shapes = [LevelShape(0, v, 0)]
    for i in range(1, config.depth + 1):
        prev = shapes[-1]
        eps, b, c = config.eps[i - 1], config.b[i - 1], config.c[i - 1]
        if prev.v % 2:
            raise ConfigError(f"v_{i - 1}={prev.v} must be even")
        if variant == "plain":
            if b or c:
                raise ConfigError("bjmm takes no b or c overlaps; use bjmm_plus")
            shape = LevelShape(i, prev.v // 2 + eps, 0)
        elif variant in ("plus_z2", "plus_z4"):
            if (prev.m - c) % 2 or c > prev.m:
                raise ConfigError(f"m_{i - 1} - c_{i}={prev.m - c} must be even and non-negative")
            shape = LevelShape(i, prev.v // 2 + eps + c, (prev.m - c) // 2 + b)
        elif variant == "plus_z6":
            if c:
                raise ConfigError("z=6 takes no c overlaps")
            shape = LevelShape(i, prev.v // 2 + eps + b, 0)
        else:
            if b or c:
                raise ConfigError("shifted_bcj takes no b or c overlaps")
            if prev.m % 2:
                raise ConfigError(f"m_{i - 1}={prev.m} must be even")
            shape = LevelShape(i, prev.v // 2 + eps, prev.m // 2 + eps)
        if min(eps, b, c) < 0:
            raise ConfigError(f"Negative overlap on level {i}")
        if shape.v + shape.m > k_ell:
            raise ConfigError(f"Level {i} needs {shape.v + shape.m} symbols on {k_ell} positions")
        shapes.append(shape)
    return shapes


def merge_windows(config: SolverConfig, shapes: List[LevelShape], variant: str,
                  k_ell: int, z: int, q: int) -> List[int]:
    """
    Cumulative windows c_0 = l >= c_1 >= ... >= c_a.

    Lists on level j agree with their target on the first c_j symbols of
    the small syndrome; by default c_{j+1} = min(floor(log_q r_j), c_j).
    """
    windows = [config.ell]
    if config.windows is not None:
        return windows + list(config.windows)
    for j in range(config.depth):
        shape = shapes[j]
        _, u = count_representations(shape.v, shape.m, k_ell, config.b[j], config.c[j],
                                     config.eps[j], z, variant, q)
        windows.append(min(u, windows[-1]))
    return windows


def window_widths(windows: List[int]) -> List[int]:
    """Symbols checked per merge, base concatenation merge first."""
    widths = [windows[-1]]
    for j in range(len(windows) - 1, 0, -1):
        widths.append(windows[j - 1] - windows[j])
    return widths


def validate_config(config: SolverConfig, n: int, k: int, w: int,
                    restricted: RestrictedSet) -> List[LevelShape]:
    """Check a configuration against an instance before any iteration."""
    if config.algorithm not in ALGORITHMS:
        raise ConfigError(f"Unknown algorithm {config.algorithm!r}")
    if not 0 <= config.ell <= n - k:
        raise ConfigError(f"Need 0 <= l <= n-k, got l={config.ell}")
    if config.iteration_cap is not None and config.iteration_cap < 1:
        raise ConfigError("Iteration cap must be at least 1")

    depth = config.depth
    if config.algorithm in ("prange", "stern") and config.levels:
        raise ConfigError(f"{config.algorithm} has no representation levels")
    if config.algorithm in ("bjmm", "bjmm_plus", "shifted_bcj") and config.levels < 1:
        raise ConfigError(f"{config.algorithm} needs at least one level")
    for name in ("eps", "b", "c"):
        if len(getattr(config, name)) != depth:
            raise ConfigError(f"{name} needs {depth} entries")
    if config.algorithm == "prange" and (config.ell or config.v):
        raise ConfigError("prange runs with l=0 and v=0")

    if config.windows is not None:
        chain = [config.ell] + list(config.windows) + [0]
        if len(config.windows) != depth or any(a < b for a, b in zip(chain, chain[1:])):
            raise ConfigError(f"Windows must satisfy l >= c_1 >= ... >= c_a >= 0, got {config.windows}")

    variant = variant_for(config, restricted)
    if variant == "plain" and restricted.z % 2 and any(config.eps):
        raise ConfigError("Cancelling overlaps need -1 in E (even z)")

    if config.v is None:
        if config.algorithm != "shifted_bcj":
            raise ConfigError("v is required")
        return []
    return check_weights(config, variant, n, k, w, config.v)


def check_weights(config: SolverConfig, variant: str, n: int, k: int, w: int, v: int) -> List[LevelShape]:
    k_ell = k + config.ell
    if not 0 <= v <= min(w, k_ell):
        raise ConfigError(f"Need 0 <= v <= min(w, k+l), got v={v}")
    if w - v > n - k_ell:
        raise ConfigError(f"Weight w-v={w - v} does not fit on {n - k_ell} positions")
    return level_shapes(config, variant, v, k_ell)


def default_iteration_cap(n: int, k: int, w: int, ell: int, v: int,
                          multiplier: Optional[int] = None) -> int:
    """multiplier * C(n,w) / (C(k+l,v) * C(n-k-l,w-v)), rounded up."""
    if multiplier is None:
        multiplier = get_settings().solver.cap_multiplier
    k_ell = k + ell
    good = math.comb(k_ell, v) * math.comb(n - k_ell, w - v) if 0 <= w - v else 0
    if good == 0:
        raise ConfigError("No weight distribution matches this (l, v)")
    return max(1, math.ceil(Fraction(multiplier * math.comb(n, w), good)))
