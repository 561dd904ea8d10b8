"""Expected number of solutions: C(n,w) * z^w * q^(k-n)."""

import math
from typing import Tuple

from shared.errors import InputError


def uniqueness_log2(n: int, k: int, w: int, q: int, z: int) -> Tuple[float, bool]:
    """
    log2 of the expected solution count, and whether it is <= 0.

    math.comb is exact and math.log2 accepts arbitrarily large integers,
    so nothing overflows.
    """
    if not 0 <= w <= n:
        raise InputError(f"Need 0 <= w <= n, got w={w}, n={n}")
    if not 0 < k < n:
        raise InputError(f"Need 0 < k < n, got n={n}, k={k}")
    value = math.log2(math.comb(n, w)) + w * math.log2(z) + (k - n) * math.log2(q)
    return value, value <= 0


def max_unique_weight(n: int, k: int, q: int, z: int) -> int:
    """Largest w for which the solution is expected to be unique (-1 if none)."""
    best = -1
    for w in range(n + 1):
        if uniqueness_log2(n, k, w, q, z)[1]:
            best = w
    return best
