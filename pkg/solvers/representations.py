"""
Exact representation counts.

A level-i vector with v symbols from E and m symbols from E_plus is
written as x1 + x2 with both halves one level deeper. The count r fixes
the merge window u = floor(log_q r).
"""

import math
from typing import Tuple

from shared.errors import ConfigError

VARIANTS = ("plain", "plus_z2", "plus_z4", "plus_z6", "shifted")


def trinomial(n: int, k1: int, k2: int) -> int:
    """n! / (k1! k2! (n-k1-k2)!), zero outside the simplex."""
    if k1 < 0 or k2 < 0 or k1 + k2 > n:
        return 0
    return math.comb(n, k1 + k2) * math.comb(k1 + k2, k1)


def floor_log(r: int, q: int) -> int:
    """floor(log_q r) by integer arithmetic; 0 for r <= 1."""
    u = 0
    power = q
    while power <= r:
        u += 1
        power *= q
    return u


def _half(value: int, name: str) -> int:
    if value % 2:
        raise ConfigError(f"{name}={value} must be even to be halved")
    return value // 2


def count_representations(v: int, m: int, k_ell: int, b: int, c: int, eps: int,
                          z: int, variant: str, q: int) -> Tuple[int, int]:
    """
    Number of ways to write one level-i vector as a sum of two level-(i+1) vectors.

    Args:
        v, m: E and E_plus symbol counts on level i
        k_ell: Vector length k + l
        b, c, eps: Overlap counts of the split into level i+1
        z: Size of E
        variant: plain, plus_z2, plus_z4, plus_z6 or shifted
        q: Field size, base of the window logarithm

    Returns:
        (r, u) with u = floor(log_q r)
    """
    if variant not in VARIANTS:
        raise ConfigError(f"Unknown variant {variant!r}")
    if min(v, m, k_ell, b, c, eps) < 0:
        raise ConfigError("Representation counts must be non-negative")
    if v + m > k_ell:
        return 0, 0

    half_v = _half(v, "v")
    if variant == "plain":
        if m or b or c:
            raise ConfigError("plain variant has no E_plus symbols")
        r = math.comb(v, half_v) * math.comb(k_ell - v, eps) * z**eps

    elif variant in ("plus_z2", "plus_z4"):
        rest = _half(m - c, "m - c")
        if c > m or b > half_v:
            return 0, 0
        r = (math.comb(v, half_v) * math.comb(half_v, b) ** 2
             * trinomial(m, rest, c)
             * math.comb(k_ell - v - m, eps) * z**eps)
        if variant == "plus_z4":
            # two sums hit each E entry from E + E_plus, two hit each E_plus entry from E + E
            r *= 2 ** (2 * b + c)

    elif variant == "plus_z6":
        if m or c:
            raise ConfigError("plus_z6 has no separate E_plus symbols")
        if b > half_v:
            return 0, 0
        r = trinomial(v, 2 * b, half_v - b) * 2 ** (2 * b) * math.comb(k_ell - v, eps) * z**eps

    else:
        if b or c:
            raise ConfigError("shifted variant has no b or c overlaps")
        half_m = _half(m, "m")
        r = (math.comb(v, half_v) * math.comb(m, half_m)
             * math.comb(k_ell - v - m, 2 * eps) * math.comb(2 * eps, eps))

    return r, floor_log(r, q)
