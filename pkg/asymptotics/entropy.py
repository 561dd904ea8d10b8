"""Binary and ternary entropy, with 0 log 0 = 0."""

import math

from shared.errors import DomainError

# Excursions beyond [0, 1] smaller than this are rounding noise
CLAMP = 1e-12


def _unit(x: float) -> float:
    if x < -CLAMP or x > 1 + CLAMP or math.isnan(x):
        raise DomainError(f"Entropy argument {x} outside [0, 1]")
    return min(max(x, 0.0), 1.0)


def _xlog(x: float) -> float:
    return 0.0 if x <= 0.0 else -x * math.log2(x)


def h(x: float) -> float:
    """Binary entropy."""
    x = _unit(x)
    return _xlog(x) + _xlog(1.0 - x)


def g2(x: float, y: float) -> float:
    """Ternary entropy -x log x - y log y - (1-x-y) log(1-x-y)."""
    x, y = _unit(x), _unit(y)
    rest = _unit(1.0 - x - y)
    return _xlog(x) + _xlog(y) + _xlog(rest)


def ratio(num: float, den: float) -> float:
    """num / den with 0 / 0 = 0; a positive numerator over a vanishing denominator is out of domain."""
    if den <= CLAMP:
        if abs(num) <= CLAMP:
            return 0.0
        raise DomainError(f"Ratio {num} / {den} is undefined")
    return num / den


def binomial_exponent(n: int, k: int) -> float:
    """(1/n) log2 C(n, k), exact up to float rounding."""
    return math.log2(math.comb(n, k)) / n
