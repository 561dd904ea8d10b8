"""
Prime field arithmetic.

PrimeField holds the modulus and vector helpers over numpy int64 arrays;
FieldElement is a small immutable scalar wrapper for the field_ops bundle.
"""

from dataclasses import dataclass

import numpy as np

from shared.errors import FieldError

# Largest supported modulus; products of two reduced entries fit in int64
MAX_MODULUS = 2**31


def is_prime(q: int) -> bool:
    """Deterministic primality test by trial division."""
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    d = 3
    while d * d <= q:
        if q % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list:
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.append(n)
    return factors


@dataclass(frozen=True)
class PrimeField:
    """Integers modulo an odd prime q."""
    q: int

    def __post_init__(self):
        if not isinstance(self.q, (int, np.integer)) or isinstance(self.q, bool):
            raise FieldError(f"Modulus must be an integer, got {self.q!r}")
        if self.q < 3 or not is_prime(int(self.q)):
            raise FieldError(f"Modulus {self.q} is not an odd prime")
        if self.q >= MAX_MODULUS:
            raise FieldError(f"Modulus {self.q} exceeds 2^31")
        object.__setattr__(self, "q", int(self.q))

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(int(value) % self.q, self)

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def neg(self, a: int) -> int:
        return (-a) % self.q

    def inv(self, a: int) -> int:
        a %= self.q
        if a == 0:
            raise FieldError("Cannot invert 0")
        return pow(a, -1, self.q)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return pow(self.inv(a), -e, self.q)
        return pow(a % self.q, e, self.q)

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        a %= self.q
        if a == 0:
            raise FieldError("0 has no multiplicative order")
        n = self.q - 1
        order = n
        for p in _prime_factors(n):
            while order % p == 0 and pow(a, order // p, self.q) == 1:
                order //= p
        return order

    def array(self, values) -> np.ndarray:
        """Reduced int64 copy of any integer array-like."""
        return np.mod(np.asarray(values, dtype=np.int64), self.q)

    def zeros(self, *shape) -> np.ndarray:
        return np.zeros(shape, dtype=np.int64)

    def random(self, rng: np.random.Generator, *shape) -> np.ndarray:
        return rng.integers(0, self.q, size=shape, dtype=np.int64)


@dataclass(frozen=True)
class FieldElement:
    """Reduced residue with operator overloading."""
    value: int
    field: PrimeField

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field.q != self.field.q:
                raise FieldError("Elements belong to different fields")
            return other.value
        return int(other) % self.field.q

    def __add__(self, other):
        return self.field(self.field.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self.field(self.field.sub(self.value, self._coerce(other)))

    def __rsub__(self, other):
        return self.field(self.field.sub(self._coerce(other), self.value))

    def __mul__(self, other):
        return self.field(self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return self.field(self.field.neg(self.value))

    def __truediv__(self, other):
        return self * self.field.inv(self._coerce(other))

    def __pow__(self, e: int):
        return self.field(self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return self.field(self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field.q == other.field.q and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == int(other) % self.field.q
        return NotImplemented

    def __hash__(self):
        return hash((self.field.q, self.value))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.field.q})"


def find_order_z_element(q: int, z: int) -> int:
    """
    Smallest field element of multiplicative order exactly z.

    Args:
        q: Odd prime modulus
        z: Target order (>= 1)

    Returns:
        g as an integer in [1, q-1]
    """
    field = PrimeField(q)
    if z < 1:
        raise FieldError(f"Order must be positive, got {z}")
    if (q - 1) % z != 0:
        raise FieldError(f"no element of this order: {z} does not divide {q - 1}")
    for g in range(1, q):
        if field.order(g) == z:
            return g
    raise FieldError(f"no element of this order: {z} in GF({q})")
