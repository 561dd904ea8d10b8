"""
Restricted error sets.

E is the cyclic group generated by an order-z element g, E0 adds zero and
E_plus is the extension alphabet allowed in intermediate solver lists:

- z=2: E = {1, -1},                 E_plus = {2, -2}
- z=4: E = {1, g, -1, -g},          E_plus = {±(g+1), ±(g-1)}
- z=6: E = {1, g, g-1, -1, ...},    E_plus = E   (uses g^2 = g - 1)
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from galois_core.field import PrimeField, find_order_z_element
from shared.errors import FieldError, UnsupportedZError

SUPPORTED_Z = (2, 4, 6)

# Symbol classes used by the lookup table
ZERO, IN_E, IN_PLUS, OTHER = 0, 1, 2, 3


@dataclass(frozen=True)
class RestrictedSet:
    field: PrimeField
    z: int
    g: int
    E: Tuple[int, ...]
    E_plus: Tuple[int, ...] = ()

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def E0(self) -> Tuple[int, ...]:
        return (0,) + self.E

    def symbol_classes(self) -> np.ndarray:
        """Length-q table mapping each residue to ZERO / IN_E / IN_PLUS / OTHER.

        For z=6 E_plus equals E, so those symbols classify as IN_E.
        """
        table = np.full(self.q, OTHER, dtype=np.int8)
        table[list(self.E_plus)] = IN_PLUS
        table[list(self.E)] = IN_E
        table[0] = ZERO
        return table

    def is_restricted(self, e) -> bool:
        """All entries in E0."""
        values = np.asarray(e, dtype=np.int64) % self.q
        return bool(np.isin(values, self.E0).all())

    def check(self):
        """Verify the algebraic invariants, raising FieldError on violation."""
        q = self.q
        if pow(self.g, self.z, q) != 1:
            raise FieldError(f"g={self.g} does not satisfy g^z = 1")
        for i in range(1, self.z):
            if pow(self.g, i, q) == 1:
                raise FieldError(f"g={self.g} has order below {self.z}")
        if len(set(self.E)) != self.z or 0 in self.E:
            raise FieldError("E must hold z distinct nonzero elements")
        if self.z % 2 == 0 and {(-x) % q for x in self.E} != set(self.E):
            raise FieldError("E is not closed under negation")
        if self.z == 6 and (self.g * self.g - self.g + 1) % q != 0:
            raise FieldError("g^2 = g - 1 fails for z=6")


def _powers(field: PrimeField, g: int, z: int) -> Tuple[int, ...]:
    return tuple(field.pow(g, i) for i in range(1, z + 1))


def build_error_sets(q: int, z: int) -> RestrictedSet:
    """
    Build E, E0 and E_plus for z in {2, 4, 6}.

    Args:
        q: Odd prime, z must divide q-1
        z: Error-set size

    Returns:
        RestrictedSet with E_plus populated
    """
    if z not in SUPPORTED_Z:
        raise UnsupportedZError(
            f"z={z} is not supported; the error-set structure for other z "
            f"depends on the factorization of x^z - 1 and must be analysed separately")
    field = PrimeField(q)
    g = find_order_z_element(q, z)
    E = _powers(field, g, z)

    if z == 2:
        E_plus = (2 % q, (-2) % q)
    elif z == 4:
        E_plus = ((g + 1) % q, (-(g + 1)) % q, (g - 1) % q, (-(g - 1)) % q)
    else:
        E_plus = E

    restricted = RestrictedSet(field=field, z=z, g=g, E=E, E_plus=E_plus)
    restricted.check()

    if z in (2, 4):
        if len(set(E_plus)) != len(E_plus) or set(E_plus) & set(restricted.E0):
            raise FieldError(f"E_plus overlaps E0 for q={q}, z={z}; choose a larger q")
    return restricted


def binary_set(field: PrimeField) -> RestrictedSet:
    """The {0, 1} alphabet of a shifted instance, with -1 as extension symbol."""
    return RestrictedSet(field=field, z=1, g=1, E=(1,), E_plus=(field.q - 1,))
