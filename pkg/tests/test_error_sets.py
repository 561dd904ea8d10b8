"""Tests for E, E0 and E_plus."""

import numpy as np
import pytest

from galois_core.error_sets import IN_E, IN_PLUS, OTHER, ZERO, binary_set, build_error_sets
from galois_core.field import PrimeField
from shared.errors import FieldError, UnsupportedZError


def test_z2_sets():
    s = build_error_sets(13, 2)
    assert set(s.E) == {1, 12}
    assert set(s.E_plus) == {2, 11}
    assert set(s.E0) == {0, 1, 12}


def test_z4_sets():
    s = build_error_sets(13, 4)
    assert s.g == 5
    assert s.E == (5, 12, 8, 1)
    assert set(s.E_plus) == {6, 7, 4, 9}


def test_z6_sets():
    s = build_error_sets(13, 6)
    assert s.g == 4
    assert s.E == (4, 3, 12, 9, 10, 1)
    assert s.E_plus == s.E


@pytest.mark.parametrize("q,z", [(13, 2), (13, 4), (13, 6), (157, 2), (157, 4), (157, 6), (29, 2)])
def test_invariants(q, z):
    s = build_error_sets(q, z)
    s.check()
    assert len(set(s.E)) == z and 0 not in s.E
    assert {(-x) % q for x in s.E} == set(s.E)
    sums = {(a + b) % q for a in s.E for b in s.E}
    assert set(s.E_plus) <= sums
    if z in (2, 4):
        assert not set(s.E_plus) & set(s.E0)


@pytest.mark.parametrize("z", [1, 3, 5, 8])
def test_unsupported_z(z):
    with pytest.raises(UnsupportedZError):
        build_error_sets(241, z)


def test_extension_alphabet_overlap():
    # GF(5): E = all nonzero elements, so E_plus cannot avoid E0
    with pytest.raises(FieldError):
        build_error_sets(5, 4)


def test_symbol_classes():
    s = build_error_sets(13, 2)
    table = s.symbol_classes()
    assert table.shape == (13,)
    assert table[0] == ZERO
    assert table[1] == table[12] == IN_E
    assert table[2] == table[11] == IN_PLUS
    assert table[5] == OTHER


def test_is_restricted():
    s = build_error_sets(13, 4)
    assert s.is_restricted([0, 5, 12, 8, 1])
    assert not s.is_restricted([0, 6])
    assert s.is_restricted(np.array([13 + 5]))


def test_binary_set():
    s = binary_set(PrimeField(29))
    assert s.E == (1,) and s.E_plus == (28,)
    assert set(s.E0) == {0, 1}
