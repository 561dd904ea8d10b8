"""Tests for the expected solution count."""

import math
from fractions import Fraction

import pytest

from galois_core.uniqueness import max_unique_weight, uniqueness_log2
from shared.errors import InputError


def test_acceptance_parameters():
    value, unique = uniqueness_log2(24, 12, 5, 13, 4)
    assert value == pytest.approx(-19.03, abs=0.02)
    assert unique


def test_zero_weight():
    value, unique = uniqueness_log2(30, 10, 0, 13, 4)
    assert value == pytest.approx(-20 * math.log2(13))
    assert unique


def test_not_unique():
    value, unique = uniqueness_log2(10, 9, 10, 13, 4)
    assert value == pytest.approx(20 - math.log2(13))
    assert not unique


@pytest.mark.parametrize("n,k,w,q,z", [(20, 10, 5, 13, 4), (30, 15, 8, 13, 6), (12, 4, 12, 29, 2), (25, 5, 3, 157, 2)])
def test_matches_exact_rational(n, k, w, q, z):
    exact = Fraction(math.comb(n, w) * z**w, q ** (n - k))
    reference = math.log2(exact.numerator) - math.log2(exact.denominator)
    value, _ = uniqueness_log2(n, k, w, q, z)
    assert value == pytest.approx(reference, rel=1e-9)


def test_max_unique_weight():
    w_max = max_unique_weight(24, 12, 13, 4)
    assert uniqueness_log2(24, 12, w_max, 13, 4)[1]
    assert all(not uniqueness_log2(24, 12, w, 13, 4)[1] for w in range(w_max + 1, 25))


def test_restricted_errors_allow_higher_unique_weight():
    # fewer admissible values per position than the q-1 of an unrestricted error
    assert max_unique_weight(40, 20, 157, 2) > max_unique_weight(40, 20, 157, 156)


@pytest.mark.parametrize("n,k,w", [(10, 0, 1), (10, 10, 1), (10, 5, 11)])
def test_invalid(n, k, w):
    with pytest.raises(InputError):
        uniqueness_log2(n, k, w, 13, 4)
