"""Tests for the entropy helpers."""

import math

import pytest

from asymptotics.entropy import binomial_exponent, g2, h, ratio
from shared.errors import DomainError


def test_binary_entropy():
    assert h(0.5) == pytest.approx(1.0)
    assert h(0.0) == 0.0
    assert h(1.0) == 0.0
    assert h(0.11) == pytest.approx(h(0.89))


def test_ternary_entropy():
    assert g2(1 / 3, 1 / 3) == pytest.approx(math.log2(3))
    assert g2(0.3, 0.0) == pytest.approx(h(0.3))
    assert g2(0.0, 0.0) == 0.0


def test_binomial_limit():
    assert binomial_exponent(10_000, 5_000) == pytest.approx(h(0.5), abs=0.01)


def test_rounding_noise_is_clamped():
    assert h(1.0 + 1e-13) == 0.0
    assert h(-1e-13) == 0.0


@pytest.mark.parametrize("x", [-0.01, 1.01, float("nan")])
def test_out_of_domain(x):
    with pytest.raises(DomainError):
        h(x)


def test_ternary_out_of_simplex():
    with pytest.raises(DomainError):
        g2(0.6, 0.6)


def test_ratio():
    assert ratio(1.0, 4.0) == 0.25
    assert ratio(0.0, 0.0) == 0.0
    with pytest.raises(DomainError):
        ratio(0.1, 0.0)
