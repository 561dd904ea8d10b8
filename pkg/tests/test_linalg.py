"""Tests for modular matrix helpers and the counter-based streams."""

import numpy as np
import pytest

from galois_core.linalg import matmul_mod, matrix_inverse
from galois_core.rng import stream
from shared.errors import FieldError


def test_matmul_matches_python_integers():
    q = 2**31 - 1
    rng = stream(1)
    a = rng.integers(0, q, size=(3, 40))
    b = rng.integers(0, q, size=(40, 2))
    expected = [[sum(int(a[i, t]) * int(b[t, j]) for t in range(40)) % q for j in range(2)] for i in range(3)]
    assert matmul_mod(a, b, q).tolist() == expected


def test_inverse():
    rng = stream(2)
    for _ in range(10):
        m = rng.integers(0, 13, size=(5, 5))
        try:
            inv = matrix_inverse(m, 13)
        except FieldError:
            continue
        assert np.array_equal(matmul_mod(m, inv, 13), np.eye(5, dtype=np.int64))


def test_singular():
    m = np.array([[1, 2], [2, 4]])
    with pytest.raises(FieldError):
        matrix_inverse(m, 13)


def test_streams():
    a = stream(7, 3).integers(0, 1000, size=8)
    b = stream(7, 3).integers(0, 1000, size=8)
    c = stream(7, 4).integers(0, 1000, size=8)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)
