"""Dense matrix helpers modulo q."""

import numpy as np

from shared.errors import FieldError

_INT64_LIMIT = 2**63


def matmul_mod(a: np.ndarray, b: np.ndarray, q: int) -> np.ndarray:
    """(a @ b) mod q without int64 overflow."""
    a = np.asarray(a)
    b = np.asarray(b)
    inner = a.shape[-1] if a.ndim else 1
    if q * q * max(inner, 1) >= _INT64_LIMIT:
        product = np.asarray(a, dtype=object) @ np.asarray(b, dtype=object)
        return np.mod(product, q).astype(np.int64)
    return np.mod(a.astype(np.int64) @ b.astype(np.int64), q)


def matrix_inverse(m: np.ndarray, q: int) -> np.ndarray:
    """Gauss-Jordan inverse of a square matrix over GF(q)."""
    m = np.mod(np.asarray(m, dtype=np.int64), q)
    size = m.shape[0]
    if m.shape != (size, size):
        raise FieldError(f"Matrix is not square: {m.shape}")
    aug = np.concatenate([m, np.eye(size, dtype=np.int64)], axis=1)
    for col in range(size):
        nonzero = np.nonzero(aug[col:, col])[0]
        if nonzero.size == 0:
            raise FieldError("Matrix is singular")
        pivot = col + nonzero[0]
        if pivot != col:
            aug[[col, pivot]] = aug[[pivot, col]]
        aug[col] = aug[col] * pow(int(aug[col, col]), -1, q) % q
        factors = aug[:, col].copy()
        factors[col] = 0
        aug = (aug - np.outer(factors, aug[col])) % q
    return aug[:, size:]
