"""
Partial Gaussian elimination.

After permuting the columns of H by `permutation` and applying the
invertible row transform U, the parity-check matrix reads

    U * H[:, permutation] = [ A1^T   Id_{n-k-l} ]
                            [ A2^T   0          ]

so for the permuted error (e2 | e1), with e2 of length k+l:

    e2 @ A2 = s2            (the small instance)
    e1 = s1 - e2 @ A1       (the remaining coordinates)
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from galois_core.instance import DecodingInstance
from galois_core.linalg import matmul_mod, matrix_inverse
from galois_core.rng import stream
from shared.errors import InputError, ResamplePermutation


@dataclass(frozen=True, eq=False)
class PGEForm:
    permutation: np.ndarray   # permuted position j holds original column permutation[j]
    ell: int
    A1: np.ndarray            # (k+l) x (n-k-l)
    A2: np.ndarray            # (k+l) x l
    s1: np.ndarray
    s2: np.ndarray
    U: np.ndarray             # (n-k) x (n-k) row transform
    q: int

    @property
    def k_ell(self) -> int:
        return self.A1.shape[0]

    def reduced_matrix(self) -> np.ndarray:
        """The systematic matrix U * H[:, permutation]."""
        r = self.A1.shape[1]
        top = np.concatenate([self.A1.T, np.eye(r, dtype=np.int64)], axis=1)
        bottom = np.concatenate([self.A2.T, np.zeros((self.ell, r), dtype=np.int64)], axis=1)
        return np.concatenate([top, bottom], axis=0)

    def reconstruct(self):
        """Undo row operations and permutation, returning (H, s)."""
        u_inv = matrix_inverse(self.U, self.q)
        permuted = matmul_mod(u_inv, self.reduced_matrix(), self.q)
        H = np.empty_like(permuted)
        H[:, self.permutation] = permuted
        s = matmul_mod(u_inv, np.concatenate([self.s1, self.s2]), self.q)
        return H, s

    def complete(self, e2: np.ndarray) -> np.ndarray:
        """e1 = s1 - e2 @ A1 for one candidate e2 (or a stack of them)."""
        return np.mod(self.s1 - matmul_mod(e2, self.A1, self.q), self.q)

    def unpermute(self, e2: np.ndarray, e1: np.ndarray) -> np.ndarray:
        """Error vector in original coordinates."""
        permuted = np.concatenate([e2, e1])
        e = np.empty_like(permuted)
        e[self.permutation] = permuted
        return e


def pge(instance: DecodingInstance, ell: int, permutation_seed: Optional[int] = None,
        permutation: Optional[np.ndarray] = None) -> PGEForm:
    """
    Bring H into the partial systematic form for a column permutation.

    Args:
        instance: Decoding instance
        ell: Size of the small instance's syndrome, 0 <= ell <= n-k
        permutation_seed: Seed for a uniform column permutation
        permutation: Explicit permutation; overrides the seed

    Raises:
        ResamplePermutation: the pivot block is singular
    """
    n, k, q = instance.n, instance.k, instance.q
    r = n - k - ell
    if not 0 <= ell <= n - k:
        raise InputError(f"Need 0 <= l <= n-k, got l={ell}")
    if permutation is None:
        permutation = stream(0 if permutation_seed is None else permutation_seed).permutation(n)
    permutation = np.array(permutation, dtype=np.int64)

    rows = n - k
    aug = np.concatenate([instance.H[:, permutation], np.eye(rows, dtype=np.int64)], axis=1)
    for i in range(r):
        col = k + ell + i
        nonzero = np.nonzero(aug[i:, col])[0]
        if nonzero.size == 0:
            raise ResamplePermutation(f"Pivot column {i} of the identity block is dependent")
        pivot = i + nonzero[0]
        if pivot != i:
            aug[[i, pivot]] = aug[[pivot, i]]
        aug[i] = aug[i] * pow(int(aug[i, col]), -1, q) % q
        factors = aug[:, col].copy()
        factors[i] = 0
        if factors.any():
            aug = (aug - np.outer(factors, aug[i])) % q

    U = aug[:, n:]
    s_red = matmul_mod(U, instance.s, q)
    A1 = aug[:r, :k + ell].T.copy()
    A2 = aug[r:, :k + ell].T.copy()
    for a in (A1, A2, U, s_red, permutation):
        a.flags.writeable = False
    return PGEForm(permutation=permutation, ell=ell, A1=A1, A2=A2,
                   s1=s_red[:r], s2=s_red[r:], U=U, q=q)
