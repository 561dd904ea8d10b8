"""
Exhaustive solver: every support of size w, every value assignment from E.

Used as ground truth by tests and by the `oracle` command. The search
space C(n,w) * z^w is checked against a work limit up front and the
search is refused, never truncated.
"""

import itertools
import math
from typing import List, Optional

import numpy as np

from galois_core.instance import DecodingInstance
from shared.debug_log import debug
from shared.errors import InputError, WorkLimitExceeded
from shared.settings import get_settings

# Entries of the (supports x assignments x syndrome) block per batch
_BLOCK_ENTRIES = 1 << 22


def search_space(n: int, w: int, z: int) -> int:
    return math.comb(n, w) * z**w


def _assignments(E: np.ndarray, w: int, start: int, stop: int) -> np.ndarray:
    """Rows start..stop-1 of the base-z enumeration of E^w."""
    idx = np.arange(start, stop, dtype=np.int64)
    z = E.size
    digits = (idx[:, None] // (z ** np.arange(w, dtype=np.int64))[None, :]) % z
    return E[digits]


def brute_force_solve(instance: DecodingInstance, work_limit: Optional[int] = None) -> List[np.ndarray]:
    """
    All solutions of the instance, sorted lexicographically.

    Args:
        instance: Decoding instance
        work_limit: Largest search space allowed; settings default when None

    Raises:
        WorkLimitExceeded: C(n,w) * z^w exceeds the limit
    """
    n, w, q = instance.n, instance.w, instance.q
    if not 0 <= w <= n:
        raise InputError(f"Need 0 <= w <= n, got w={w}, n={n}")
    if work_limit is None:
        work_limit = get_settings().oracle.work_limit
    E = np.array(instance.restricted.E, dtype=np.int64)
    space = search_space(n, w, E.size)
    if space > work_limit:
        raise WorkLimitExceeded(
            f"Search space {space} exceeds the work limit {work_limit}")
    debug.debug(f"Oracle: enumerating {space} candidates")

    if w == 0:
        zero = np.zeros(n, dtype=np.int64)
        return [zero] if not instance.s.any() else []

    H = instance.H
    s = instance.s
    syndrome_len = H.shape[0]
    total_assignments = E.size**w
    chunk = max(1, min(total_assignments, _BLOCK_ENTRIES // max(1, syndrome_len)))
    support_batch = max(1, _BLOCK_ENTRIES // max(1, chunk * syndrome_len))

    solutions = []
    supports = itertools.combinations(range(n), w)
    while True:
        batch = list(itertools.islice(supports, support_batch))
        if not batch:
            break
        batch = np.array(batch, dtype=np.int64)
        # (supports, w, syndrome)
        columns = np.transpose(H[:, batch], (1, 2, 0))
        for start in range(0, total_assignments, chunk):
            values = _assignments(E, w, start, min(start + chunk, total_assignments))
            # (supports, assignments, syndrome), reduced after every column
            syndromes = np.zeros((batch.shape[0], values.shape[0], syndrome_len), dtype=np.int64)
            for j in range(w):
                syndromes += columns[:, None, j, :] * values[None, :, j, None]
                syndromes %= q
            hits = np.nonzero((syndromes == s).all(axis=2))
            for b, a in zip(*hits):
                e = np.zeros(n, dtype=np.int64)
                e[batch[b]] = values[a]
                solutions.append(e)

    solutions.sort(key=lambda e: tuple(e))
    debug.debug(f"Oracle: {len(solutions)} solution(s)")
    return solutions
