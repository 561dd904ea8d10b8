"""
List merging.

Every list entry is a vector x over a block of the k+l positions together
with its key x @ A2 (all l symbols of the partial syndrome). Merges look
at a window of key symbols only.

- concatenation_merge: L1 and L2 live on disjoint position blocks, the
  output concatenates matching pairs
- representation_merge: L1 and L2 live on the same positions, the output
  holds the distinct sums that pass the next level's filter

Matching pairs are found with a sort-based join: keys are turned into
integer codes, L2 is sorted by code and every L1 entry probes for the
code of (target - key) mod q.
"""

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from galois_core.error_sets import IN_E, IN_PLUS, OTHER
from galois_core.linalg import matmul_mod
from shared.errors import ConfigError

# Pairs materialized at once by representation_merge
PAIR_CHUNK = 1 << 18


@dataclass(frozen=True, eq=False)
class WellFormed:
    """Predicate: exactly v symbols from E, m from E_plus, zeros elsewhere."""
    classes: np.ndarray
    v: int
    m: int = 0

    def __call__(self, vectors: np.ndarray) -> np.ndarray:
        cls = self.classes[vectors]
        return ((cls != OTHER).all(axis=1)
                & ((cls == IN_E).sum(axis=1) == self.v)
                & ((cls == IN_PLUS).sum(axis=1) == self.m))


@dataclass(frozen=True, eq=False)
class MergeList:
    level: int
    alphabet: WellFormed
    offset: int
    vectors: np.ndarray   # (entries, block length)
    keys: np.ndarray      # (entries, l)

    def __len__(self) -> int:
        return self.vectors.shape[0]

    @property
    def length(self) -> int:
        return self.vectors.shape[1]

    def audit(self, A2: np.ndarray, q: int, sample: Optional[int] = None,
              rng: Optional[np.random.Generator] = None):
        """Assert well-formedness and key consistency (optionally on a sample)."""
        rows = np.arange(len(self))
        if sample is not None and len(self) > sample:
            rows = (rng or np.random.default_rng(0)).choice(rows, size=sample, replace=False)
        vectors = self.vectors[rows]
        assert self.alphabet(vectors).all(), f"Level {self.level} list has malformed entries"
        block = A2[self.offset:self.offset + self.length]
        assert np.array_equal(matmul_mod(vectors, block, q), self.keys[rows]), \
            f"Level {self.level} list has stale keys"


def make_list(level: int, alphabet: WellFormed, offset: int, vectors: np.ndarray,
              A2: np.ndarray, q: int) -> MergeList:
    """Wrap vectors on positions [offset, offset+length) and compute their keys."""
    block = A2[offset:offset + vectors.shape[1]]
    keys = matmul_mod(vectors, block, q) if len(vectors) else np.zeros((0, A2.shape[1]), dtype=np.int64)
    return MergeList(level=level, alphabet=alphabet, offset=offset, vectors=vectors, keys=keys)


def enumeration_size(length: int, v: int, m: int, e_size: int, plus_size: int) -> int:
    """Entries enumerate_vectors would return, without building them."""
    if v + m > length or v < 0 or m < 0:
        return 0
    return math.comb(length, v) * math.comb(length - v, m) * e_size ** v * plus_size ** m


@lru_cache(maxsize=8)
def enumerate_vectors(length: int, v: int, m: int,
                      E: Tuple[int, ...], E_plus: Tuple[int, ...]) -> np.ndarray:
    """
    All vectors of the given length with v entries from E, m from E_plus
    and zeros elsewhere. The result is cached and read-only.
    """
    if v + m > length or v < 0 or m < 0:
        out = np.zeros((0, length), dtype=np.int64)
        out.flags.writeable = False
        return out

    patterns_a, patterns_b = [], []
    for a_pos in itertools.combinations(range(length), v):
        rest = [p for p in range(length) if p not in a_pos]
        for b_pos in itertools.combinations(rest, m):
            patterns_a.append(a_pos)
            patterns_b.append(b_pos)
    a_idx = np.array(patterns_a, dtype=np.int64).reshape(len(patterns_a), v)
    b_idx = np.array(patterns_b, dtype=np.int64).reshape(len(patterns_b), m)

    values_a = np.array(list(itertools.product(E, repeat=v)), dtype=np.int64).reshape(len(E) ** v, v)
    values_b = np.array(list(itertools.product(E_plus, repeat=m)), dtype=np.int64).reshape(len(E_plus) ** m, m)
    # every combination of an E assignment with an E_plus assignment
    combo_a = np.repeat(values_a, len(values_b), axis=0)
    combo_b = np.tile(values_b, (len(values_a), 1))

    patterns = len(patterns_a)
    combos = len(combo_a)
    out = np.zeros((patterns, combos, length), dtype=np.int64)
    rows = np.arange(patterns)[:, None]
    cols = np.arange(combos)[None, :]
    for j in range(v):
        out[rows, cols, a_idx[:, j][:, None]] = combo_a[:, j][None, :]
    for j in range(m):
        out[rows, cols, b_idx[:, j][:, None]] = combo_b[:, j][None, :]
    out = out.reshape(patterns * combos, length)
    out.flags.writeable = False
    return out


def _codes(rows_a: np.ndarray, rows_b: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Shared integer codes for the rows of two key blocks."""
    if rows_a.shape[1] == 0:
        return np.zeros(len(rows_a), dtype=np.int64), np.zeros(len(rows_b), dtype=np.int64)
    stacked = np.concatenate([rows_a, rows_b], axis=0)
    _, inverse = np.unique(stacked, axis=0, return_inverse=True)
    inverse = inverse.reshape(-1)
    return inverse[:len(rows_a)], inverse[len(rows_a):]


def join_indices(keys1: np.ndarray, keys2: np.ndarray, target: np.ndarray,
                 q: int) -> Tuple[np.ndarray, np.ndarray]:
    """Index pairs (i, j) with keys1[i] + keys2[j] = target (mod q)."""
    if len(keys1) == 0 or len(keys2) == 0:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty
    needed = np.mod(np.asarray(target, dtype=np.int64)[None, :] - keys1, q)
    codes1, codes2 = _codes(needed, keys2)

    order = np.argsort(codes2, kind="stable")
    sorted2 = codes2[order]
    lo = np.searchsorted(sorted2, codes1, side="left")
    hi = np.searchsorted(sorted2, codes1, side="right")
    counts = hi - lo
    total = int(counts.sum())
    i_idx = np.repeat(np.arange(len(keys1)), counts)
    starts = np.repeat(lo, counts)
    within = np.arange(total) - np.repeat(np.cumsum(counts) - counts, counts)
    return i_idx, order[starts + within]


def _window(window) -> np.ndarray:
    if isinstance(window, slice):
        raise TypeError("Pass the window as a sequence of symbol indices")
    return np.asarray(window, dtype=np.int64).reshape(-1)


def concatenation_merge(L1: MergeList, L2: MergeList, target: np.ndarray, window: Sequence[int],
                        q: int, alphabet: Optional[WellFormed] = None, level: Optional[int] = None,
                        guard_limit: Optional[int] = None) -> MergeList:
    """
    Concatenations (x1 | x2) whose combined key equals target on the window.

    L1 must cover the positions directly before those of L2.
    """
    if L1.offset + L1.length != L2.offset:
        raise ValueError("Concatenation merge needs adjacent position blocks")
    window = _window(window)
    i_idx, j_idx = join_indices(L1.keys[:, window], L2.keys[:, window], target, q)
    if guard_limit is not None and len(i_idx) > guard_limit:
        raise ConfigError(f"Concatenation merge would hold {len(i_idx)} entries (guard {guard_limit})")
    vectors = np.concatenate([L1.vectors[i_idx], L2.vectors[j_idx]], axis=1)
    keys = np.mod(L1.keys[i_idx] + L2.keys[j_idx], q)
    if alphabet is None:
        alphabet = WellFormed(L1.alphabet.classes, L1.alphabet.v + L2.alphabet.v,
                              L1.alphabet.m + L2.alphabet.m)
    return MergeList(level=L1.level if level is None else level, alphabet=alphabet,
                     offset=L1.offset, vectors=vectors, keys=keys)


def representation_merge(L1: MergeList, L2: MergeList, target: np.ndarray, window: Sequence[int],
                         keep: Callable[[np.ndarray], np.ndarray], q: int,
                         alphabet: Optional[WellFormed] = None, level: Optional[int] = None,
                         guard_limit: Optional[int] = None) -> MergeList:
    """
    Distinct sums x1 + x2 whose keys sum to target on the window and that
    pass `keep`. Output rows are sorted lexicographically.
    """
    if L1.offset != L2.offset or L1.length != L2.length:
        raise ValueError("Representation merge needs lists on the same positions")
    window = _window(window)
    i_idx, j_idx = join_indices(L1.keys[:, window], L2.keys[:, window], target, q)

    kept_vectors, kept_keys = [], []
    for start in range(0, len(i_idx), PAIR_CHUNK):
        i_part = i_idx[start:start + PAIR_CHUNK]
        j_part = j_idx[start:start + PAIR_CHUNK]
        sums = np.mod(L1.vectors[i_part] + L2.vectors[j_part], q)
        mask = keep(sums)
        if mask.any():
            kept_vectors.append(sums[mask])
            kept_keys.append(np.mod(L1.keys[i_part[mask]] + L2.keys[j_part[mask]], q))

    if kept_vectors:
        vectors = np.concatenate(kept_vectors, axis=0)
        keys = np.concatenate(kept_keys, axis=0)
        vectors, first = np.unique(vectors, axis=0, return_index=True)
        keys = keys[first]
    else:
        vectors = np.zeros((0, L1.length), dtype=np.int64)
        keys = np.zeros((0, L1.keys.shape[1]), dtype=np.int64)
    if guard_limit is not None and len(vectors) > guard_limit:
        raise ConfigError(f"Representation merge kept {len(vectors)} entries (guard {guard_limit})")
    if alphabet is None:
        alphabet = keep if isinstance(keep, WellFormed) else L1.alphabet
    return MergeList(level=L1.level - 1 if level is None else level, alphabet=alphabet,
                     offset=L1.offset, vectors=vectors, keys=keys)
