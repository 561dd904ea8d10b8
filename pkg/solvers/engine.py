"""
ISD iteration engine shared by every solver.

One iteration draws a column permutation, runs PGE and enumerates
candidates e2 of the small instance through a tree of list merges:

    level a      base lists, concatenation merge of two half lists
    level a-1..0 representation merges, filtered to the level's shape

Stern is the tree of depth 0. Iterations are independent given
(seed, counter); batches may run on a thread pool, and results are read
in counter order so every thread count gives the same report.
"""

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

import numpy as np

from galois_core.error_sets import IN_E, ZERO, RestrictedSet
from galois_core.instance import DecodingInstance, verify_solution
from galois_core.pge import PGEForm, pge
from galois_core.rng import stream
from shared.debug_log import debug
from shared.errors import ConfigError, ResamplePermutation
from shared.settings import get_settings
from solvers.config import LevelShape, SolverConfig, window_widths
from solvers.merge import (
    MergeList,
    WellFormed,
    concatenation_merge,
    enumerate_vectors,
    enumeration_size,
    make_list,
    representation_merge,
)
from solvers.report import EXHAUSTED, FOUND, SolverReport


@dataclass(frozen=True, eq=False)
class IterationPlan:
    """What one iteration enumerates: instance, level shapes and windows.

    When the enumerated instance is a transform of the caller's, `original`
    and `to_original` map a solution back before it is verified.
    """
    instance: DecodingInstance
    shapes: List[LevelShape]
    windows: List[int]
    ell: int
    original: Optional[DecodingInstance] = None
    to_original: Optional[Callable[[np.ndarray], np.ndarray]] = None

    @property
    def depth(self) -> int:
        return len(self.shapes) - 1


@dataclass
class IterationResult:
    e: Optional[np.ndarray] = None
    # list sizes per level, level 0 first
    sizes: List[List[int]] = field(default_factory=list)
    plan: Optional[IterationPlan] = None


class LevelTree:
    """Lists of one iteration, memoized on (level, mirror, target)."""

    def __init__(self, form: PGEForm, restricted: RestrictedSet, plan: IterationPlan,
                 rng: np.random.Generator, audit: bool, guard_limit: int):
        self.form = form
        self.q = restricted.q
        self.E = tuple(restricted.E)
        self.E_plus = tuple(restricted.E_plus)
        self.classes = restricted.symbol_classes()
        self.shapes = plan.shapes
        self.windows = plan.windows
        self.depth = plan.depth
        self.rng = rng
        self.audit = audit
        self.guard_limit = guard_limit
        self.sizes: List[List[int]] = [[] for _ in self.shapes]
        self._memo: Dict[tuple, MergeList] = {}

    def alphabet(self, level: int) -> WellFormed:
        shape = self.shapes[level]
        return WellFormed(self.classes, shape.v, shape.m)

    def _half_list(self, offset: int, length: int, v: int, m: int) -> MergeList:
        size = enumeration_size(length, v, m, len(self.E), len(self.E_plus))
        if size > self.guard_limit:
            raise ConfigError(f"Half list of {size} entries exceeds the guard {self.guard_limit}")
        vectors = enumerate_vectors(length, v, m, self.E, self.E_plus)
        return make_list(self.depth, WellFormed(self.classes, v, m), offset, vectors, self.form.A2, self.q)

    def base(self, mirror: int, target: np.ndarray) -> MergeList:
        """Level-a list: concatenation of half lists, ceiling share on the left unless mirrored."""
        shape = self.shapes[self.depth]
        k_ell = self.form.k_ell
        left_len = (k_ell + 1) // 2
        v_big, v_small = (shape.v + 1) // 2, shape.v // 2
        m_big, m_small = (shape.m + 1) // 2, shape.m // 2
        if mirror:
            v_big, v_small = v_small, v_big
            m_big, m_small = m_small, m_big
        left = self._half_list(0, left_len, v_big, m_big)
        right = self._half_list(left_len, k_ell - left_len, v_small, m_small)
        return concatenation_merge(left, right, target, range(self.windows[self.depth]), self.q,
                                   alphabet=self.alphabet(self.depth), level=self.depth,
                                   guard_limit=self.guard_limit)

    def build(self, level: int, mirror: int, target: np.ndarray) -> MergeList:
        """List of level `level` whose keys equal target on the first c_level symbols."""
        key = (level, mirror if level == self.depth else 0, target.tobytes())
        if key in self._memo:
            return self._memo[key]

        if level == self.depth:
            out = self.base(mirror, target)
        else:
            c_child = self.windows[level + 1]
            c_here = self.windows[level]
            t1 = self.rng.integers(0, self.q, size=c_child, dtype=np.int64)
            t2 = np.mod(target[:c_child] - t1, self.q)
            L1 = self.build(level + 1, 0, t1)
            L2 = self.build(level + 1, 1, t2)
            alphabet = self.alphabet(level)
            out = representation_merge(L1, L2, target[c_child:c_here], range(c_child, c_here),
                                       alphabet, self.q, alphabet=alphabet, level=level,
                                       guard_limit=self.guard_limit)
        if self.audit:
            out.audit(self.form.A2, self.q)
        self.sizes[level].append(len(out))
        self._memo[key] = out
        return out

    def candidates(self) -> np.ndarray:
        return self.build(0, 0, np.asarray(self.form.s2, dtype=np.int64)).vectors


def accept(form: PGEForm, classes: np.ndarray, e2s: np.ndarray, rest_weight: int) -> Optional[int]:
    """Index of the first e2 whose completion e1 lies in E0 with weight rest_weight."""
    if len(e2s) == 0:
        return None
    e1s = form.complete(e2s)
    cls = classes[e1s]
    ok = ((cls == ZERO) | (cls == IN_E)).all(axis=1) & ((cls == IN_E).sum(axis=1) == rest_weight)
    hits = np.flatnonzero(ok)
    return int(hits[0]) if hits.size else None


def run_iteration(plan: IterationPlan, seed: int, counter: int, audit: bool,
                  guard_limit: int) -> IterationResult:
    instance = plan.instance
    restricted = instance.restricted
    rng = stream(seed, counter)
    permutation = rng.permutation(instance.n)
    try:
        form = pge(instance, plan.ell, permutation=permutation)
    except ResamplePermutation as e:
        debug.debug(f"Iteration {counter}: {e}")
        return IterationResult(plan=plan)

    v = plan.shapes[0].v
    if v == 0:
        # e2 = 0 is the only candidate and needs s2 = 0
        e2s = np.zeros((0 if form.s2.any() else 1, form.k_ell), dtype=np.int64)
        sizes = []
    else:
        tree = LevelTree(form, restricted, plan, rng, audit, guard_limit)
        e2s = tree.candidates()
        sizes = tree.sizes

    classes = restricted.symbol_classes()
    hit = accept(form, classes, e2s, instance.w - v)
    if hit is None:
        return IterationResult(sizes=sizes, plan=plan)
    e = form.unpermute(e2s[hit], form.complete(e2s[hit]))
    if plan.to_original is not None:
        e = plan.to_original(e)
    if not verify_solution(plan.original or instance, e):
        debug.error(f"Iteration {counter}: candidate failed verification")
        return IterationResult(sizes=sizes, plan=plan)
    return IterationResult(e=e, sizes=sizes, plan=plan)


def resolve_threads(threads: Optional[int]) -> int:
    if threads is None:
        threads = get_settings().solver.threads
    return threads if threads > 0 else (os.cpu_count() or 1)


def _summarize(per_level: List[List[int]]) -> List[List[int]]:
    return [[max(sizes), int(round(sum(sizes) / len(sizes)))] if sizes else [0, 0]
            for sizes in per_level]


def run_solver(plan_for: Callable[[int], IterationPlan], config: SolverConfig, cap: int) -> SolverReport:
    """
    Run up to `cap` iterations and report the first success in counter order.

    Args:
        plan_for: Plan for iteration `counter`
        config: Solver configuration (seed, threads, audit, guard)
        cap: Iteration cap
    """
    settings = get_settings().solver
    audit = settings.audit if config.audit is None else config.audit
    guard_limit = settings.guard_limit if config.guard_limit is None else config.guard_limit
    threads = resolve_threads(config.threads)
    batch_size = max(1, settings.batch_size)
    started = time.perf_counter()

    def attempt(counter: int) -> IterationResult:
        return run_iteration(plan_for(counter), config.seed, counter, audit, guard_limit)

    per_level: List[List[int]] = []
    first_plan = plan_for(0)
    found: Optional[IterationResult] = None
    used = 0

    def consume(result: IterationResult) -> bool:
        nonlocal found, used
        used += 1
        for level, sizes in enumerate(result.sizes):
            while len(per_level) <= level:
                per_level.append([])
            per_level[level].extend(sizes)
        if result.e is not None:
            found = result
            return True
        return False

    if threads == 1:
        for counter in range(cap):
            if consume(attempt(counter)):
                break
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for start in range(0, cap, batch_size):
                batch = range(start, min(start + batch_size, cap))
                if any(consume(result) for result in pool.map(attempt, batch)):
                    break

    elapsed_ms = int(round((time.perf_counter() - started) * 1000))
    plan = found.plan if found is not None else first_plan
    widths = window_widths(plan.windows) if plan.shapes[0].v else []
    if found is not None:
        debug.info(f"{config.algorithm}: solution after {used} iteration(s), {elapsed_ms} ms")
        return SolverReport(FOUND, found.e, used, _summarize(per_level), widths, elapsed_ms,
                            config.algorithm, config.seed)
    debug.info(f"{config.algorithm}: exhausted after {used} iteration(s), {elapsed_ms} ms")
    return SolverReport(EXHAUSTED, None, used, _summarize(per_level), widths, elapsed_ms,
                        config.algorithm, config.seed)
