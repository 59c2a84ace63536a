"""Exact computation of the strong alliance polynomial.

Two engines:

* ``oracle`` tests every nonempty subset (``n <= 24``).
* ``connected`` only visits vertex sets whose induced subgraph is connected,
  each exactly once, rooted at its smallest vertex (``n <= 64``).

Both accumulate per-cardinality counts in private vectors that are summed at
the end, so the result does not depend on the worker count.
"""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import BudgetExceeded, GraphSizeError
from .graph import MAX_VERTICES, Graph
from .polynomial import AlliancePolynomial

ORACLE_MAX_N = 24
# above this, callers must pass an explicit budget (math.inf to run unbounded)
UNBUDGETED_MAX_N = 20
ORACLE_CHUNK = 1 << 16

ENGINES = ("auto", "oracle", "connected")


@dataclass(frozen=True)
class EnumerationStats:
    subsets_visited: int
    alliances_found: int
    elapsed: float
    engine: str


class _Deadline:
    def __init__(self, budget: float | None) -> None:
        self.budget = budget
        self.stop = None if budget is None or math.isinf(budget) else time.monotonic() + budget

    def check(self) -> None:
        if self.stop is not None and time.monotonic() > self.stop:
            raise BudgetExceeded(f"enumeration exceeded its {self.budget}s budget")


def resolve_workers(workers: int | str | None) -> int:
    if workers in (None, "max"):
        return os.cpu_count() or 1
    w = int(workers)
    if w < 1:
        raise ValueError("workers must be >= 1")
    return w


def _check_budget_policy(g: Graph, budget: float | None) -> None:
    if g.n > UNBUDGETED_MAX_N and budget is None:
        raise GraphSizeError(
            f"n={g.n} > {UNBUDGETED_MAX_N}: exhaustive enumeration needs an explicit budget "
            "(seconds, or math.inf to disable the limit)"
        )


def _run_parallel(fn, parts: list, workers: int) -> list:
    if workers == 1 or len(parts) <= 1:
        return [fn(p) for p in parts]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, parts))


# -- oracle ------------------------------------------------------------------


def _oracle_counts(g: Graph, workers: int, deadline: _Deadline) -> tuple[np.ndarray, int]:
    masks = g.mask_array()
    deg = np.array(g.degree, dtype=np.int64)
    total = 1 << g.n
    bounds = [(lo, min(lo + ORACLE_CHUNK, total)) for lo in range(1, total, ORACLE_CHUNK)]
    kernel = _kernels.oracle_counts_numba if _kernels.USE_NUMBA else _kernels.oracle_counts_numpy
    groups = [bounds[i::workers] for i in range(workers)]

    def work(group):
        counts = np.zeros(g.n + 1, dtype=np.int64)
        visited = 0
        for lo, hi in group:
            deadline.check()
            c, v = kernel(masks, deg, g.n, lo, hi)
            counts += c
            visited += v
        return counts, visited

    results = _run_parallel(work, [grp for grp in groups if grp], workers)
    return sum((r[0] for r in results), np.zeros(g.n + 1, dtype=np.int64)), sum(r[1] for r in results)


def compute_polynomial_oracle(g: Graph, *, workers: int = 1, budget: float | None = None) -> AlliancePolynomial:
    """Count connected strong alliances by testing all ``2**n - 1`` nonempty subsets."""
    return enumerate_alliances(g, engine="oracle", workers=workers, budget=budget)[0]


# -- connected expansion -----------------------------------------------------


def _start_frames(g: Graph) -> list[tuple[int, int, int]]:
    """Roots plus their first expansion step, as independent frames.

    Each frame's own set still has to be counted; descendants are produced
    by the expansion kernel.
    """
    frames = []
    for r in range(g.n):
        s = 1 << r
        x = s - 1  # smaller vertices are reserved for their own roots
        c = g.masks[r] & ~x
        frames.append((s, 0, 0))
        while c:
            low = c & -c
            rest = c ^ low
            s2 = s | low
            frames.append((s2, (rest | g.masks[low.bit_length() - 1]) & ~s2 & ~x, x))
            x |= low
            c = rest
    return frames


def _connected_counts(g: Graph, workers: int, deadline: _Deadline, check: bool) -> tuple[np.ndarray, int]:
    frames = _start_frames(g)
    groups = [frames[i::workers] for i in range(workers)]
    n = g.n

    if _kernels.USE_NUMBA:
        masks = g.mask_array()
        deg = np.array(g.degree, dtype=np.int64)

        def work(group):
            size = len(group) + n + 2
            ss = np.zeros(size, dtype=np.uint64)
            cs = np.zeros(size, dtype=np.uint64)
            xs = np.zeros(size, dtype=np.uint64)
            # reversed so the stack pops frames in generation order
            for i, (s, c, x) in enumerate(reversed(group)):
                ss[i], cs[i], xs[i] = s, c, x
            counts = np.zeros(n + 1, dtype=np.int64)
            sp = len(group)
            visited = _kernels.emit_frames_numba(masks, deg, ss, sp, counts, check)
            while sp:
                deadline.check()
                sp, steps = _kernels.expand_numba(masks, deg, ss, cs, xs, sp, counts, check, _kernels.STEP_CHUNK)
                visited += steps
            return counts, visited
    else:
        masks_py = list(g.masks)
        deg_py = list(g.degree)

        def work(group):
            counts = np.zeros(n + 1, dtype=np.int64)
            stack = list(reversed(group))
            visited = _kernels.emit_frames_py(masks_py, deg_py, group, counts, check)
            while stack:
                deadline.check()
                visited += _kernels.expand_py(masks_py, deg_py, stack, counts, check, _kernels.STEP_CHUNK)
            return counts, visited

    results = _run_parallel(work, [grp for grp in groups if grp], workers)
    return sum((r[0] for r in results), np.zeros(n + 1, dtype=np.int64)), sum(r[1] for r in results)


def compute_polynomial(g: Graph, *, workers: int = 1, budget: float | None = None) -> AlliancePolynomial:
    """Strong alliance polynomial via connected-subset expansion."""
    return enumerate_alliances(g, engine="connected", workers=workers, budget=budget)[0]


def enumerate_alliances(
    g: Graph,
    engine: str = "auto",
    *,
    workers: int | str = 1,
    budget: float | None = None,
) -> tuple[AlliancePolynomial, EnumerationStats]:
    """Polynomial plus run statistics. ``budget`` is wall-clock seconds."""
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}; choose from {ENGINES}")
    engine = "connected" if engine == "auto" else engine
    cap = ORACLE_MAX_N if engine == "oracle" else MAX_VERTICES
    if g.n > cap:
        raise GraphSizeError(f"{engine} engine supports n <= {cap}, got n={g.n}")
    _check_budget_policy(g, budget)
    w = resolve_workers(workers)
    deadline = _Deadline(budget)
    t0 = time.perf_counter()
    if engine == "oracle":
        counts, visited = _oracle_counts(g, w, deadline)
    else:
        counts, visited = _connected_counts(g, w, deadline, check=True)
    poly = AlliancePolynomial(int(c) for c in counts)
    stats = EnumerationStats(
        subsets_visited=visited,
        alliances_found=int(counts.sum()),
        elapsed=time.perf_counter() - t0,
        engine=engine,
    )
    return poly, stats


def count_connected_subsets(g: Graph, *, workers: int = 1) -> int:
    """Number of nonempty vertex sets inducing a connected subgraph."""
    if g.n > ORACLE_MAX_N:
        raise GraphSizeError(f"count_connected_subsets supports n <= {ORACLE_MAX_N}, got n={g.n}")
    counts, _ = _connected_counts(g, resolve_workers(workers), _Deadline(None), check=False)
    return int(counts.sum())
