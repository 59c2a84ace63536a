"""Bitmask inner loops for subset enumeration.

Two implementations of each kernel live here: numba ``@njit`` versions over
``uint64`` words, and a fallback (vectorised numpy for the full-subset sweep,
plain Python ints for connected expansion). Set ``ALLIANCEPOLY_NO_NUMBA=1``
to force the fallback; it is also used when numba is not importable.

Vertex ``v`` is bit ``v``. ``masks[v]`` is the neighbourhood of ``v`` and
``deg[v]`` its degree. A set ``S`` passes the strong-defense test when
``2 * |N(v) & S| >= deg(v)`` for every ``v`` in ``S``.

Connected expansion works on frames ``(S, C, X)``: ``S`` is a connected set
that has already been counted, ``X`` is excluded, and ``C = N(S) - S - X`` are
the candidates still to branch on. Popping a frame takes the lowest ``u`` in
``C``, pushes the continuation ``(S, C - u, X + u)`` and the child
``(S + u, (C - u) | N(u) - (S + u) - X, X)``, counting ``S + u``. Every
connected superset of ``S`` avoiding ``X`` is produced exactly once.
"""

from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("ALLIANCEPOLY_NO_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    if _DISABLED:
        raise ImportError("disabled by ALLIANCEPOLY_NO_NUMBA")
    import numba
except ImportError:
    numba = None

USE_NUMBA = numba is not None

# keeps Python-int frames from growing without bound between budget checks
STEP_CHUNK = 1 << 18


# -- fallback: numpy full sweep ---------------------------------------------


def oracle_counts_numpy(masks: np.ndarray, deg: np.ndarray, n: int, lo: int, hi: int) -> tuple[np.ndarray, int]:
    """Counts by cardinality of connected strong alliances among masks in ``[lo, hi)``."""
    counts = np.zeros(n + 1, dtype=np.int64)
    m = np.arange(lo, hi, dtype=np.uint64)
    one = np.uint64(1)
    ok = np.ones(m.size, dtype=bool)
    for v in range(n):
        member = ((m >> np.uint64(v)) & one).astype(bool)
        inside = np.bitwise_count(m & masks[v]).astype(np.int64)
        ok &= ~member | (2 * inside >= deg[v])
    m = m[ok]
    if m.size:
        reach = m & (~m + one)
        while True:
            grow = reach.copy()
            for v in range(n):
                hit = ((reach >> np.uint64(v)) & one).astype(bool)
                grow[hit] |= masks[v]
            grow &= m
            if np.array_equal(grow, reach):
                break
            reach = grow
        sizes = np.bitwise_count(m[reach == m]).astype(np.int64)
        counts += np.bincount(sizes, minlength=n + 1)
    return counts, hi - lo


# -- fallback: Python-int connected expansion -------------------------------


def _defended_py(masks: list[int], deg: list[int], s: int) -> bool:
    m = s
    while m:
        low = m & -m
        v = low.bit_length() - 1
        if 2 * (masks[v] & s).bit_count() < deg[v]:
            return False
        m ^= low
    return True


def emit_frames_py(masks, deg, frames: list[tuple[int, int, int]], counts: np.ndarray, check: bool) -> int:
    for s, _, _ in frames:
        if not check or _defended_py(masks, deg, s):
            counts[s.bit_count()] += 1
    return len(frames)


def expand_py(masks, deg, stack: list[tuple[int, int, int]], counts: np.ndarray, check: bool, max_steps: int) -> int:
    """Advance the frame stack by up to ``max_steps`` counted sets; mutates ``stack``."""
    steps = 0
    while stack and steps < max_steps:
        s, c, x = stack.pop()
        if not c:
            continue
        low = c & -c
        rest = c ^ low
        if rest:
            stack.append((s, rest, x | low))
        s2 = s | low
        child = (rest | masks[low.bit_length() - 1]) & ~s2 & ~x
        steps += 1
        if not check or _defended_py(masks, deg, s2):
            counts[s2.bit_count()] += 1
        if child:
            stack.append((s2, child, x))
    return steps


# -- numba ------------------------------------------------------------------

if USE_NUMBA:
    _M1 = np.uint64(0x5555555555555555)
    _M2 = np.uint64(0x3333333333333333)
    _M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
    _H01 = np.uint64(0x0101010101010101)
    _DEBRUIJN = np.uint64(0x03F79D71B4CB0A89)
    _DB_TABLE = np.zeros(64, dtype=np.int64)
    for _i in range(64):
        _DB_TABLE[(((1 << _i) * 0x03F79D71B4CB0A89) & 0xFFFFFFFFFFFFFFFF) >> 58] = _i
    _ONE = np.uint64(1)
    _ZERO = np.uint64(0)

    @numba.njit(cache=True, nogil=True)
    def _popcount(x):
        x = x - ((x >> np.uint64(1)) & _M1)
        x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
        x = (x + (x >> np.uint64(4))) & _M4
        return np.int64((x * _H01) >> np.uint64(56))

    @numba.njit(cache=True, nogil=True)
    def _lowbit_index(low):
        return _DB_TABLE[np.int64((low * _DEBRUIJN) >> np.uint64(58))]

    @numba.njit(cache=True, nogil=True)
    def _defended(masks, deg, s):
        m = s
        while m != _ZERO:
            low = m & (~m + _ONE)
            v = _lowbit_index(low)
            if 2 * _popcount(masks[v] & s) < deg[v]:
                return False
            m ^= low
        return True

    @numba.njit(cache=True, nogil=True)
    def _connected(masks, s):
        reach = s & (~s + _ONE)
        frontier = reach
        while frontier != _ZERO:
            nxt = _ZERO
            m = frontier
            while m != _ZERO:
                low = m & (~m + _ONE)
                nxt |= masks[_lowbit_index(low)]
                m ^= low
            frontier = nxt & s & ~reach
            reach |= frontier
        return reach == s

    @numba.njit(cache=True, nogil=True)
    def oracle_counts_numba(masks, deg, n, lo, hi):
        counts = np.zeros(n + 1, dtype=np.int64)
        for i in range(lo, hi):
            s = np.uint64(i)
            if _defended(masks, deg, s) and _connected(masks, s):
                counts[_popcount(s)] += 1
        return counts, hi - lo

    @numba.njit(cache=True, nogil=True)
    def emit_frames_numba(masks, deg, stack_s, sp, counts, check):
        for i in range(sp):
            s = stack_s[i]
            if not check or _defended(masks, deg, s):
                counts[_popcount(s)] += 1
        return sp

    @numba.njit(cache=True, nogil=True)
    def expand_numba(masks, deg, stack_s, stack_c, stack_x, sp, counts, check, max_steps):
        """Returns ``(new_sp, steps)``; stack arrays are updated in place."""
        steps = 0
        while sp > 0 and steps < max_steps:
            sp -= 1
            s = stack_s[sp]
            c = stack_c[sp]
            x = stack_x[sp]
            if c == _ZERO:
                continue
            low = c & (~c + _ONE)
            rest = c ^ low
            if rest != _ZERO:
                stack_s[sp] = s
                stack_c[sp] = rest
                stack_x[sp] = x | low
                sp += 1
            s2 = s | low
            child = (rest | masks[_lowbit_index(low)]) & ~s2 & ~x
            steps += 1
            if not check or _defended(masks, deg, s2):
                counts[_popcount(s2)] += 1
            if child != _ZERO:
                stack_s[sp] = s2
                stack_c[sp] = child
                stack_x[sp] = x
                sp += 1
        return sp, steps
