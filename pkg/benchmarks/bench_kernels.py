"""Time the numba kernels against the numpy / pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]

Both paths run in this process; the fallback is selected by flipping
``_kernels.USE_NUMBA`` (the same switch ``ALLIANCEPOLY_NO_NUMBA=1`` sets at import).
"""

from __future__ import annotations

import argparse
import time

from alliancepoly import _kernels
from alliancepoly.enumerator import compute_polynomial, compute_polynomial_oracle
from alliancepoly.families import FamilySpec, family_graph
from alliancepoly.graph import random_corpus

CASES = [
    ("oracle", "random n=16 p~U", lambda: random_corpus(16, 3, seed=1), compute_polynomial_oracle),
    ("connected", "random n=16 p~U", lambda: random_corpus(16, 3, seed=1), compute_polynomial),
    ("connected", "K_18", lambda: [family_graph(FamilySpec("complete", (18,)))], compute_polynomial),
    ("connected", "double_star 9,9", lambda: [family_graph(FamilySpec("double_star", (9, 9)))], compute_polynomial),
]


def best_of(fn, graphs, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        results = [fn(g) for g in graphs]
        times.append(time.perf_counter() - t0)
    return min(times), results


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    have_numba = _kernels.USE_NUMBA
    print(f"numba available: {have_numba}")
    print(f"{'engine':<10} {'graphs':<18} {'numba s':>10} {'fallback s':>11} {'speedup':>8}")
    for engine, label, make, fn in CASES:
        graphs = make()
        if have_numba:
            fn(graphs[0])  # compile / load cache outside the timing
            t_fast, fast = best_of(fn, graphs, args.repeat)
        _kernels.USE_NUMBA = False
        try:
            t_slow, slow = best_of(fn, graphs, 1)
        finally:
            _kernels.USE_NUMBA = have_numba
        if have_numba:
            assert fast == slow, "kernel paths disagree"
            print(f"{engine:<10} {label:<18} {t_fast:>10.4f} {t_slow:>11.4f} {t_slow / t_fast:>7.1f}x")
        else:
            print(f"{engine:<10} {label:<18} {'-':>10} {t_slow:>11.4f} {'-':>8}")


if __name__ == "__main__":
    main()
