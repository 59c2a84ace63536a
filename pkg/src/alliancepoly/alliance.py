"""Defensive k-alliance predicate and the strong alliance number."""

from __future__ import annotations

from itertools import combinations

from .graph import Graph, VertexSet, degree_in_set, is_connected_subset


def _check_level(g: Graph, k: int) -> None:
    if abs(k) > g.max_degree:
        raise ValueError(f"defense level k={k} outside [-{g.max_degree}, {g.max_degree}]")


def is_defensive_alliance(g: Graph, s: VertexSet, k: int = 0) -> bool:
    """Every member of ``s`` has at least ``k`` more neighbours inside ``s`` than outside.

    Connectedness of ``s`` is not tested.
    """
    if not s:
        raise ValueError("alliances are nonempty")
    _check_level(g, k)
    outside = s.complement()
    return all(degree_in_set(g, v, s) >= degree_in_set(g, v, outside) + k for v in s)


def is_strong_alliance_connected(g: Graph, s: VertexSet) -> bool:
    """Membership test for the sets counted by the alliance polynomial."""
    return is_defensive_alliance(g, s, 0) and is_connected_subset(g, s)


def strong_alliance_number(g: Graph) -> int:
    """Smallest cardinality of a connected strong defensive alliance.

    Searches cardinalities upward and stops at the first hit, which is cheap
    because the answer is usually 1 or 2 outside dense graphs.
    """
    for size in range(1, g.n + 1):
        for combo in combinations(range(g.n), size):
            if is_strong_alliance_connected(g, VertexSet.of(g, combo)):
                return size
    raise AssertionError("every component is an alliance; unreachable")
