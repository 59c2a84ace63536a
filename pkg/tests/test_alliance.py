from __future__ import annotations

import itertools

import numpy as np
import pytest

from alliancepoly.alliance import is_defensive_alliance, is_strong_alliance_connected, strong_alliance_number
from alliancepoly.graph import VertexSet, build_graph, connected_components, random_corpus

from conftest import complete, naive_polynomial


def vs(g, *vertices):
    return VertexSet.of(g, vertices)


def test_defensive_examples(c4):
    assert is_defensive_alliance(c4, vs(c4, 0, 1), 0)
    k4 = complete(4)
    assert not is_defensive_alliance(k4, vs(k4, 0, 1), 0)
    assert is_defensive_alliance(k4, VertexSet(4, 0b1111), 0)


def test_defensive_rejects_empty_and_bad_level(c4):
    with pytest.raises(ValueError):
        is_defensive_alliance(c4, VertexSet(4, 0), 0)
    with pytest.raises(ValueError):
        is_defensive_alliance(c4, vs(c4, 0), 3)


def test_disconnected_defended_set_is_not_counted():
    g = build_graph(4, [(0, 1), (2, 3)])
    s = vs(g, 0, 1, 2, 3)
    assert is_defensive_alliance(g, s, 0)
    assert not is_strong_alliance_connected(g, s)


def test_strong_connected_examples(p4, fig2):
    assert is_strong_alliance_connected(p4, vs(p4, 0, 1))
    # Figure-2 pair {1, 2} in 1-based labels
    assert is_strong_alliance_connected(fig2, vs(fig2, 0, 1))
    pairs = [c for c in itertools.combinations(range(7), 2) if is_strong_alliance_connected(fig2, vs(fig2, *c))]
    assert pairs == [(0, 1)]
    e2 = build_graph(2, [])
    assert is_strong_alliance_connected(e2, vs(e2, 0))


@pytest.mark.parametrize(
    "g, expected",
    [
        (build_graph(5, [(i, (i + 1) % 5) for i in range(5)]), 2),
        (build_graph(3, [(0, 1), (1, 2), (2, 0)]), 2),
        (complete(5), 3),
        (build_graph(6, [(i, 3 + j) for i in range(3) for j in range(3)]), 4),
        (build_graph(4, []), 1),
    ],
)
def test_strong_alliance_number(g, expected):
    assert strong_alliance_number(g) == expected


@pytest.mark.parametrize("n", range(2, 8))
def test_monotone_in_k(n):
    for g in random_corpus(n, 10, seed=11):
        if g.max_degree == 0:
            continue
        for mask in range(1, 1 << n):
            s = VertexSet(n, mask)
            levels = range(-g.max_degree, g.max_degree + 1)
            flags = [is_defensive_alliance(g, s, k) for k in levels]
            # once false for some k, false for every larger k
            assert flags == sorted(flags, reverse=True)


@pytest.mark.parametrize("n", range(1, 9))
def test_structural_members(n):
    for g in random_corpus(n, 15, seed=5):
        for comp in connected_components(g):
            assert is_strong_alliance_connected(g, comp)
        for v in range(n):
            assert is_strong_alliance_connected(g, vs(g, v)) == (g.degree[v] == 0)
        if g.is_connected():
            assert is_strong_alliance_connected(g, VertexSet(n, g.full_mask))
        assert strong_alliance_number(g) == next(k for k, c in enumerate(naive_polynomial(g).coeffs) if c)
