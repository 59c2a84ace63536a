from __future__ import annotations

from itertools import combinations

import networkx as nx
import pytest

from alliancepoly.graph import Graph, build_graph
from alliancepoly.polynomial import AlliancePolynomial

# 1-based edge list read off the drawing of the non-unimodal example
FIGURE2_EDGES_1BASED = [(1, 2), (1, 3), (2, 3), (3, 4), (4, 7), (4, 5), (5, 6), (5, 7), (6, 7)]


def figure2_graph() -> Graph:
    return build_graph(7, [(u - 1, v - 1) for u, v in FIGURE2_EDGES_1BASED])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def naive_polynomial(g: Graph) -> AlliancePolynomial:
    """Reference count built on networkx and itertools only; shares no code with the engines."""
    h = to_nx(g)
    counts = [0] * (g.n + 1)
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            if not nx.is_connected(h.subgraph(combo)):
                continue
            inside = set(combo)
            if all(sum(u in inside for u in h[v]) >= sum(u not in inside for u in h[v]) for v in combo):
                counts[k] += 1
    return AlliancePolynomial(counts)


@pytest.fixture
def fig2() -> Graph:
    return figure2_graph()


@pytest.fixture
def c4() -> Graph:
    return build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def p4() -> Graph:
    return build_graph(4, [(0, 1), (1, 2), (2, 3)])


def complete(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


# acceptance criteria register one line each here; printed after the run
ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[0])):
        ok, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
