"""Immutable simple graphs on vertices 0..n-1 plus parsing and surgery helpers."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import GraphFormatError, GraphSizeError

MAX_VERTICES = 64
GRAPH6_MAX_VERTICES = 62

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph. Build with :func:`build_graph` rather than directly."""

    n: int
    edges: frozenset[Edge]
    adjacency: tuple[frozenset[int], ...] = field(repr=False, compare=False)
    degree: tuple[int, ...] = field(repr=False, compare=False)
    # bit v of masks[u] set iff u ~ v
    masks: tuple[int, ...] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def max_degree(self) -> int:
        return max(self.degree)

    @property
    def min_degree(self) -> int:
        return min(self.degree)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> frozenset[int]:
        _check_vertex(self, v)
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def mask_array(self) -> np.ndarray:
        """Neighbour bitmasks as a uint64 array (the layout the kernels consume)."""
        return np.array(self.masks, dtype=np.uint64)

    def is_connected(self) -> bool:
        return is_connected_subset(self, VertexSet(self.n, self.full_mask))

    def components(self) -> list[VertexSet]:
        return connected_components(self)

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class VertexSet:
    """Subset of the vertices of an ``n``-vertex graph, stored as a bitmask."""

    n: int
    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"mask {self.mask:#x} has bits outside 0..{self.n - 1}")

    @classmethod
    def of(cls, g_or_n: Graph | int, vertices: Iterable[int]) -> VertexSet:
        n = g_or_n.n if isinstance(g_or_n, Graph) else g_or_n
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range for n={n}")
            mask |= 1 << v
        return cls(n, mask)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, (int, np.integer)) and 0 <= v < self.n and bool(self.mask >> int(v) & 1)

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def complement(self) -> VertexSet:
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.mask)

    def __repr__(self) -> str:
        return f"VertexSet({sorted(self)})"


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")


def build_graph(n: int, edge_list: Iterable[Sequence[int]], *, strict: bool = False) -> Graph:
    """Build a graph on ``0..n-1``.

    Repeated pairs are silently merged unless ``strict`` is set, in which case
    they raise. Self-loops and out-of-range endpoints always raise.
    """
    if n < 1:
        raise GraphSizeError(f"graph needs at least one vertex, got n={n}")
    if n > MAX_VERTICES:
        raise GraphSizeError(f"n={n} exceeds the {MAX_VERTICES}-vertex cap")
    edges: set[Edge] = set()
    for pair in edge_list:
        u, v = (int(x) for x in pair)
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if strict and e in edges:
            raise ValueError(f"duplicate edge {e}")
        edges.add(e)
    adj: list[set[int]] = [set() for _ in range(n)]
    masks = [0] * n
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph(
        n=n,
        edges=frozenset(edges),
        adjacency=tuple(frozenset(a) for a in adj),
        degree=tuple(len(a) for a in adj),
        masks=tuple(masks),
    )


def degree_in_set(g: Graph, v: int, s: VertexSet) -> int:
    """Number of neighbours of ``v`` that lie in ``s``."""
    _check_vertex(g, v)
    return (g.masks[v] & s.mask).bit_count()


def is_connected_subset(g: Graph, s: VertexSet) -> bool:
    """True iff the subgraph induced by ``s`` is connected."""
    if not s:
        raise ValueError("connectivity of the empty set is undefined")
    reach = s.mask & -s.mask
    frontier = reach
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= g.masks[low.bit_length() - 1]
            m ^= low
        frontier = nxt & s.mask & ~reach
        reach |= frontier
    return reach == s.mask


def connected_components(g: Graph) -> list[VertexSet]:
    remaining = g.full_mask
    out = []
    while remaining:
        reach = remaining & -remaining
        frontier = reach
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= g.masks[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~reach
            reach |= frontier
        out.append(VertexSet(g.n, reach))
        remaining &= ~reach
    return out


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Union with ``g2`` relabelled to ``n1..n1+n2-1``."""
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise GraphSizeError(f"union has {n} vertices, cap is {MAX_VERTICES}")
    off = g1.n
    return build_graph(n, list(g1.edges) + [(u + off, v + off) for u, v in g2.edges])


def delete_edges(g: Graph, edges: Iterable[Sequence[int]]) -> Graph:
    drop = set()
    for u, v in edges:
        if not g.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        drop.add((min(u, v), max(u, v)))
    return build_graph(g.n, g.edges - drop)


def induced_subgraph(g: Graph, s: VertexSet) -> Graph:
    """Subgraph induced by ``s``, relabelled in increasing vertex order."""
    index = {v: i for i, v in enumerate(s)}
    return build_graph(len(index), [(index[u], index[v]) for u, v in g.edges if u in index and v in index])


def permute(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel vertex ``v`` as ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm must be a permutation of 0..n-1")
    return build_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Erdos-Renyi G(n, p) drawn from ``rng``."""
    iu, iv = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < p
    return build_graph(n, zip(iu[keep].tolist(), iv[keep].tolist()))


def random_corpus(n: int, count: int, seed: int) -> list[Graph]:
    """``count`` seeded random graphs on ``n`` vertices with densities spread over [0.15, 0.85]."""
    rng = np.random.default_rng([seed, n])
    return [random_graph(n, float(rng.uniform(0.15, 0.85)), rng) for _ in range(count)]


# -- edge-list text format ---------------------------------------------------


def parse_edge_list(text: str, *, strict: bool = True) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``. Lines starting with ``#`` are skipped.

    Duplicate edges raise in strict mode and are merged with a warning otherwise.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((lineno, int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {raw!r}") from None
    if not rows:
        raise GraphFormatError("missing 'n m' header")
    _, n, m = rows[0]
    if n < 1:
        raise GraphFormatError(f"header declares n={n}; at least one vertex is required")
    body = rows[1:]
    if m < 0 or len(body) != m:
        raise GraphFormatError(f"header declares {m} edges but {len(body)} edge lines follow")
    seen: set[Edge] = set()
    pairs = []
    for lineno, u, v in body:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex out of range 0..{n - 1}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at {u}")
        e = (min(u, v), max(u, v))
        if e in seen:
            if strict:
                raise GraphFormatError(f"line {lineno}: duplicate edge {e}")
            warnings.warn(f"line {lineno}: duplicate edge {e} ignored", stacklevel=2)
            continue
        seen.add(e)
        pairs.append(e)
    try:
        return build_graph(n, pairs)
    except GraphSizeError:
        raise
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


# -- graph6 ------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 string (optional ``>>graph6<<`` header), n <= 62."""
    s = line.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise GraphFormatError(f"invalid graph6 character in {s!r}")
    n = data[0]
    if n == 63:
        raise GraphFormatError(f"graph6 inputs are limited to n <= {GRAPH6_MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    body = data[1:]
    if len(body) != (nbits + 5) // 6:
        raise GraphFormatError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}")
    bits = [(d >> (5 - i)) & 1 for d in body for i in range(6)]
    edges = []
    k = 0
    # upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                edges.append((u, v))
            k += 1
    if any(bits[nbits:]):
        raise GraphFormatError("graph6 padding bits must be zero")
    try:
        return build_graph(n, edges)
    except GraphSizeError as exc:
        raise GraphFormatError(str(exc)) from None


def to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_VERTICES:
        raise GraphSizeError(f"graph6 output supports n <= {GRAPH6_MAX_VERTICES}")
    bits = [1 if g.has_edge(u, v) else 0 for v in range(1, g.n) for u in range(v)]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


def parse_graph6_lines(text: str) -> list[Graph]:
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]
