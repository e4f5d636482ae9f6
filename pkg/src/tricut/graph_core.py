"""Immutable simple undirected graphs and connectivity primitives.

Vertices are dense integers ``0..n-1``. Vertex sets cross the public API as
``frozenset[int]``; internally they are int bitmasks, which keeps the
exhaustive scans used throughout the package cheap at desk scale.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .errors import InputError

Edge = tuple[int, int]
VertexSet = frozenset


def edge(u: int, v: int) -> Edge:
    """Canonical (sorted) form of an undirected edge."""
    return (u, v) if u < v else (v, u)


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def from_mask(mask: int) -> frozenset[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    """Simple undirected graph, immutable after construction.

    ``labels`` keeps the original vertex names for reporting; analysis only
    ever sees the integer ids.
    """

    __slots__ = ("n", "_adj", "_edges", "labels", "_memo")

    def __init__(self, n: int, edges: Iterable[Sequence[int]], labels: Sequence[str] | None = None):
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        adj = [0] * n
        canon: set[Edge] = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) references a vertex outside 0..{n - 1}")
            if u == v:
                raise InputError(f"loop at vertex {u}")
            key = edge(u, v)
            if key in canon:
                raise InputError(f"duplicate edge {key}")
            canon.add(key)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise InputError(f"expected {n} labels, got {len(labels)}")
            if len(set(labels)) != n:
                raise InputError("vertex labels must be distinct")
        self.n = n
        self._adj = tuple(adj)
        self._edges = tuple(sorted(canon))
        self.labels = labels
        self._memo: dict = {}

    @classmethod
    def from_labeled_edges(cls, names: Sequence[str], edges: Iterable[tuple[str, str]]) -> Graph:
        index = {name: i for i, name in enumerate(names)}
        return cls(len(names), [(index[a], index[b]) for a, b in edges], labels=names)

    def __setattr__(self, name, value):
        if name in Graph.__slots__ and hasattr(self, "_memo") and name != "_memo":
            raise AttributeError("Graph is immutable")
        object.__setattr__(self, name, value)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self):
        return hash((self.n, self._edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self._edges)})"

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def adj_mask(self, v: int) -> int:
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return popcount(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self._adj[u] >> v & 1)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def index_of(self, name: str) -> int:
        if self.labels is None:
            return int(name)
        return self.labels.index(name)

    def vset(self, *names: str) -> frozenset[int]:
        """Vertex set from labels; convenience for fixtures and tests."""
        return frozenset(self.index_of(x) for x in names)

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise InputError(f"invalid vertex id {v!r} for graph with {self.n} vertices")


def neighbors(g: Graph, v: int) -> frozenset[int]:
    g._check_vertex(v)
    return from_mask(g.adj_mask(v))


def component_masks(g: Graph, alive: int, removed_edges: Iterable[Edge] = ()) -> list[int]:
    """Components of the subgraph induced on ``alive`` minus ``removed_edges``.

    Returned in order of their minimum vertex.
    """
    adj = g._adj
    removed_edges = tuple(removed_edges)
    if removed_edges:
        adj = list(adj)
        for u, v in removed_edges:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
    comps = []
    rest = alive
    while rest:
        low = rest & -rest
        comp = frontier = low
        while frontier:
            reach = 0
            f = frontier
            while f:
                b = f & -f
                reach |= adj[b.bit_length() - 1]
                f ^= b
            frontier = reach & rest & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def removal_components(g: Graph, removed_mask: int) -> tuple[int, ...]:
    """Memoized components of ``G - removed`` for a pure vertex removal."""
    memo = g._memo.setdefault("rc", {})
    hit = memo.get(removed_mask)
    if hit is None:
        hit = tuple(component_masks(g, g.all_mask & ~removed_mask))
        memo[removed_mask] = hit
    return hit


def components_after_removal(
    g: Graph, removed_vertices: Iterable[int] = (), removed_edges: Iterable[Sequence[int]] = ()
) -> list[frozenset[int]]:
    rv = set(removed_vertices)
    for v in rv:
        g._check_vertex(v)
    re = []
    for e in removed_edges:
        u, v = e
        if not g.has_edge(u, v):
            raise InputError(f"({u}, {v}) is not an edge")
        re.append(edge(u, v))
    mask = to_mask(rv)
    if re:
        comps = component_masks(g, g.all_mask & ~mask, re)
    else:
        comps = removal_components(g, mask)
    return [from_mask(c) for c in comps]


def is_connected(g: Graph) -> bool:
    return len(removal_components(g, 0)) <= 1


def is_triconnected(g: Graph) -> bool:
    """Definition-level test: at least 4 vertices and no separating pair or cut vertex."""
    if g.n < 4 or not is_connected(g):
        return False
    for u, v in combinations(range(g.n), 2):
        if len(removal_components(g, (1 << u) | (1 << v))) != 1:
            return False
    return True


def induced_connected(g: Graph, vertices: Iterable[int]) -> bool:
    mask = to_mask(vertices)
    return len(component_masks(g, mask)) == 1
