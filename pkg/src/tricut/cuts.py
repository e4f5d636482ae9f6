"""Mixed vertex-edge cuts with exactly three elements.

A cut with ``k`` edges and ``3 - k`` vertices is said to be of kind ``k``;
kind 0 is a plain 3-cutset. Kinds 1..3 split the graph into exactly two
components ``H1`` and ``H2``. We always take ``H1`` to be the smaller of the
two (ties broken by minimum vertex) and store every cut edge oriented so its
first end lies in ``H1``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Union

from .cutsets import Cutset, require_analyzable, sort_key
from .errors import InputError, IntegrityError
from .graph_core import Edge, Graph, component_masks, edge, from_mask, to_mask


@dataclass(frozen=True)
class VertexEdgeCut:
    vertices: frozenset[int]
    edges: tuple[Edge, ...]  # oriented: first end on side 1
    components: tuple[frozenset[int], ...] = field(compare=False, repr=False, default=())

    @property
    def kind(self) -> int:
        return len(self.edges)

    @property
    def is_cutting(self) -> bool:
        return bool(self.components)

    @property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(edge(*e) for e in self.edges)

    @property
    def span(self) -> frozenset[int]:
        """V(M): cut vertices plus both ends of every cut edge."""
        out = set(self.vertices)
        for a, b in self.edges:
            out.update((a, b))
        return frozenset(out)

    def key(self) -> tuple:
        return (self.kind, sort_key(self.vertices), tuple(sorted(self.edge_set)))

    def __hash__(self):
        return hash((self.vertices, self.edge_set))

    def __eq__(self, other):
        if not isinstance(other, VertexEdgeCut):
            return NotImplemented
        return self.vertices == other.vertices and self.edge_set == other.edge_set


@dataclass(frozen=True)
class CutSide:
    vertices: frozenset[int]
    boundary: frozenset[int]
    interior: frozenset[int]
    neighborhood: frozenset[int]


@dataclass(frozen=True)
class CutKind:
    trivial: bool
    degenerate: bool


CutLike = Union[VertexEdgeCut, Cutset]


def make_cut(g: Graph, vertices: Iterable[int], edges: Iterable[Edge]) -> VertexEdgeCut | None:
    """The cut record for ``vertices`` plus ``edges``, or None if they do not disconnect g."""
    vs = frozenset(vertices)
    es = [edge(*e) for e in edges]
    if len(vs) + len(es) != 3 or len(set(es)) != len(es):
        raise InputError("a cut has exactly three distinct elements")
    for a, b in es:
        if not g.has_edge(a, b):
            raise InputError(f"({a}, {b}) is not an edge")
        if a in vs or b in vs:
            # removing an end already removes the edge; such a set is a 2-cut in disguise
            return None
    comps = component_masks(g, g.all_mask & ~to_mask(vs), es)
    if len(comps) < 2:
        return None
    comps_fs = tuple(from_mask(c) for c in comps)
    if not es:
        return VertexEdgeCut(vs, (), comps_fs)
    if len(comps) != 2:
        raise IntegrityError("cut with an edge left more than two components", (sorted(vs), es))
    h1, h2 = sorted(comps_fs, key=lambda c: (len(c), min(c)))
    oriented = []
    for a, b in es:
        if a in h1 and b in h2:
            oriented.append((a, b))
        elif b in h1 and a in h2:
            oriented.append((b, a))
        else:
            raise IntegrityError("cut edge with both ends on one side", (a, b))
    oriented.sort()
    return VertexEdgeCut(vs, tuple(oriented), (h1, h2))


def mixed_set(g: Graph, vertices: Iterable[int], edges: Iterable[Edge]) -> VertexEdgeCut:
    """Like ``make_cut`` but keeps a non-cutting set as a record with no components."""
    vs = frozenset(vertices)
    es = [edge(*e) for e in edges]
    got = make_cut(g, vs, es)
    if got is None:
        return VertexEdgeCut(vs, tuple(sorted(es)), ())
    return got


def as_cut(g: Graph, m: CutLike) -> VertexEdgeCut:
    if isinstance(m, VertexEdgeCut):
        return m
    got = make_cut(g, m, ())
    if got is None:
        raise InputError(f"{sorted(m)} is not a cutset")
    return got


def enumerate_cuts(g: Graph) -> tuple[VertexEdgeCut, ...]:
    """Every cut of kind 1, 2 or 3, by exhaustive scan. Sorted by ``key``."""
    memo = g._memo
    if "cuts" not in memo:
        require_analyzable(g)
        found = []
        es = g.edges
        for k in (1, 2, 3):
            for chosen in combinations(es, k):
                ends = set()
                for a, b in chosen:
                    ends.update((a, b))
                free = [v for v in g.vertices if v not in ends]
                for vs in combinations(free, 3 - k):
                    c = make_cut(g, vs, chosen)
                    if c is not None:
                        found.append(c)
        found.sort(key=VertexEdgeCut.key)
        memo["cuts"] = tuple(found)
    return memo["cuts"]


def cuts_of_kind(g: Graph, k: int) -> list[VertexEdgeCut]:
    return [c for c in enumerate_cuts(g) if c.kind == k]


def sides(g: Graph, m: VertexEdgeCut) -> tuple[CutSide, CutSide]:
    if not m.edges:
        raise InputError("a plain cutset has no two-sided decomposition; use parts_of")
    h1, h2 = m.components
    span = m.span
    out = []
    for other in (h2, h1):
        gi = frozenset(g.vertices) - other
        ti = gi & span
        out.append(CutSide(gi, ti, gi - ti, gi | span))
    return out[0], out[1]


def complement_by_edge(g: Graph, m: CutLike, x: int, y: int) -> VertexEdgeCut | None:
    """Replace cut vertex ``x`` by the edge ``xy`` if that still gives a cut.

    Decided by the unique-neighbour criterion and cross-checked against a
    direct disconnection test.
    """
    m = as_cut(g, m)
    if x not in m.vertices:
        raise InputError(f"{x} is not a cut vertex of {m.key()}")
    if not g.has_edge(x, y):
        raise InputError(f"({x}, {y}) is not an edge")
    direct = make_cut(g, m.vertices - {x}, list(m.edge_set) + [edge(x, y)])
    if y in m.vertices:
        by_rule = False
    else:
        home = next(c for c in m.components if y in c)
        by_rule = from_mask(g.adj_mask(x)) & home == {y}
    if by_rule != (direct is not None):
        raise IntegrityError("unique-neighbour complement rule disagrees with direct test", (m.key(), x, y))
    return direct


def complements(g: Graph, m: CutLike) -> list[VertexEdgeCut]:
    m = as_cut(g, m)
    out = []
    for x in sorted(m.vertices):
        for y in sorted(from_mask(g.adj_mask(x))):
            c = complement_by_edge(g, m, x, y)
            if c is not None:
                out.append(c)
    return out


def maximal_extensions(g: Graph, m: CutLike) -> list[VertexEdgeCut]:
    """Maximal cuts reachable from ``m`` by repeated complementing.

    A plain cutset that admits no complement is not itself a cut, so it
    yields an empty list.
    """
    start = as_cut(g, m)
    seen = {start}
    queue = deque([start])
    result = set()
    while queue:
        cur = queue.popleft()
        nxt = complements(g, cur)
        if cur.kind == 2 and len(nxt) > 1:
            raise IntegrityError("two-edge cut with more than one complementing edge", cur.key())
        if not nxt:
            if cur.kind > 0:
                result.add(cur)
            continue
        for c in nxt:
            if c not in seen:
                seen.add(c)
                queue.append(c)
    return sorted(result, key=VertexEdgeCut.key)


def is_maximal(g: Graph, m: VertexEdgeCut) -> bool:
    return m.kind > 0 and not complements(g, m)


def contains(big: CutLike, small: CutLike) -> bool:
    """Whether ``big`` contains ``small``: every vertex kept, every edge kept or cut at an end."""
    bv, be = _parts(big)
    sv, se = _parts(small)
    if not bv <= sv:
        return False
    for e in be:
        if e not in se and not (e[0] in sv or e[1] in sv):
            return False
    return True


def _parts(m: CutLike) -> tuple[frozenset[int], frozenset[Edge]]:
    if isinstance(m, VertexEdgeCut):
        return m.vertices, m.edge_set
    return frozenset(m), frozenset()


def is_trivial(g: Graph, m: CutLike) -> bool:
    m = as_cut(g, m)
    return any(len(c) == 1 for c in m.components)


def classify_cut(g: Graph, m: VertexEdgeCut) -> CutKind:
    trivial = is_trivial(g, m)
    if not m.edges:
        return CutKind(trivial, False)
    s1, s2 = sides(g, m)
    empties = [s for s in (s1, s2) if not s.interior]
    if len(empties) == 2:
        raise IntegrityError("cut with both interiors empty", m.key())
    degenerate = bool(empties)
    if degenerate and not trivial:
        _check_degenerate_pattern(g, m, empties[0])
    if degenerate and m.kind == 1 and not trivial:
        raise IntegrityError("degenerate one-edge cut is not trivial", m.key())
    return CutKind(trivial, degenerate)


def _check_degenerate_pattern(g: Graph, m: VertexEdgeCut, side: CutSide) -> None:
    # the edge ends on the empty side see each other, the cut vertex and their partner only
    near = []
    for a, b in m.edges:
        near.append((a, b) if a in side.vertices else (b, a))
    ends = {a for a, _ in near}
    for a, b in near:
        expected = (ends - {a}) | {b} | m.vertices
        if from_mask(g.adj_mask(a)) != expected:
            raise IntegrityError("degenerate cut does not match the expected adjacency pattern", m.key())


def inner_sets(g: Graph, m: VertexEdgeCut) -> list[Cutset]:
    if is_trivial(g, m):
        raise InputError("inner sets are defined for nontrivial cuts only")
    s1, s2 = sides(g, m) if m.edges else (None, None)
    out = []
    for pick in product(*m.edges):
        r = m.vertices | frozenset(pick)
        if m.edges and r in (s1.boundary, s2.boundary):
            continue
        out.append(r)
    if m.edges:
        _check_inner(g, m, out, s1, s2)
    return sorted(out, key=sort_key)


def _check_inner(g, m, sets, s1, s2) -> None:
    if len(sets) != 2 ** m.kind - 2:
        raise IntegrityError("wrong number of inner sets", m.key())
    for r in sets:
        comps = component_masks(g, g.all_mask & ~to_mask(r))
        if len(comps) != 2:
            raise IntegrityError("inner set does not split into exactly two parts", sorted(r))
        parts = [from_mask(c) | r for c in comps]
        if not ((s1.vertices <= parts[0] and s2.vertices <= parts[1])
                or (s1.vertices <= parts[1] and s2.vertices <= parts[0])):
            raise IntegrityError("inner set parts do not contain the cut sides", sorted(r))


def singular_witnesses(g: Graph, e: Edge) -> list[frozenset[int]]:
    """Vertex pairs {u, v} such that {u, v, e} is a cut."""
    e = edge(*e)
    if not g.has_edge(*e):
        raise InputError(f"{e} is not an edge")
    return [c.vertices for c in cuts_of_kind(g, 1) if c.edge_set == {e}]


def is_singular_edge(g: Graph, e: Edge) -> bool:
    pairs = singular_witnesses(g, e)
    return any(not (p & q) for p, q in combinations(pairs, 2))


def one_edge_cuts_dependent(g: Graph, m: VertexEdgeCut, n: VertexEdgeCut) -> bool:
    """Dependence of two one-edge cuts through the same edge with four distinct vertices."""
    if m.kind != 1 or n.kind != 1 or m.edge_set != n.edge_set or m.vertices & n.vertices:
        raise InputError("dependence is defined for one-edge cuts sharing their edge only")
    x1 = m.edges[0][0]
    pm = next(s for s in sides(g, m) if x1 in s.vertices)
    pn = next(s for s in sides(g, n) if x1 in s.vertices)
    nested = pm.vertices <= pn.vertices or pn.vertices <= pm.vertices
    # second route: the other cut's vertices sit in one interior of m
    s1, s2 = sides(g, m)
    alt = n.vertices <= s1.interior or n.vertices <= s2.interior
    if nested != alt:
        raise IntegrityError("two independence criteria disagree", (m.key(), n.key()))
    return not nested

