"""The hypergraph of complexes: which part of each complex holds every other complex."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

import networkx as nx

from .complexes import Complex, ComplexPart, belongs, classify_complexes
from .errors import IntegrityError
from .graph_core import Graph


@dataclass(frozen=True)
class Hypertree:
    nodes: tuple[Complex, ...]
    hyperedges: tuple[frozenset[int], ...]  # node indices
    table: dict  # (i, j) -> vertex set of A_{i>j}, or None if j is nested in i

    def section_edges(self) -> set[tuple[int, int]]:
        out = set()
        for h in self.hyperedges:
            for a, b in combinations(sorted(h), 2):
                out.add((a, b))
        return out


def _holding_part(g: Graph, ci: Complex, cj: Complex) -> ComplexPart | None:
    """A_{i>j}, or None when every cutset of cj is also a cutset of ci."""
    rest = [t for t in cj.members if t not in ci.member_set]
    if not rest:
        return None
    got = {belongs(g, ci, t) for t in rest}
    if len(got) != 1:
        raise IntegrityError(
            "cutsets of one complex belong to different parts of another",
            (ci.kind.value, cj.kind.value, sorted(sorted(a.vertices) for a in got)),
        )
    (a,) = got
    if not cj.vertex_set <= a.neighborhood:
        raise IntegrityError("complex vertices escape the neighbourhood of its holding part", (ci.kind.value, cj.kind.value))
    return a


def belongs_table(g: Graph, complexes: tuple[Complex, ...] | None = None) -> dict[tuple[int, int], frozenset[int] | None]:
    """(i, j) -> vertex set of A_{i>j}; None marks a complex nested inside complex i.

    Nested complexes all fall in one class of i, apart from every part.
    """
    cs = classify_complexes(g) if complexes is None else complexes
    out = {}
    for i, j in permutations(range(len(cs)), 2):
        a = _holding_part(g, cs[i], cs[j])
        out[(i, j)] = None if a is None else a.vertices
    return out


def separates(table, i: int, j: int, k: int) -> bool:
    """Whether complex i puts complexes j and k in different parts."""
    return table[(i, j)] != table[(i, k)]


def neighboring(table, n: int, i: int, j: int) -> bool:
    return not any(separates(table, k, i, j) for k in range(n) if k not in (i, j))


def check_separation_hypothesis(table, n: int) -> None:
    """If a separates b from c, then b does not separate a from c."""
    for a, b, c in permutations(range(n), 3):
        if separates(table, a, b, c) and separates(table, b, a, c):
            raise IntegrityError("separation is not one-directional", (a, b, c))


def maximal_cliques(n: int, adj: dict[int, set[int]]) -> list[frozenset[int]]:
    """Bron-Kerbosch with pivoting."""
    out: list[frozenset[int]] = []

    def expand(r: set[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(range(n)), set())
    return out


def build_hypertree(g: Graph) -> Hypertree:
    memo = g._memo
    if "hypertree" in memo:
        return memo["hypertree"]
    cs = classify_complexes(g)
    n = len(cs)
    table = belongs_table(g, cs)
    check_separation_hypothesis(table, n)
    adj = {i: set() for i in range(n)}
    for i, j in combinations(range(n), 2):
        if neighboring(table, n, i, j):
            adj[i].add(j)
            adj[j].add(i)
    edges = [c for c in maximal_cliques(n, adj) if len(c) >= 2]
    edges.sort(key=lambda h: sorted(h))
    out = Hypertree(cs, tuple(edges), table)
    memo["hypertree"] = out
    return out


def is_hypertree(h: Hypertree) -> bool:
    """Every cycle of the 2-section lies inside one hyperedge.

    Equivalent to every biconnected block with three or more nodes being
    contained in a hyperedge: a cycle never leaves its block, and a block
    whose cycles all sit in hyperedges is a clique whose Hamiltonian cycle
    must too.
    """
    sec = nx.Graph()
    sec.add_nodes_from(range(len(h.nodes)))
    sec.add_edges_from(h.section_edges())
    for block in nx.biconnected_components(sec):
        if len(block) >= 3 and not any(block <= e for e in h.hyperedges):
            return False
    return True


def hypertree_components(h: Hypertree, i: int) -> list[frozenset[int]]:
    sec = nx.Graph()
    sec.add_nodes_from(k for k in range(len(h.nodes)) if k != i)
    sec.add_edges_from((a, b) for a, b in h.section_edges() if i not in (a, b))
    return sorted((frozenset(c) for c in nx.connected_components(sec)), key=min)


def separation_classes(h: Hypertree, i: int) -> list[frozenset[int]]:
    groups: dict[frozenset[int] | None, set[int]] = {}
    for j in range(len(h.nodes)):
        if j != i:
            groups.setdefault(h.table[(i, j)], set()).add(j)
    return sorted((frozenset(v) for v in groups.values()), key=min)


def check_hypertree(h: Hypertree) -> None:
    if len(h.nodes) > 1 and not is_hypertree(h):
        raise IntegrityError("complex hypergraph is not a hypertree", [sorted(e) for e in h.hyperedges])
    for i in range(len(h.nodes)):
        if hypertree_components(h, i) != separation_classes(h, i):
            raise IntegrityError("hypertree components differ from separation classes", i)
