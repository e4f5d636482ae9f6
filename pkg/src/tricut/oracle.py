"""Definition-level oracles, independent of the refinement code they check."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

import networkx as nx

from .cutsets import Cutset, Part, part_order
from .errors import InputError
from .graph_core import Graph, components_after_removal


def oracle_parts(g: Graph, family: Iterable[Cutset]) -> list[Part]:
    """Maximal vertex sets split by no member of ``family``, straight from the definition.

    Two vertices are compatible when no member puts them in different
    components of its complement; a set is split by nobody exactly when it
    is pairwise compatible, so the parts are the maximal cliques of the
    compatibility graph.
    """
    family = frozenset(frozenset(s) for s in family)
    where = []
    for s in family:
        comps = components_after_removal(g, s)
        if len(comps) < 2:
            raise InputError(f"{sorted(s)} is not a cutset")
        idx = {}
        for k, c in enumerate(comps):
            for v in c:
                idx[v] = k
        where.append(idx)
    compat = nx.Graph()
    compat.add_nodes_from(g.vertices)
    for u, v in combinations(g.vertices, 2):
        if all(u not in w or v not in w or w[u] == w[v] for w in where):
            compat.add_edge(u, v)
    union = frozenset().union(*family) if family else frozenset()
    out = []
    for clique in nx.find_cliques(compat):
        vs = frozenset(clique)
        b = vs & union
        out.append(Part(vs, b, vs - b, family))
    return sorted(out, key=lambda p: part_order(p.vertices))


def oracle_is_hypertree(n: int, hyperedges: Iterable[frozenset[int]]) -> bool:
    """Every simple cycle of the 2-section inside one hyperedge, by exhaustive cycle enumeration."""
    hyperedges = list(hyperedges)
    sec = nx.Graph()
    sec.add_nodes_from(range(n))
    for h in hyperedges:
        sec.add_edges_from(combinations(sorted(h), 2))
    for cyc in nx.simple_cycles(sec):
        if len(cyc) >= 3 and not any(set(cyc) <= h for h in hyperedges):
            return False
    return True
