"""3-vertex cutsets, the splitting predicates and decomposition into parts."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .errors import AnalysisError, InputError, IntegrityError
from .graph_core import (
    Graph,
    from_mask,
    is_triconnected,
    popcount,
    removal_components,
    to_mask,
)

Cutset = frozenset  # always exactly three vertices


@dataclass(frozen=True)
class Part:
    """A maximal vertex set split by no member of a cutset family."""

    vertices: frozenset[int]
    boundary: frozenset[int]
    interior: frozenset[int]
    family: frozenset = field(default=frozenset(), compare=False, repr=False)

    @property
    def is_small(self) -> bool:
        return len(self.vertices) == 2

    @property
    def is_normal(self) -> bool:
        return len(self.vertices) >= 3

    @property
    def is_empty(self) -> bool:
        return not self.interior


def sort_key(vs: Iterable[int]) -> tuple:
    return tuple(sorted(vs))


def part_order(vs: frozenset[int]) -> tuple:
    # size descending, then minimum vertex, then full content
    return (-len(vs), min(vs), sort_key(vs))


def require_analyzable(g: Graph) -> None:
    if g.n <= 6:
        raise AnalysisError(f"graph has {g.n} vertices; analysis needs more than 6")
    if not is_triconnected(g):
        raise AnalysisError("graph is not triconnected")


def is_cutset(g: Graph, s: Iterable[int]) -> bool:
    return len(removal_components(g, to_mask(s))) >= 2


def enumerate_cutsets(g: Graph) -> frozenset[Cutset]:
    """All 3-subsets whose removal disconnects ``g``, by exhaustive scan."""
    memo = g._memo
    if "cutsets" not in memo:
        require_analyzable(g)
        found = []
        for trio in combinations(range(g.n), 3):
            if len(removal_components(g, to_mask(trio))) >= 2:
                found.append(frozenset(trio))
        memo["cutsets"] = frozenset(found)
    return memo["cutsets"]


def sorted_cutsets(cutsets: Iterable[Cutset]) -> list[Cutset]:
    return sorted(cutsets, key=sort_key)


def _comp_index(g: Graph, r: int) -> dict[int, int]:
    """Vertex -> index of its component in ``G - r``."""
    memo = g._memo.setdefault("ci", {})
    hit = memo.get(r)
    if hit is None:
        hit = {}
        for i, comp in enumerate(removal_components(g, r)):
            for v in from_mask(comp):
                hit[v] = i
        memo[r] = hit
    return hit


def splits(g: Graph, r: Iterable[int], x: Iterable[int]) -> bool:
    """Whether the vertices of ``x`` outside ``r`` lie in two or more components of G - r."""
    rm = to_mask(r)
    where = _comp_index(g, rm)
    seen = {where[v] for v in x if not rm >> v & 1}
    return len(seen) >= 2


def separates(g: Graph, r: Iterable[int], u: Iterable[int], w: Iterable[int]) -> bool:
    r = frozenset(r)
    u = frozenset(u) - r
    w = frozenset(w) - r
    if not u or not w:
        return False
    where = _comp_index(g, to_mask(r))
    cu = {where[x] for x in u}
    cw = {where[x] for x in w}
    return not (cu & cw)


def _parts_masks(g: Graph, s: frozenset[int]) -> list[int]:
    sm = to_mask(s)
    return [c | sm for c in removal_components(g, sm)]


def parts_of(g: Graph, s: Iterable[int]) -> list[Part]:
    s = frozenset(s)
    comps = removal_components(g, to_mask(s))
    if len(comps) < 2:
        raise InputError(f"{sorted(s)} is not a cutset")
    fam = frozenset([s])
    out = [Part(from_mask(c) | s, s, from_mask(c), fam) for c in comps]
    return sorted(out, key=lambda p: part_order(p.vertices))


def part_count(g: Graph, s: Iterable[int]) -> int:
    return len(removal_components(g, to_mask(s)))


def _maximal(masks: Iterable[int]) -> list[int]:
    uniq = sorted(set(masks), key=popcount, reverse=True)
    keep: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in keep):
            keep.append(m)
    return keep


def decompose_masks(g: Graph, family: Iterable[Cutset]) -> list[int]:
    family = sorted(set(family), key=sort_key)
    current = [g.all_mask]
    for s in family:
        pieces = _parts_masks(g, s)
        if len(pieces) < 2:
            raise InputError(f"{sorted(s)} is not a cutset")
        current = _maximal(a & f for a in current for f in pieces)
    return current


def make_parts(family: Iterable[Cutset], masks: Iterable[int]) -> list[Part]:
    family = frozenset(family)
    union = frozenset().union(*family) if family else frozenset()
    out = []
    for m in masks:
        vs = from_mask(m)
        b = vs & union
        out.append(Part(vs, b, vs - b, family))
    return sorted(out, key=lambda p: part_order(p.vertices))


def decompose(g: Graph, family: Iterable[Cutset]) -> list[Part]:
    """Parts of the decomposition of ``g`` by ``family``.

    Built by refinement: adding a cutset S intersects every current part
    with every part of S and keeps the inclusion-maximal results.
    """
    family = frozenset(frozenset(s) for s in family)
    memo = g._memo.setdefault("dec", {})
    hit = memo.get(family)
    if hit is None:
        hit = make_parts(family, decompose_masks(g, family))
        memo[family] = hit
    return hit


def dependent(g: Graph, s: Cutset, t: Cutset) -> bool:
    """Whether either cutset splits the other. Cached per unordered pair."""
    s, t = frozenset(s), frozenset(t)
    if s == t:
        return False
    memo = g._memo.setdefault("dep", {})
    key = frozenset((s, t))
    hit = memo.get(key)
    if hit is None:
        a = splits(g, s, t)
        b = splits(g, t, s)
        if a != b:
            raise IntegrityError("splitting relation is not symmetric", (sorted(s), sorted(t)))
        hit = memo[key] = a
    return hit


def dependence_components(g: Graph, family: Iterable[Cutset]) -> list[frozenset[Cutset]]:
    members = sorted(set(frozenset(s) for s in family), key=sort_key)
    parent = list(range(len(members)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in combinations(range(len(members)), 2):
        if dependent(g, members[i], members[j]):
            parent[find(i)] = find(j)
    groups: dict[int, list[Cutset]] = {}
    for i, s in enumerate(members):
        groups.setdefault(find(i), []).append(s)
    comps = [frozenset(v) for v in groups.values()]
    return sorted(comps, key=lambda c: sort_key(sorted(c, key=sort_key)[0]))


def is_single(g: Graph, s: Cutset) -> bool:
    """Independent of every other 3-cutset of the graph."""
    memo = g._memo.setdefault("single", {})
    if s not in memo:
        memo[s] = not any(dependent(g, s, t) for t in enumerate_cutsets(g) if t != s)
    return memo[s]


def dependent_partners(g: Graph, s: Cutset) -> list[Cutset]:
    return [t for t in sorted_cutsets(enumerate_cutsets(g)) if t != s and dependent(g, s, t)]
