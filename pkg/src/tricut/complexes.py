"""Complexes of 3-cutsets, the parts they cut the graph into, and part neighbourhoods.

Every 3-cutset lies in at least one complex. Big complexes come from triple
cuts, maximal nondegenerate flowers and big cuts; the remaining cutsets form
complexes of one or two cutsets. A wheel is handled on its own: its single
complex holds every cutset.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable

from .cuts import VertexEdgeCut, cuts_of_kind, inner_sets, is_trivial, make_cut, sides
from .cutsets import (
    Cutset,
    decompose,
    enumerate_cutsets,
    is_single,
    parts_of,
    part_order,
    sort_key,
)
from .errors import InputError, IntegrityError
from .flowers import Flower, classify_flower, flower_complex_members, flower_neighborhood, maximal_flowers
from .graph_core import Graph, from_mask, induced_connected
from .triple_cuts import triple_complex_members, triple_cuts


class ComplexKind(enum.Enum):
    WHEEL = "WheelFlower"
    TRIPLE = "Triple"
    FLOWER = "FlowerComplex"
    BIG_CUT = "BigCut"
    SMALL_CUT = "SmallCutPair"
    SINGLE = "Single"

    @property
    def rank(self) -> int:
        return list(ComplexKind).index(self)

    @property
    def is_big(self) -> bool:
        return self in (ComplexKind.WHEEL, ComplexKind.TRIPLE, ComplexKind.FLOWER, ComplexKind.BIG_CUT)


@dataclass(frozen=True)
class Complex:
    kind: ComplexKind
    members: tuple[Cutset, ...]
    boundaries: tuple[frozenset[int], ...] = ()
    source: object = field(default=None, compare=False, repr=False)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset().union(*self.members)

    @property
    def member_set(self) -> frozenset[Cutset]:
        return frozenset(self.members)

    def order_key(self) -> tuple:
        return (self.kind.rank, min(self.vertex_set), tuple(sort_key(m) for m in self.members))


@dataclass(frozen=True)
class ComplexPart:
    vertices: frozenset[int]
    boundary: frozenset[int]
    interior: frozenset[int]
    neighborhood: frozenset[int]  # O(A); the part itself when the part is empty

    @property
    def is_small(self) -> bool:
        return len(self.vertices) == 2

    @property
    def is_empty(self) -> bool:
        return not self.interior


def _members(cs: Iterable[Cutset]) -> tuple[Cutset, ...]:
    return tuple(sorted(set(cs), key=sort_key))


def is_wheel(g: Graph) -> int | None:
    """The hub if ``g`` is a wheel, else None."""
    for hub in g.vertices:
        if g.degree(hub) != g.n - 1:
            continue
        rim = [v for v in g.vertices if v != hub]
        if all(g.degree(v) == 3 for v in rim):
            if induced_connected(g, rim):
                return hub
    return None


def nondegenerate_flowers(g: Graph) -> tuple[Flower, ...]:
    return tuple(f for f in maximal_flowers(g) if not classify_flower(g, f).degenerate)


def big_cuts(g: Graph) -> tuple[VertexEdgeCut, ...]:
    """Nontrivial three-edge cuts whose vertex set lies in no triple or nondegenerate-flower neighbourhood."""
    hoods = [t.neighborhood for t in triple_cuts(g)]
    hoods += [flower_neighborhood(g, f).closure for f in nondegenerate_flowers(g)]
    out = []
    for m in cuts_of_kind(g, 3):
        if is_trivial(g, m):
            continue
        if any(m.span <= h for h in hoods):
            continue
        out.append(m)
    return tuple(out)


def big_cut_members(g: Graph, m: VertexEdgeCut) -> frozenset[Cutset]:
    s1, s2 = sides(g, m)
    skip = {s1.boundary, s2.boundary}
    direct = frozenset(c for c in enumerate_cutsets(g) if c <= m.span and c not in skip)
    if direct != frozenset(inner_sets(g, m)):
        raise IntegrityError("big cut membership differs from its inner sets", m.key())
    return direct


def _normal_boundaries(g: Graph, members) -> tuple[frozenset[int], ...]:
    out = {p.boundary for p in decompose(g, members) if p.is_normal}
    return tuple(sorted(out, key=sort_key))


def _flower_complexes(g: Graph, triple_sets: list[frozenset[int]]) -> list[Complex]:
    """Complexes of maximal nondegenerate flowers, minus those nested in a larger big complex.

    A flower complex whose vertex set lies inside a triple complex, or strictly
    inside another flower complex, is not a complex of its own: its cutsets
    already belong to the larger one.
    """
    cands = []
    for f in nondegenerate_flowers(g):
        mem = _members(flower_complex_members(g, f))
        cands.append(Complex(ComplexKind.FLOWER, mem, _normal_boundaries(g, mem), f))
    out = []
    for c in cands:
        v = c.vertex_set
        if any(v <= t for t in triple_sets):
            continue
        if any(v < d.vertex_set for d in cands):
            continue
        out.append(c)
    return out


def classify_complexes(g: Graph) -> tuple[Complex, ...]:
    memo = g._memo
    if "complexes" in memo:
        return memo["complexes"]
    cutsets = enumerate_cutsets(g)
    found: list[Complex] = []
    if is_wheel(g) is not None:
        found.append(Complex(ComplexKind.WHEEL, _members(cutsets)))
    else:
        for t in triple_cuts(g):
            found.append(Complex(ComplexKind.TRIPLE, _members(triple_complex_members(g, t)), _members(t.boundaries_ext), t))
        found.extend(_flower_complexes(g, [c.vertex_set for c in found]))
        for m in big_cuts(g):
            s1, s2 = sides(g, m)
            found.append(Complex(ComplexKind.BIG_CUT, _members(big_cut_members(g, m)), _members([s1.boundary, s2.boundary]), m))
        in_big = frozenset().union(*(c.member_set for c in found))
        paired: dict[Cutset, Complex] = {}
        for m in cuts_of_kind(g, 1):
            s1, s2 = sides(g, m)
            t1, t2 = s1.boundary, s2.boundary
            if not (t1 in cutsets and t2 in cutsets):
                continue
            if is_single(g, t1) or is_single(g, t2) or t1 in in_big or t2 in in_big:
                continue
            c = Complex(ComplexKind.SMALL_CUT, _members([t1, t2]), (), m)
            for t in (t1, t2):
                if t in paired and paired[t] != c:
                    raise IntegrityError("cutset in two small-cut complexes", sorted(t))
                paired[t] = c
            found.append(c)
        taken = in_big | frozenset(paired)
        for t in sorted(cutsets - taken, key=sort_key):
            found.append(Complex(ComplexKind.SINGLE, (t,)))
    uniq: dict[tuple, Complex] = {}
    for c in found:
        uniq.setdefault((c.kind, c.members), c)
    out = tuple(sorted(uniq.values(), key=Complex.order_key))
    covered = frozenset().union(*(c.member_set for c in out)) if out else frozenset()
    if covered != cutsets:
        raise IntegrityError("complexes do not cover every cutset", sorted(map(sort_key, cutsets - covered)))
    memo["complexes"] = out
    return out


def _complement_into(g: Graph, r: Cutset, region: frozenset[int], interior: frozenset[int]) -> VertexEdgeCut | None:
    """R complemented by every possible edge whose far end lies in ``interior``."""
    es = []
    for x in sorted(r):
        near = from_mask(g.adj_mask(x)) & interior
        if len(near) == 1:
            es.append((x, next(iter(near))))
    if not es:
        return None
    m = make_cut(g, r - {x for x, _ in es}, es)
    if m is None:
        raise IntegrityError("simultaneous complement is not a cut", (sorted(r), es))
    return m


def part_neighborhood(g: Graph, c: Complex, vertices: frozenset[int], boundary: frozenset[int]) -> frozenset[int]:
    """O(A) for a nonempty part A of P(C)."""
    if len(c.members) == 1 and is_single(g, c.members[0]):
        return vertices
    r = boundary
    if r not in enumerate_cutsets(g):
        raise IntegrityError("boundary of a nonempty part is not a cutset", sorted(r))
    interior = vertices - boundary
    far = [p for p in parts_of(g, r) if not p.interior & interior]
    if len(far) != 1:
        raise IntegrityError("no unique far part for a part boundary", sorted(r))
    m = _complement_into(g, r, far[0].vertices, far[0].interior)
    if m is None:
        return vertices
    return vertices | m.span


def complex_parts(g: Graph, c: Complex) -> tuple[ComplexPart, ...]:
    memo = g._memo.setdefault("cparts", {})
    key = (c.kind, c.members)
    if key in memo:
        return memo[key]
    out = []
    for p in decompose(g, c.members):
        if p.is_empty or c.kind is ComplexKind.WHEEL:
            o = p.vertices
        else:
            o = part_neighborhood(g, c, p.vertices, p.boundary)
        out.append(ComplexPart(p.vertices, p.boundary, p.interior, o))
    out.sort(key=lambda p: part_order(p.vertices))
    memo[key] = tuple(out)
    return memo[key]


def belongs_candidates(g: Graph, c: Complex, t: Cutset) -> list[ComplexPart]:
    return [
        a
        for a in complex_parts(g, c)
        if not a.is_empty and t <= a.neighborhood and (t == a.boundary or t & a.interior)
    ]


def belongs(g: Graph, c: Complex, t: Iterable[int]) -> ComplexPart:
    t = frozenset(t)
    if t not in enumerate_cutsets(g):
        raise InputError(f"{sorted(t)} is not a cutset")
    if t in c.member_set:
        raise InputError(f"{sorted(t)} is a member of the complex")
    got = belongs_candidates(g, c, t)
    if len(got) != 1:
        raise IntegrityError(
            f"cutset belongs to {len(got)} parts of a complex",
            (c.kind.value, sorted(t), [sorted(a.vertices) for a in got]),
        )
    return got[0]
