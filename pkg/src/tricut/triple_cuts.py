"""Triple cuts: a three-part cutset together with the trivial cutsets subordinated to it."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .cuts import (
    VertexEdgeCut,
    contains,
    cuts_of_kind,
    inner_sets,
    is_trivial,
    make_cut,
    sides,
)
from .cutsets import Cutset, Part, enumerate_cutsets, parts_of, sort_key
from .errors import InputError, IntegrityError
from .graph_core import Graph, from_mask


@dataclass(frozen=True)
class TripleCut:
    line: Cutset
    trivials: tuple[Cutset, ...]
    parts: tuple[Part, ...]  # A_1..A_3
    cuts: tuple[VertexEdgeCut, ...]  # M_i
    extended: tuple[VertexEdgeCut, ...]  # M'_i
    inner_parts: tuple[frozenset[int], ...]  # B_i
    inner_parts_ext: tuple[frozenset[int], ...]  # B'_i
    boundaries: tuple[frozenset[int], ...]  # T_i
    boundaries_ext: tuple[frozenset[int], ...]  # T'_i

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset().union(*(m.span for m in self.cuts))

    @property
    def neighborhood(self) -> frozenset[int]:
        return frozenset().union(*(m.span for m in self.extended))


def subordinated_trivials(g: Graph, s: Iterable[int]) -> list[Cutset]:
    """Trivial cutsets T(a), a in S, whose vertices reach the interior of every part of P(S)."""
    s = frozenset(s)
    if s not in enumerate_cutsets(g):
        raise InputError(f"{sorted(s)} is not a cutset")
    parts = parts_of(g, s)
    if len(parts) != 3:
        return []
    out = []
    for a in sorted(s):
        if g.degree(a) != 3:
            continue
        t = from_mask(g.adj_mask(a))
        if all(t & p.interior for p in parts):
            out.append(t)
    return sorted(out, key=sort_key)


def _side_inside(g: Graph, m: VertexEdgeCut, region: frozenset[int]):
    got = [sd for sd in sides(g, m) if sd.vertices <= region]
    if len(got) != 1:
        raise IntegrityError("cut has no unique side inside a part of the line", m.key())
    return got[0]


def build_triple_cut(g: Graph, s: Iterable[int]) -> TripleCut | None:
    s = frozenset(s)
    memo = g._memo.setdefault("triple", {})
    if s in memo:
        return memo[s]
    trivials = subordinated_trivials(g, s)
    if not trivials:
        memo[s] = None
        return None
    parts = tuple(parts_of(g, s))
    low = [a for a in sorted(s) if g.degree(a) == 3]
    big3 = [c for c in cuts_of_kind(g, 3)]
    cuts, ext, b, bx, t, tx = [], [], [], [], [], []
    for i, a_i in enumerate(parts):
        es = []
        for a in low:
            hit = from_mask(g.adj_mask(a)) & a_i.interior
            if len(hit) != 1:
                raise IntegrityError("degree-3 line vertex without one neighbour per part interior", (sorted(s), a))
            es.append((a, next(iter(hit))))
        m = make_cut(g, s - set(low), es)
        if m is None:
            raise IntegrityError("line with its degree-3 vertices replaced by edges is not a cut", (sorted(s), i))
        others = frozenset().union(*(p.vertices for j, p in enumerate(parts) if j != i))
        inner = _side_inside(g, m, a_i.vertices)
        outer = next(sd for sd in sides(g, m) if sd != inner)
        if outer.vertices != others:
            raise IntegrityError("cut sides do not match the parts of the line", (sorted(s), i))
        over = [c for c in big3 if contains(c, m)]
        if len(over) > 1:
            raise IntegrityError("more than one three-edge cut contains a line cut", (sorted(s), i))
        mx = over[0] if over else m
        inner_x = _side_inside(g, mx, inner.vertices)
        cuts.append(m)
        ext.append(mx)
        b.append(inner.vertices)
        bx.append(inner_x.vertices)
        t.append(inner.boundary)
        tx.append(inner_x.boundary)
    out = TripleCut(s, tuple(trivials), parts, tuple(cuts), tuple(ext), tuple(b), tuple(bx), tuple(t), tuple(tx))
    memo[s] = out
    return out


def triple_cuts(g: Graph) -> tuple[TripleCut, ...]:
    memo = g._memo
    if "triples" not in memo:
        found = []
        for s in sorted(enumerate_cutsets(g), key=sort_key):
            f = build_triple_cut(g, s)
            if f is not None:
                found.append(f)
        memo["triples"] = tuple(found)
    return memo["triples"]


def triple_cut_inner_sets(g: Graph, f: TripleCut) -> frozenset[Cutset]:
    """Cutsets of the triple cut: the line, its subordinated trivials and inner sets of each M_i."""
    out = {f.line, *f.trivials}
    for m in f.cuts:
        if not is_trivial(g, m):
            out.update(inner_sets(g, m))
    return frozenset(out)


def triple_complex_members(g: Graph, f: TripleCut) -> frozenset[Cutset]:
    """Cutsets inside O(F) other than the T'_i, cross-checked against the structural description."""
    o = f.neighborhood
    skip = set(f.boundaries_ext)
    direct = frozenset(c for c in enumerate_cutsets(g) if c <= o and c not in skip)
    structural = {f.line, *f.trivials}
    for m in f.extended:
        if not is_trivial(g, m):
            structural.update(inner_sets(g, m))
    if direct != structural:
        raise IntegrityError(
            "triple complex membership rules disagree",
            (sorted(f.line), sorted(map(sort_key, direct ^ structural))),
        )
    return direct
