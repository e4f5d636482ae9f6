"""Flowers: a center vertex with a cycle of petals whose 3-sets cut the graph cyclically.

A flower ``(p; q1..qm)`` is stored with its petals in a canonical cyclic
order (lexicographically least over rotations and reflections) and with
``parts[i]`` being the part bounded by ``{p, petals[i], petals[i+1]}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .cuts import (
    VertexEdgeCut,
    complement_by_edge,
    cuts_of_kind,
    mixed_set,
)
from .cutsets import (
    Cutset,
    Part,
    decompose,
    dependence_components,
    dependent,
    enumerate_cutsets,
    parts_of,
    sort_key,
    splits,
)
from .errors import InputError, IntegrityError
from .graph_core import Graph, from_mask


@dataclass(frozen=True)
class Flower:
    center: int
    petals: tuple[int, ...]
    parts: tuple[Part, ...]

    @property
    def m(self) -> int:
        return len(self.petals)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.petals) | {self.center}

    def key(self) -> tuple:
        return (self.center, self.petals)

    def q(self, i: int) -> int:
        return self.petals[i % self.m]

    def Q(self, i: int, j: int) -> Cutset:
        return frozenset((self.center, self.q(i), self.q(j)))

    def part(self, i: int) -> Part:
        return self.parts[i % self.m]

    def empty(self, i: int) -> bool:
        return self.part(i).is_empty

    def inner_sets(self) -> list[Cutset]:
        m = self.m
        out = []
        for i, j in combinations(range(m), 2):
            if (j - i) % m not in (1, m - 1):
                out.append(self.Q(i, j))
        return sorted(out, key=sort_key)

    def arc(self, i: int, j: int) -> frozenset[int]:
        """G_{i,j}: union of consecutive parts from petal i to petal j."""
        out: set[int] = set()
        k = i % self.m
        while k != j % self.m:
            out |= self.parts[k].vertices
            k = (k + 1) % self.m
        return frozenset(out)


@dataclass(frozen=True)
class FlowerFlags:
    degenerate: bool
    singular: bool


@dataclass(frozen=True)
class FlowerNeighborhood:
    u: tuple[int, ...]  # u_{i,i+1}; equals the center when undefined
    center_neighborhood: frozenset[int]  # T(p)
    closure: frozenset[int]  # O(F)


@dataclass(frozen=True)
class BoundaryCuts:
    m: VertexEdgeCut
    m_star: VertexEdgeCut | None
    m_prime: VertexEdgeCut
    q_prime: frozenset[int]
    g_prime: frozenset[int]
    neighborhood: frozenset[int]  # O(G')


def canonical_cycle(seq: Iterable[int]) -> tuple[int, ...]:
    seq = tuple(seq)
    n = len(seq)
    best = None
    for base in (seq, seq[::-1]):
        for r in range(n):
            cand = base[r:] + base[:r]
            if best is None or cand < best:
                best = cand
    return best


def generate_flower(g: Graph, family: Iterable[Cutset]) -> Flower | None:
    """The flower generated by a dependence-connected family, or None if it generates none."""
    family = frozenset(frozenset(s) for s in family)
    if len(family) < 2:
        raise InputError("a generating family needs at least two cutsets")
    if len(dependence_components(g, family)) != 1:
        raise InputError("family is not dependence-connected")
    parts = decompose(g, family)
    if any(p.is_small for p in parts):
        return None
    common = frozenset.intersection(*family)
    if len(common) != 1:
        return None
    (p,) = common
    petal_adj: dict[int, list[int]] = {}
    for part in parts:
        b = part.boundary
        if len(b) != 3 or p not in b:
            return None
        a, c = sorted(b - {p})
        petal_adj.setdefault(a, []).append(c)
        petal_adj.setdefault(c, []).append(a)
    m = len(parts)
    if m < 4 or len(petal_adj) != m or any(len(v) != 2 for v in petal_adj.values()):
        return None
    start = min(petal_adj)
    order = [start]
    prev, cur = None, start
    while True:
        a, c = petal_adj[cur]
        nxt = a if a != prev else c
        if nxt == start:
            break
        if nxt in order:
            return None
        order.append(nxt)
        prev, cur = cur, nxt
    if len(order) != m:
        return None
    return _assemble(g, p, order, parts)


def _assemble(g: Graph, p: int, order, parts) -> Flower | None:
    petals = canonical_cycle(order)
    by_boundary = {part.boundary: part for part in parts}
    m = len(petals)
    aligned = []
    for i in range(m):
        key = frozenset((p, petals[i], petals[(i + 1) % m]))
        if key not in by_boundary:
            return None
        aligned.append(by_boundary[key])
    f = Flower(p, petals, tuple(aligned))
    if not _valid(g, f):
        return None
    # parts do not depend on which generating family was used
    full = decompose(g, f.inner_sets())
    if sorted(sort_key(x.vertices) for x in full) != sorted(sort_key(x.vertices) for x in aligned):
        return None
    realigned = []
    for i in range(m):
        key = frozenset((p, petals[i], petals[(i + 1) % m]))
        realigned.append(next(x for x in full if x.boundary == key))
    return Flower(p, petals, tuple(realigned))


def _valid(g: Graph, f: Flower) -> bool:
    cutsets = enumerate_cutsets(g)
    m = f.m
    for i, j in combinations(range(m), 2):
        if (j - i) % m in (1, m - 1):
            continue
        q = f.Q(i, j)
        if q not in cutsets:
            return False
        got = sorted(sort_key(x.vertices) for x in parts_of(g, q))
        want = sorted([sort_key(f.arc(i, j)), sort_key(f.arc(j, i))])
        if got != want:
            return False
    return True


def flower_from_pair(g: Graph, s: Cutset, t: Cutset) -> Flower | None:
    if len(s & t) != 1 or not dependent(g, s, t):
        return None
    return generate_flower(g, [s, t])


def _closure(g: Graph, p: int, seed: Iterable[Cutset]) -> frozenset[Cutset]:
    pool = [c for c in enumerate_cutsets(g) if p in c]
    got = set(seed)
    frontier = list(got)
    while frontier:
        s = frontier.pop()
        for t in pool:
            if t not in got and dependent(g, s, t):
                got.add(t)
                frontier.append(t)
    return frozenset(got)


def maximal_flower(g: Graph, f: Flower) -> Flower:
    fam = _closure(g, f.center, f.inner_sets())
    if fam == frozenset(f.inner_sets()):
        return f
    out = generate_flower(g, fam)
    if out is None or out.center != f.center or not f.vertex_set <= out.vertex_set:
        raise IntegrityError("closure of a flower over its center does not generate a flower", f.key())
    return maximal_flower(g, out)


def is_maximal_flower(g: Graph, f: Flower) -> bool:
    return _closure(g, f.center, f.inner_sets()) == frozenset(f.inner_sets())


def maximal_flowers(g: Graph) -> tuple[Flower, ...]:
    """Every maximal flower of ``g``, each found from a dependent pair sharing one vertex."""
    memo = g._memo
    if "flowers" in memo:
        return memo["flowers"]
    found: dict[tuple, Flower] = {}
    covered: set[frozenset] = set()
    cs = sorted(enumerate_cutsets(g), key=sort_key)
    for s, t in combinations(cs, 2):
        if len(s & t) != 1 or frozenset((s, t)) in covered or not dependent(g, s, t):
            continue
        f = flower_from_pair(g, s, t)
        if f is None:
            raise IntegrityError("dependent cutsets sharing one vertex do not generate a flower", (sorted(s), sorted(t)))
        mf = maximal_flower(g, f)
        found.setdefault(mf.key(), mf)
        inner = mf.inner_sets()
        for a, b in combinations(inner, 2):
            covered.add(frozenset((a, b)))
    out = tuple(sorted(found.values(), key=Flower.key))
    memo["flowers"] = out
    return out


def classify_flower(g: Graph, f: Flower) -> FlowerFlags:
    if not is_maximal_flower(g, f):
        raise InputError("flower classification needs a maximal flower")
    vf = f.vertex_set
    hits = [c for c in cuts_of_kind(g, 3) if vf <= c.span]
    if hits and f.m != 4:
        raise IntegrityError("flower inside a three-edge cut with other than four petals", f.key())
    singular = g.degree(f.center) == 3
    flags = FlowerFlags(bool(hits), singular)
    if singular and not flags.degenerate:
        nonempty = sum(1 for part in f.parts if not part.is_empty)
        if nonempty not in (2, 3) or not 4 <= f.m <= 6:
            raise IntegrityError("singular flower outside the expected census", f.key())
    return flags


def _require_nondegenerate(g: Graph, f: Flower) -> FlowerFlags:
    flags = classify_flower(g, f)
    if flags.degenerate:
        raise InputError("neighborhoods are defined for nondegenerate flowers only")
    return flags


def flower_neighborhood(g: Graph, f: Flower) -> FlowerNeighborhood:
    memo = g._memo.setdefault("fnb", {})
    if f.key() in memo:
        return memo[f.key()]
    flags = _require_nondegenerate(g, f)
    p, m = f.center, f.m
    np_ = from_mask(g.adj_mask(p))
    u = []
    for i in range(m):
        part = f.part(i)
        near = np_ & part.vertices
        if flags.singular and not part.is_empty:
            hit = near & part.interior
            if len(hit) != 1:
                raise IntegrityError("nonempty part of a singular flower without one center neighbour", (f.key(), i))
            u.append(next(iter(hit)))
        elif not flags.singular and f.empty(i - 1) and f.empty(i + 1) and len(near) == 1:
            u.append(next(iter(near)))
        else:
            u.append(p)
    tp = {x for x in u if x != p}
    for j in range(m):
        if f.empty(j - 1) and f.empty(j) and u[(j - 2) % m] != p and u[(j + 1) % m] != p:
            tp.add(f.q(j))
    nb = FlowerNeighborhood(tuple(u), frozenset(tp), f.vertex_set | frozenset(u))
    if flags.singular and nb.center_neighborhood != np_:
        raise IntegrityError("center neighbourhood rule disagrees with adjacency for a singular flower", f.key())
    memo[f.key()] = nb
    return nb


def boundary_cuts(g: Graph, f: Flower, i: int) -> BoundaryCuts:
    if not 0 <= i < f.m:
        raise InputError(f"part index {i} out of range for a flower with {f.m} parts")
    nb = flower_neighborhood(g, f)
    p, m = f.center, f.m
    qi, qj = f.q(i), f.q(i + 1)
    vs, es = {p}, []
    if f.empty(i - 1):
        es.append((f.q(i - 1), qi))
    else:
        vs.add(qi)
    if f.empty(i + 1):
        es.append((qj, f.q(i + 2)))
    else:
        vs.add(qj)
    mm = mixed_set(g, vs, es)
    part = f.part(i)
    star = None
    if mm.is_cutting:
        for x in sorted(from_mask(g.adj_mask(p)) & part.interior):
            got = complement_by_edge(g, mm, p, x)
            if got is not None:
                if star is not None:
                    raise IntegrityError("boundary cut complemented by two center edges", (f.key(), i))
                star = got
    ui = nb.u[i]
    if ui != p:
        if star is None or (min(p, ui), max(p, ui)) not in star.edge_set:
            raise IntegrityError("boundary cut cannot be complemented by the center edge", (f.key(), i))
        prime = star
        qp = frozenset((qi, ui, qj))
    else:
        prime = mm
        qp = f.Q(i, i + 1)
    shrink = ui != p or (part.is_empty and (nb.u[(i - 1) % m] != p or nb.u[(i + 1) % m] != p))
    gp = part.vertices - {p} if shrink else part.vertices
    if prime.is_cutting and prime.kind > 0:
        o = gp | prime.span
    else:
        o = gp
    return BoundaryCuts(mm, star, prime, qp, gp, o)


def flower_complex_members(g: Graph, f: Flower) -> frozenset[Cutset]:
    """Cutsets inside O(F) that split O(F); cross-checked against the structural description."""
    nb = flower_neighborhood(g, f)
    o = nb.closure
    direct = frozenset(c for c in enumerate_cutsets(g) if c <= o and splits(g, c, o))
    structural = set(f.inner_sets())
    cutsets = enumerate_cutsets(g)
    for i in range(f.m):
        if nb.u[i] == f.center:
            continue
        bc = boundary_cuts(g, f, i)
        span = bc.m_prime.span
        for c in cutsets:
            if c <= span and c != bc.q_prime:
                structural.add(c)
    if g.degree(f.center) == 3:
        structural.add(nb.center_neighborhood)
    if direct != structural:
        raise IntegrityError(
            "flower complex membership rules disagree",
            (f.key(), sorted(map(sort_key, direct ^ structural))),
        )
    return direct
