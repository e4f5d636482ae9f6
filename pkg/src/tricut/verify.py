"""Machine checks of every structural claim, run over all applicable instances of one graph.

Each check counts the instances it looked at and the ones that failed, and
keeps the first few failing instances as witnesses. Checks prefer direct
routes (component counts, separation tests, building a cut from scratch)
over the machinery that produced the objects being checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations

from .complexes import (
    Complex,
    ComplexKind,
    belongs,
    belongs_candidates,
    classify_complexes,
    complex_parts,
    nondegenerate_flowers,
)
from .cuts import (
    VertexEdgeCut,
    complement_by_edge,
    complements,
    contains,
    cuts_of_kind,
    enumerate_cuts,
    inner_sets,
    is_maximal,
    is_singular_edge,
    is_trivial,
    make_cut,
    one_edge_cuts_dependent,
    sides,
)
from .cutsets import (
    decompose,
    dependence_components,
    dependent,
    enumerate_cutsets,
    is_single,
    parts_of,
    require_analyzable,
    separates,
    sort_key,
    splits,
)
from .errors import InputError, IntegrityError
from .flowers import (
    Flower,
    boundary_cuts,
    flower_complex_members,
    flower_from_pair,
    flower_neighborhood,
    generate_flower,
    maximal_flowers,
)
from .graph_core import Graph, component_masks, edge, from_mask, to_mask
from .hypertree import (
    build_hypertree,
    hypertree_components,
    is_hypertree,
    separation_classes,
)
from .oracle import oracle_is_hypertree
from .triple_cuts import subordinated_trivials, triple_cut_inner_sets, triple_cuts

# checks every graph must cover somewhere in a test corpus
REQUIRED_IDS = (
    "l1c1", "l1c2", "l1c3", "lds1", "lrr1", "lor12", "l31", "l31c1", "ll12",
    "ll31c1", "ll32", "ll32c1", "lmk0", "lmk1", "lmk2", "lmk3", "l3v0",
    "ll34", "ll35", "ll36", "ll37", "ll38", "ll39", "ll391", "l40", "l41",
    "tcr", "lts00", "lts1", "ls1",
)
EXTRA_IDS = (
    "dep_sym", "lds0", "ll31c2", "r30", "t30", "tr5", "rr5", "l30", "ll33",
    "ll11", "l300", "lor0", "lor12c1", "lmk3c1", "rmk1", "nbhd", "belongs",
    "lts00c1", "tt", "ts2", "l30c1", "l32", "l32c1", "mk_pre", "parts",
)
ALL_IDS = REQUIRED_IDS + EXTRA_IDS
MAX_WITNESSES = 3
CYCLE_ORACLE_MAX_EDGE = 6


@dataclass
class LemmaResult:
    lemma: str
    instances: int = 0
    violations: int = 0
    witnesses: list = field(default_factory=list)


@dataclass
class VerificationReport:
    results: dict[str, LemmaResult] = field(default_factory=lambda: {k: LemmaResult(k) for k in ALL_IDS})

    @property
    def violations(self) -> int:
        return sum(r.violations for r in self.results.values())

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def __getitem__(self, lemma: str) -> LemmaResult:
        return self.results[lemma]

    def merge(self, other: VerificationReport) -> None:
        for k, r in other.results.items():
            mine = self.results.setdefault(k, LemmaResult(k))
            mine.instances += r.instances
            mine.violations += r.violations
            room = MAX_WITNESSES - len(mine.witnesses)
            mine.witnesses.extend(r.witnesses[:max(room, 0)])

    def rows(self) -> list[LemmaResult]:
        return [self.results[k] for k in sorted(self.results, key=_id_order)]

    def format(self) -> str:
        lines = []
        for r in self.rows():
            status = "ok" if not r.violations else "VIOLATED"
            lines.append(f"{r.lemma:8} {r.instances:7d} {r.violations:5d}  {status}")
            for w in r.witnesses:
                lines.append(f"         witness: {w}")
        return "\n".join(lines)


def _id_order(k: str) -> tuple:
    return (ALL_IDS.index(k), k) if k in ALL_IDS else (len(ALL_IDS), k)


def _show(x):
    if isinstance(x, (set, frozenset)):
        return sorted((_show(y) for y in x), key=repr)
    if isinstance(x, (list, tuple)):
        return [_show(y) for y in x]
    if isinstance(x, VertexEdgeCut):
        return {"vertices": sorted(x.vertices), "edges": sorted(x.edge_set)}
    if isinstance(x, Flower):
        return {"center": x.center, "petals": list(x.petals)}
    if isinstance(x, Complex):
        return {"kind": x.kind.value, "members": [sorted(m) for m in x.members]}
    return x


class _Run:
    def __init__(self, g: Graph):
        self.g = g
        self.report = VerificationReport()

    def hit(self, lemma: str, ok: bool, witness=None) -> None:
        r = self.report.results[lemma]
        r.instances += 1
        if not ok:
            r.violations += 1
            if len(r.witnesses) < MAX_WITNESSES:
                r.witnesses.append(_show(witness))

    def section(self, lemma: str, fn, *args) -> None:
        # an integrity failure inside the machinery counts against the section's main claim
        try:
            fn(self, *args)
        except IntegrityError as e:
            self.hit(lemma, False, str(e))


def _nbrs(g: Graph, v: int) -> frozenset[int]:
    return from_mask(g.adj_mask(v))


def _isolates(g: Graph, t, v: int, pool) -> bool:
    """T cuts v off from every other vertex of ``pool`` outside T."""
    t = frozenset(t)
    rest = frozenset(pool) - t - {v}
    return v not in t and bool(rest) and separates(g, t, {v}, rest)


def _is_trivial_set(g: Graph, t) -> bool:
    return any(len(c) == 1 for c in _comps(g, t))


def _comps(g: Graph, t) -> list[frozenset[int]]:
    return [from_mask(c) for c in component_masks(g, g.all_mask & ~to_mask(t))]


def _complementable(g: Graph, t, x: int, y: int) -> bool:
    """Whether replacing x by the edge xy in the vertex set ``t`` gives a cut, tested directly."""
    return g.has_edge(x, y) and make_cut(g, frozenset(t) - {x}, [(x, y)]) is not None


def _check_parts(run: _Run, family, parts, witness) -> None:
    """Nonempty parts induce connected subgraphs; two parts meet inside one member.

    Empty parts are exempt: {u, v, p} with only uv an edge is a legitimate empty part.
    """
    g = run.g
    ok = all(len(component_masks(g, to_mask(x.vertices))) == 1 for x in parts if x.interior)
    for a, b in combinations(parts, 2):
        common = a.vertices & b.vertices
        ok = ok and (not common or any(common <= m for m in family))
    run.hit("parts", ok, witness)


# ---------------------------------------------------------------- cutset pairs


def _pairs(run: _Run) -> None:
    g = run.g
    cs = sorted(enumerate_cutsets(g), key=sort_key)
    small_edges = set()
    for s, t in combinations(cs, 2):
        a, b = splits(g, s, t), splits(g, t, s)
        run.hit("dep_sym", a == b, (s, t))
        dep = dependent(g, s, t)
        if not dep:
            run.hit("l1c1", True)
            continue
        fs, hs = parts_of(g, s), parts_of(g, t)
        run.hit("l1c1", len(s & t) <= 1 and len(fs) <= 3 and len(hs) <= 3, (s, t))
        p = s & t
        cells = {}
        for i, f in enumerate(fs):
            for j, h in enumerate(hs):
                cells[(i, j)] = f.vertices & h.vertices
        got = {x.vertices: x for x in decompose(g, [s, t])}
        _check_parts(run, [s, t], list(got.values()), (s, t))
        ok = set(cells.values()) == set(got)
        for (i, j), c in cells.items():
            ti = t & fs[i].interior
            sj = s & hs[j].interior
            ok = ok and bool(ti) and bool(sj) and c in got and got[c].boundary == p | ti | sj
        run.hit("lds0", ok, (s, t))
        small = [c for c in cells.values() if len(c) == 2]
        if not p:
            ok = bool(small)
            for (i, j), c in cells.items():
                ti = t & fs[i].interior
                sj = s & hs[j].interior
                ok = ok and ((len(c) == 2) == (len(ti) == 1 and len(sj) == 1))
                if len(c) == 2:
                    (u,) = c & t
                    (v,) = c & s
                    ok = ok and _nbrs(g, u) & hs[j].vertices == {v} and _nbrs(g, v) & fs[i].vertices == {u}
            run.hit("l1c2", ok, (s, t))
        if len(p) == 1:
            ok = len(fs) == 2 and len(hs) == 2 and not small
            for c in cells.values():
                if c in got and got[c].is_empty:
                    u, v = c & (s - t), c & (t - s)
                    ok = ok and len(c) == 3 and p <= c and len(u) == 1 and len(v) == 1
                    ok = ok and g.has_edge(next(iter(u)), next(iter(v)))
            run.hit("l1c3", ok, (s, t))
            f = flower_from_pair(g, s, t)
            ok = f is not None and f.center == next(iter(p)) and f.m == 4
            if ok:
                pos = {q: k for k, q in enumerate(f.petals)}
                u1, v1 = sorted(s - p)
                ok = set(f.petals) == (s | t) - p and (pos[u1] - pos[v1]) % 4 == 2
            run.hit("r30", ok, (s, t))
        for c in small:
            (u,) = c & t
            (v,) = c & s
            small_edges.add(edge(u, v))
            run.hit("ll31c2", _complementable(g, t, u, v) and _complementable(g, s, v, u), (s, t, c))
    for e in g.edges:
        run.hit("t30", is_singular_edge(g, e) == (e in small_edges), e)


def _lds1(run: _Run) -> None:
    g = run.g
    cs = sorted(enumerate_cutsets(g), key=sort_key)
    for s, t in permutations(cs, 2):
        blank = [a.vertices for a in parts_of(g, t) if not s & a.interior]
        if blank:
            run.hit("lds1", not splits(g, s, frozenset().union(*blank)), (s, t))


def _tr5(run: _Run) -> None:
    g = run.g
    cs = enumerate_cutsets(g)
    comps = dependence_components(g, cs)

    def flowery(comp) -> bool:
        return len(comp) == 1 or generate_flower(g, comp) is not None

    for comp in comps:
        no_small = not any(p.is_small for p in decompose(g, comp))
        run.hit("tr5", no_small == flowery(comp), sorted(map(sort_key, comp)))
    whole = not any(p.is_small for p in decompose(g, cs))
    run.hit("tr5", whole == all(flowery(c) for c in comps), "whole family")


def _l3v0(run: _Run) -> None:
    g = run.g
    cs = sorted(enumerate_cutsets(g), key=sort_key)
    for s in cs:
        k = len(parts_of(g, s))
        if k >= 4:
            run.hit("l3v0", is_single(g, s), s)
        elif k == 3:
            subs = set(subordinated_trivials(g, s))
            for t in cs:
                if t != s and dependent(g, s, t):
                    run.hit("l3v0", _is_trivial_set(g, t) and t in subs, (s, t))
    for t in cs:
        if _is_trivial_set(g, t):
            lone = [next(iter(c)) for c in _comps(g, t) if len(c) == 1]
            run.hit("l3v0", all(g.degree(a) == 3 and _nbrs(g, a) == t for a in lone), t)
            owners = [s for s in cs if t in subordinated_trivials(g, s)]
            run.hit("l3v0", len(owners) <= 1, (t, owners))


# ---------------------------------------------------------------- vertex-edge cuts


def _cuts(run: _Run) -> None:
    g = run.g
    cset = enumerate_cutsets(g)
    allcuts = enumerate_cuts(g)
    for m in allcuts:
        s1, s2 = sides(g, m)
        # each boundary: the cut vertices plus the distinct edge ends on its side
        ok = all(sd.boundary == m.vertices | {e[k] for e in m.edges} for k, sd in enumerate((s1, s2)))
        ends = [a for e in m.edges for a in e]
        if len(set(ends)) < len(ends):
            ok = ok and len(m.components[0]) == 1 and len(s2.boundary) == 3
        else:
            ok = ok and len(s1.boundary) == len(s2.boundary) == 3
        run.hit("rr5", ok, m)
        inside = [c for c in cset if c <= m.span]
        bset = {s1.boundary, s2.boundary}
        if is_trivial(g, m):
            inner = set()
        else:
            inner = set(inner_sets(g, m))
            for e in m.edges:
                run.hit("l31", not any(set(e) <= c for c in cset), (m, e))
            ok = True
            for r in inner:
                pts = parts_of(g, r)
                ok = ok and len(pts) == 2 and (
                    (s1.vertices <= pts[0].vertices and s2.vertices <= pts[1].vertices)
                    or (s1.vertices <= pts[1].vertices and s2.vertices <= pts[0].vertices)
                )
            for near, far in ((s1, s2), (s2, s1)):
                if far.interior:
                    if far.boundary not in cset:
                        ok = False
                        continue
                    pts = [p.vertices for p in parts_of(g, far.boundary)]
                    ok = ok and near.neighborhood in pts
                    ok = ok and all(p == near.neighborhood or p <= far.vertices for p in pts)
            if s1.interior and s2.interior:
                ok = ok and s1.boundary in cset and s2.boundary in cset
            run.hit("l30", ok, m)
        for c in inside:
            run.hit("l31c1", c in inner or c in bset, (m, c))
        for far in (s1, s2):
            t2 = far.boundary
            if t2 not in cset:
                continue
            for c in cset:
                if c == t2 or not dependent(g, c, t2):
                    continue
                xs = c & far.vertices
                if len(xs) != 1:
                    continue
                (x,) = xs
                for y in t2:
                    if _isolates(g, c, y, t2):
                        ok = y in m.vertices and g.has_edge(x, y)
                        ok = ok and make_cut(g, m.vertices - {y}, list(m.edge_set) + [edge(x, y)]) is not None
                        run.hit("l30c1", ok, (m, c, x, y))
        if m.kind == 2:
            run.hit("ll31c1", len(complements(g, m)) <= 1, m)
    two = cuts_of_kind(g, 2)
    three = cuts_of_kind(g, 3)
    for a, b in combinations(two, 2):
        if a.edge_set == b.edge_set:
            run.hit("ll32", any(contains(n, a) and contains(n, b) for n in three), (a, b))
    maxi = [m for m in allcuts if is_maximal(g, m)]
    for a, b in combinations(maxi, 2):
        run.hit("ll32c1", len(a.edge_set & b.edge_set) <= 1, (a, b))
    one = cuts_of_kind(g, 1)
    for a, b in combinations(one, 2):
        if a.edge_set != b.edge_set or a.vertices & b.vertices:
            continue
        if one_edge_cuts_dependent(g, a, b):
            run.hit("ll33", any(contains(n, a) and contains(n, b) for n in three), (a, b))


def _lmk0(run: _Run) -> None:
    g = run.g
    for t in sorted(enumerate_cutsets(g), key=sort_key):
        comps = _comps(g, t)
        if len(comps) != 2:
            continue
        where = {v: k for k, c in enumerate(comps) for v in c}
        opts = []
        for x in sorted(t):
            for y in sorted(_nbrs(g, x) - t):
                if _complementable(g, t, x, y):
                    opts.append((x, y))
        for (x, x1), (y, y1) in combinations(opts, 2):
            if x == y or where[x1] == where[y1]:
                continue
            both = make_cut(g, t - {x, y}, [(x, x1), (y, y1)]) is not None
            run.hit("lmk0", both == (not g.has_edge(x, y)), (t, (x, x1), (y, y1)))


def _ll34(run: _Run) -> None:
    g = run.g
    cset = sorted(enumerate_cutsets(g), key=sort_key)
    for m in enumerate_cuts(g):
        if not is_maximal(g, m) or is_trivial(g, m):
            continue
        inner = set(inner_sets(g, m))
        s12 = sides(g, m)
        for s in cset:
            if s in inner or not splits(g, s, m.span):
                continue
            ok = len(parts_of(g, s)) == 2
            fam = inner | {s} | {sd.boundary for sd in s12 if sd.boundary in cset}
            try:
                f = generate_flower(g, fam)
            except InputError:
                f = None
            first = f is not None and m.span <= f.vertex_set
            second = False
            for i, sd in enumerate(s12):
                if not s <= sd.neighborhood:
                    continue
                for e in m.edges:
                    a, b = (e[0], e[1]) if i == 0 else (e[1], e[0])
                    if _isolates(g, s, a, m.span) and s - sd.vertices == {b}:
                        second = True
            run.hit("ll34", ok and (first or second), (m, s))


# ---------------------------------------------------------------- flowers


def _flower(run: _Run, f: Flower) -> None:
    g = run.g
    cset = enumerate_cutsets(g)
    p, m = f.center, f.m
    vf = f.vertex_set
    inner = set(f.inner_sets())
    run.hit("lrr1", frozenset.intersection(*inner) == {p}, f)
    for trio in combinations(f.petals, 3):
        run.hit("lor12", frozenset(trio) not in cset, (f, trio))
    for c in cset:
        if c <= vf:
            run.hit("lor12c1", p in c, (f, c))
    for c in cset:
        if p in c and c not in inner:
            run.hit("l300", not any(dependent(g, c, s) for s in inner), (f, c))
    for i in range(m):
        part = f.part(i)
        qi, qj = f.q(i), f.q(i + 1)
        for v in part.interior:
            alive = (part.interior - {v}) | {qi, qj}
            comps = component_masks(g, to_mask(alive))
            run.hit("l300", any(c >> qi & 1 and c >> qj & 1 for c in comps), (f, i, v))
        if part.is_empty:
            run.hit("r30", g.has_edge(qi, qj), (f, i))
            if f.empty(i - 1):
                run.hit("r30", _nbrs(g, qi) == {p, f.q(i - 1), qj}, (f, i))
    pos = {q: k for k, q in enumerate(f.petals)}
    for c in enumerate_cuts(g):
        if c.span <= vf and not is_trivial(g, c):
            ok = p in c.vertices
            for a, b in c.edges:
                ok = ok and a in pos and b in pos and (pos[a] - pos[b]) % m in (1, m - 1)
                if ok:
                    k = pos[a] if (pos[b] - pos[a]) % m == 1 else pos[b]
                    ok = f.empty(k)
            run.hit("l32c1", ok, (f, c))
        if c.kind == 1 and p in c.vertices and len(c.vertices) == 2:
            (qi,) = c.vertices - {p}
            if qi not in pos:
                continue
            ends = [e for e in (c.edges[0], c.edges[0][::-1]) if e[0] in pos and e[0] != qi]
            if not ends:
                continue
            ok = False
            for qj, x in ends:
                j = pos[qj]
                if x in pos and (pos[x] - j) % m in (1, m - 1):
                    k = j if (pos[x] - j) % m == 1 else pos[x]
                    ok = ok or f.empty(k)
                for k in range(m):
                    if {pos[qi], j} == {k, (k + 1) % m} and x in f.part(k).interior:
                        two = len(parts_of(g, f.Q(k, k + 1))) != 2 or g.has_edge(f.q(k), f.q(k + 1))
                        ok = ok or two
            run.hit("l32", ok, (f, c))
    for i in range(m):
        if not f.empty(i):
            continue
        e_i = (f.q(i), f.q(i + 1))
        for j in range(m):
            if j not in (i, (i + 1) % m):
                run.hit("l32c1", make_cut(g, {f.q(j), p}, [e_i]) is not None, (f, i, j))
            if j != i and f.empty(j):
                run.hit("l32c1", make_cut(g, {p}, [e_i, (f.q(j), f.q(j + 1))]) is not None, (f, i, j))
    for c in enumerate_cuts(g):
        if vf <= c.span:
            empties = [i for i in range(m) if f.empty(i)]
            ok = m == 4 and any((a - b) % 4 == 2 for a, b in combinations(empties, 2))
            run.hit("ll12", ok, (f, c))
    for t in sorted(cset, key=sort_key):
        if t in inner or not splits(g, t, vf):
            continue
        ok = len(parts_of(g, t)) == 2
        one = any(_isolates(g, t, v, vf) for v in vf)
        two = False
        for i in range(m):
            pair = {f.q(i + 1), f.q(i + 2)}
            if pair & t or not separates(g, t, pair, vf - pair):
                continue
            mid = f.part(i + 1)
            x = t - {f.q(i), f.q(i + 3)}
            if f.empty(i) and f.empty(i + 2) and len(x) == 1 and {f.q(i), f.q(i + 3)} <= t:
                (xv,) = x
                two = two or (xv in mid.interior and _nbrs(g, p) & mid.vertices == {xv})
        run.hit("ll36", ok and (one or two), (f, t))
        for k in range(m):
            q = f.q(k)
            if not _isolates(g, t, q, vf):
                continue
            a, b = f.part(k - 1), f.part(k)
            ok = a.is_empty != b.is_empty
            if ok:
                e, o = (a, b) if a.is_empty else (b, a)
                (other,) = e.boundary - {p, q}
                ok = other in t and len(t & o.vertices) == 2 and t <= o.vertices | {other}
            run.hit("ll37", ok, (f, t, q))


def _nondegenerate(run: _Run, f: Flower) -> None:
    g = run.g
    cset = enumerate_cutsets(g)
    p, m = f.center, f.m
    np_ = _nbrs(g, p)
    nb = flower_neighborhood(g, f)
    o = nb.closure
    singular = g.degree(p) == 3
    inner = set(f.inner_sets())
    bcs = [boundary_cuts(g, f, i) for i in range(m)]
    for i in range(m):
        part = f.part(i)
        q = f.Q(i, i + 1)
        if q in cset:
            for x in sorted(np_ - q):
                if complement_by_edge(g, q, p, x) is not None:
                    run.hit("lor0", x in part.interior, (f, i, x))
        mm = bcs[i].m
        if mm.is_cutting:
            for c in complements(g, mm):
                if is_trivial(g, c):
                    continue
                (new,) = c.edge_set - mm.edge_set
                x = next(iter(set(new) - {p}), None)
                ok = p in new and x in part.interior and np_ & (part.vertices - mm.vertices) == {x}
                run.hit("lor0", ok, (f, i, c))
    for t in sorted(cset, key=sort_key):
        if _isolates(g, t, p, f.vertex_set):
            ok = _comps(g, t).count(frozenset({p})) == 1 and m <= 6
            nonempty = [x for x in f.parts if not x.is_empty]
            ok = ok and len(nonempty) <= 3
            ok = ok and all(len(x.interior & t) == 1 and not x.boundary & t for x in nonempty)
            run.hit("ll38", ok, (f, t))
    # ll39: cutsets inside O(F)
    for t in sorted(cset, key=sort_key):
        if t <= o:
            ok = t in inner or any(t <= bc.m_prime.span for bc in bcs) or (singular and t == nb.center_neighborhood)
            run.hit("ll39", ok, (f, t))
        elif splits(g, t, o):
            ok = len(parts_of(g, t)) == 2 and any(v != p and _isolates(g, t, v, o) for v in o)
            run.hit("ll39", ok, (f, t))
    described = set(inner)
    for i, bc in enumerate(bcs):
        if nb.u[i] != p:
            described |= {c for c in cset if c <= bc.m_prime.span and c != bc.q_prime}
    if singular:
        described.add(nb.center_neighborhood)
    for t in described:
        ok = t in cset and len(parts_of(g, t)) == 2 and splits(g, t, o)
        run.hit("ll39", ok, (f, t))
    for i, bc in enumerate(bcs):
        gi = bc.g_prime - bc.q_prime
        ok = not splits(g, bc.q_prime, o) and (bc.q_prime in cset) == bool(gi)
        run.hit("ll39", ok, (f, i, bc.q_prime))
    if singular:
        ok = all(bc.g_prime != f.part(i).vertices for i, bc in enumerate(bcs))
        run.hit("ll391", ok and nb.center_neighborhood == np_, f)
    members = flower_complex_members(g, f)
    for i, bc in enumerate(bcs):
        part = f.part(i)
        if bc.g_prime == part.vertices:
            continue
        ok = False
        for s in members:
            if p in s or not separates(g, s, {p}, bc.g_prime):
                continue
            hit = s & part.vertices
            if part.interior:
                ok = ok or hit == {nb.u[i]}
            else:
                ok = ok or hit in ({f.q(i)}, {f.q(i + 1)})
        run.hit("l40", ok, (f, i))
    parts = decompose(g, members)
    want = {bc.g_prime for bc in bcs} | {frozenset({p, x}) for x in nb.center_neighborhood}
    run.hit("l41", {x.vertices for x in parts} == want, f)
    by_vs = {x.vertices: x for x in parts}
    for i, bc in enumerate(bcs):
        small = not f.part(i).interior and (nb.u[(i - 1) % m] != p or nb.u[(i + 1) % m] != p)
        ok = (len(bc.g_prime) == 2) == small
        if len(bc.g_prime) >= 3 and bc.g_prime in by_vs:
            ok = ok and by_vs[bc.g_prime].boundary == bc.q_prime
        run.hit("l41", ok, (f, i))
    cx = Complex(ComplexKind.FLOWER, tuple(sorted(members, key=sort_key)))
    for r in sorted(cset - members, key=sort_key):
        run.hit("tcr", len(belongs_candidates(g, cx, r)) == 1, (f, r))
    for a in complex_parts(g, cx):
        for i, bc in enumerate(bcs):
            if a.vertices == bc.g_prime and not a.is_empty:
                run.hit("nbhd", a.neighborhood == bc.neighborhood, (f, i))


# ---------------------------------------------------------------- triple cuts


def _triples(run: _Run) -> None:
    g = run.g
    cset = enumerate_cutsets(g)
    for f in triple_cuts(g):
        o = f.neighborhood
        inner = triple_cut_inner_sets(g, f)
        for c in cset:
            if c <= f.vertex_set:
                run.hit("ll11", c in inner or c in f.boundaries, (f.line, c))
            if c <= o:
                ok = c in f.trivials or any(c <= mx.span for mx in f.extended)
                run.hit("ll11", ok, (f.line, c))
        for i in range(3):
            a = f.parts[i].vertices
            run.hit("nbhd", f.inner_parts[i] | f.cuts[i].span == a and f.inner_parts_ext[i] | f.extended[i].span == a, (f.line, i))
        for t in sorted(cset, key=sort_key):
            if t <= o or not splits(g, t, o):
                continue
            ok = False
            if len(parts_of(g, t)) == 2:
                for i in range(3):
                    ai = f.parts[i]
                    if not t <= ai.vertices:
                        continue
                    for xi in ai.interior:
                        if not _isolates(g, t, xi, o):
                            continue
                        rest = t - f.inner_parts_ext[i]
                        if len(rest) == 1:
                            (x,) = rest
                            ok = ok or (x in f.line and edge(x, xi) in f.extended[i].edge_set)
            run.hit("ll35", ok, (f.line, t))


# ---------------------------------------------------------------- complexes


def _complexes(run: _Run) -> None:
    g = run.g
    cset = enumerate_cutsets(g)
    cxs = classify_complexes(g)
    bigs = [c for c in cxs if c.kind.is_big]
    in_big = frozenset().union(*(c.member_set for c in bigs)) if bigs else frozenset()
    big_bounds = {b: c for c in bigs for b in c.boundaries}
    pairs = {c.member_set for c in cxs if c.kind is ComplexKind.SMALL_CUT}
    for t in sorted(cset, key=sort_key):
        if is_single(g, t) or t in in_big:
            continue
        comps = _comps(g, t)
        where = {v: k for k, c in enumerate(comps) for v in c}
        opts = [(x, y) for x in sorted(t) for y in sorted(_nbrs(g, x) - t) if _complementable(g, t, x, y)]
        deps = [s for s in cset if s != t and dependent(g, s, t)]
        run.hit("mk_pre", len(comps) == 2 and all(len(parts_of(g, s)) == 2 and not s & t for s in deps), t)
        for s in deps:
            small = [x.vertices for x in decompose(g, [s, t]) if x.is_small]
            ok = len(small) == 1
            if ok:
                (u,) = small[0] & t
                (v,) = small[0] & s
                ok = is_singular_edge(g, edge(u, v)) and _complementable(g, t, u, v) and _complementable(g, s, v, u)
            run.hit("lmk1", ok, (t, s))
        if opts:
            ok = len({where[y] for _, y in opts}) == 1 and len({x for x, _ in opts}) == len(opts)
            ok = ok and make_cut(g, t - {x for x, _ in opts}, opts) is not None
            run.hit("lmk1", ok, (t, opts))
        first = _is_trivial_set(g, t)
        second = False
        if t in big_bounds:
            c = big_bounds[t]
            for x in parts_of(g, t):
                if all(mm <= x.vertices for mm in c.members) and all(y in x.vertices for _, y in opts):
                    second = True
        third = False
        if len(opts) == 1:
            x, x1 = opts[0]
            third = is_singular_edge(g, edge(x, x1))
            third = third and all(x1 in s and separates(g, s, {x}, t - {x}) for s in deps)
        run.hit("lmk2", first or second or third, t)
        if t not in big_bounds and len(opts) == 1:
            x, x1 = opts[0]
            t1 = (t - {x}) | {x1}
            ok = t1 in cset and (is_single(g, t1) or frozenset({t, t1}) in pairs)
            run.hit("lmk3", ok, (t, t1))
    for c in cxs:
        if c.kind is ComplexKind.SINGLE:
            (t,) = c.members
            opts = complements(g, t)
            ok = is_single(g, t) or _is_trivial_set(g, t) or t in big_bounds
            if not ok and len(opts) == 1:
                other = next(sd.boundary for sd in sides(g, opts[0]) if sd.boundary != t)
                ok = other in cset and is_single(g, other)
            run.hit("lmk3c1", ok, c)
        if c.kind is ComplexKind.SMALL_CUT:
            for t in c.members:
                ok = not _is_trivial_set(g, t) and not is_single(g, t) and t not in big_bounds
                run.hit("rmk1", ok, (c, t))
        if c.kind is ComplexKind.BIG_CUT:
            m = c.source
            for sd in sides(g, m):
                for a in complex_parts(g, c):
                    if a.vertices == sd.vertices and not a.is_empty:
                        run.hit("nbhd", a.neighborhood == sd.neighborhood, (c, sd.vertices))
        _check_parts(run, c.members, complex_parts(g, c), c)
        for r in sorted(cset - c.member_set, key=sort_key):
            run.hit("belongs", len(belongs_candidates(g, c, r)) == 1, (c, r))


# ---------------------------------------------------------------- hypertree


def _hypertree(run: _Run) -> None:
    g = run.g
    cset = enumerate_cutsets(g)
    h = build_hypertree(g)
    cxs = h.nodes
    n = len(cxs)
    parts = {i: complex_parts(g, c) for i, c in enumerate(cxs)}

    def hood(i: int, vs) -> frozenset[int]:
        return next(a.neighborhood for a in parts[i] if a.vertices == vs)

    for i, j in permutations(range(n), 2):
        ci, cj = cxs[i], cxs[j]
        rest = [t for t in cj.members if t not in ci.member_set]
        if not rest:
            continue
        got = {belongs(g, ci, t) for t in rest}
        ok = len(got) == 1 and cj.vertex_set <= next(iter(got)).neighborhood
        run.hit("lts1", ok, (ci, cj))
    for a, b, c in permutations(range(n), 3):
        ok = not (h.table[(a, b)] != h.table[(a, c)] and h.table[(b, a)] != h.table[(b, c)])
        run.hit("tt", ok, (a, b, c))
    # the cycle oracle is exponential in clique size, so it only runs on modest hyperedges
    modest = n <= 16 and all(len(e) <= CYCLE_ORACLE_MAX_EDGE for e in h.hyperedges)
    ok = is_hypertree(h) and (not modest or oracle_is_hypertree(n, h.hyperedges))
    ok = ok and all(hypertree_components(h, i) == separation_classes(h, i) for i in range(n))
    run.hit("ts2", ok, [sorted(e) for e in h.hyperedges])
    for i, j in permutations(range(n), 2):
        aij, aji = h.table[(i, j)], h.table[(j, i)]
        if aij is None or aji is None:
            continue
        oa = hood(i, aij)
        for b in parts[j]:
            if b.is_empty or b.vertices == aji:
                continue
            ok = b.neighborhood <= oa
            if not b.vertices <= aij:
                ok = ok and len(cxs[j].members) == 1 and splits(g, cxs[j].members[0], cxs[i].vertex_set)
            run.hit("ls1", ok, (i, j, b.vertices))
    for i, c in enumerate(cxs):
        vc = c.vertex_set
        for t in sorted(cset - c.member_set, key=sort_key):
            if not splits(g, t, vc):
                continue
            a = belongs(g, c, t)
            r = a.boundary
            ok = r in cset and dependent(g, r, t)
            cut_off = [v for v in vc - t if _isolates(g, t, v, vc)]
            xs = [v for v in cut_off if v in r]
            ok = ok and len(xs) == 1
            y = t - a.vertices
            if ok and len(y) == 1 and len(t & a.vertices) == 2:
                (x,), (yv,) = xs, y
                ok = _complementable(g, r, x, yv) and _complementable(g, t, yv, x)
            else:
                ok = False
            run.hit("lts00", ok, (c, t))
            single = [k for k, d in enumerate(cxs) if d.members == (t,)]
            if ok and single:
                k = single[0]
                far = [x.vertices for x in parts_of(g, r) if not x.interior & a.interior]
                pt = [x.vertices for x in parts_of(g, t)]
                good = len(parts_of(g, r)) == 2 and len(pt) == 2 and len(far) == 1
                found = False
                if good:
                    for bb, bbar in (pt, pt[::-1]):
                        hb = next(x.neighborhood for x in parts[k] if x.vertices == bbar)
                        c1 = len(far[0] & bbar) == 2
                        c2 = hb == bbar and bbar <= a.neighborhood
                        c3 = all(belongs(g, cxs[k], s).vertices == bb for s in c.members)
                        found = found or (c1 and c2 and c3)
                run.hit("lts00c1", good and found, (c, t))


# ---------------------------------------------------------------- driver


def verify_graph(g: Graph) -> VerificationReport:
    """Run every check on ``g``; a precondition failure raises AnalysisError."""
    require_analyzable(g)
    run = _Run(g)
    run.section("l1c1", _pairs)
    run.section("lds1", _lds1)
    run.section("tr5", _tr5)
    run.section("l3v0", _l3v0)
    run.section("l31", _cuts)
    run.section("lmk0", _lmk0)
    run.section("ll34", _ll34)
    for f in maximal_flowers(g):
        run.section("ll36", _flower, f)
    for f in nondegenerate_flowers(g):
        run.section("ll39", _nondegenerate, f)
    run.section("ll35", _triples)
    run.section("lmk1", _complexes)
    run.section("lts1", _hypertree)
    return run.report
