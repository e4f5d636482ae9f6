"""Acceptance criteria, one test and one PASS/FAIL line each."""

import os
import subprocess
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations

import networkx as nx
import pytest

from conftest import ACCEPTANCE_LINES
from tricut.complexes import ComplexKind, classify_complexes, complex_parts
from tricut.cuts import is_singular_edge
from tricut.cutsets import decompose, dependence_components, dependent, enumerate_cutsets, sort_key
from tricut.errors import IntegrityError
from tricut.fixtures import fixture_names, load_fixture
from tricut.flowers import classify_flower, flower_neighborhood, generate_flower, is_maximal_flower, maximal_flowers
from tricut.generators import corpus_params, gen_random_triconnected
from tricut.hypertree import build_hypertree, check_separation_hypothesis, hypertree_components, is_hypertree, separation_classes
from tricut.oracle import oracle_parts
from tricut.verify import REQUIRED_IDS, VerificationReport, verify_graph

JOBS = min(8, os.cpu_count() or 1)


def record(n, title, failures, extra=""):
    ok = not failures
    line = f"{'PASS' if ok else 'FAIL'} [{n}] {title}" + (f" ({extra})" if extra else "")
    if failures:
        line += f"; {len(failures)} failures, first: {failures[0]}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def fresh_corpus():
    return [gen_random_triconnected(n, s) for n, s in corpus_params()]


# ---------------------------------------------------------------- 1


def brute_cutsets(g):
    h = nx.Graph(list(g.edges))
    out = set()
    for t in combinations(g.vertices, 3):
        k = h.copy()
        k.remove_nodes_from(t)
        if not nx.is_connected(k):
            out.add(frozenset(t))
    return out


def lab(g, vs):
    return frozenset(g.label(v) for v in vs)


def cyc(a, b):
    return len(a) == len(b) and any(a == b[i:] + b[:i] or a == (b[i:] + b[:i])[::-1] for i in range(len(b)))


def path_middle(g, h):
    """The middle node of a 3-node path hypertree, or None."""
    sec = nx.Graph(list(h.section_edges()))
    if len(h.nodes) != 3 or sec.number_of_edges() != 2 or not nx.is_tree(sec):
        return None
    (mid,) = [v for v, d in sec.degree if d == 2]
    return h.nodes[mid]


def census_failures():
    bad = []

    def want(name, cond, what):
        if not cond:
            bad.append(f"{name}: {what}")

    g = load_fixture("WHEEL6")
    cs = enumerate_cutsets(g)
    cx = classify_complexes(g)
    want("WHEEL6", cs == brute_cutsets(g) and len(cs) == 9, "9 cutsets")
    want("WHEEL6", len(cx) == 1 and cx[0].kind is ComplexKind.WHEEL and cx[0].member_set == cs, "one wheel complex")
    want("WHEEL6", build_hypertree(g).hyperedges == (), "no hyperedges")

    g = load_fixture("SING1")
    fl = [f for f in maximal_flowers(g) if g.label(f.center) == "p"]
    want("SING1", len(fl) == 1, "flower at p")
    if fl:
        f = fl[0]
        flags = classify_flower(g, f)
        want("SING1", cyc([g.label(q) for q in f.petals], ["q1", "q2", "q3", "q4"]), "petals q1..q4")
        want("SING1", is_maximal_flower(g, f) and flags.singular and not flags.degenerate, "maximal singular nondegenerate")
        want("SING1", lab(g, flower_neighborhood(g, f).center_neighborhood) == {"u", "v", "q3"}, "T(p)")
    (c,) = [c for c in classify_complexes(g) if c.kind is ComplexKind.FLOWER] or [None]
    if c is None:
        bad.append("SING1: no flower complex")
    else:
        parts = oracle_parts(g, c.members)
        listed = {frozenset(x.split()) for x in ("q1 u q2", "q4 v q1", "q2 q3", "q3 q4", "p u", "p v", "p q3")}
        want("SING1", {lab(g, p.vertices) for p in parts} == listed, "complex parts")
        want("SING1", [p.vertices for p in parts] == [p.vertices for p in complex_parts(g, c)], "parts agree")

    g = load_fixture("FLOWER1")
    cs = enumerate_cutsets(g)
    want("FLOWER1", cs == brute_cutsets(g) and len(cs) == 7, "7 cutsets")
    fl = [f for f in maximal_flowers(g) if g.label(f.center) == "p"]
    want("FLOWER1", len(fl) == 1 and cyc([g.label(q) for q in fl[0].petals], ["q1", "q2", "q3", "y", "q4"]), "flower")
    want("FLOWER1", len(classify_complexes(g)) == 3, "3 complexes")
    mid = path_middle(g, build_hypertree(g))
    want("FLOWER1", mid is not None and [lab(g, m) for m in mid.members] == [{"p", "q1", "q2"}], "path through {p,q1,q2}")

    g = load_fixture("DK4")
    cs = enumerate_cutsets(g)
    want("DK4", cs == brute_cutsets(g) and len(cs) == 8, "8 cutsets")
    kinds = sorted((c.kind.value, len(c.members)) for c in classify_complexes(g))
    want("DK4", kinds == [("BigCut", 6), ("Single", 1), ("Single", 1)], "BigCut(6) + 2 Single")
    mid = path_middle(g, build_hypertree(g))
    want("DK4", mid is not None and mid.kind is ComplexKind.BIG_CUT, "path through the big cut")

    g = load_fixture("Y3")
    cs = enumerate_cutsets(g)
    cx = classify_complexes(g)
    want("Y3", cs == brute_cutsets(g) and len(cs) == 22, "22 cutsets")
    want("Y3", len(cx) == 1 and cx[0].kind is ComplexKind.TRIPLE, "one triple complex")
    parts = oracle_parts(g, cs)
    small = [p for p in parts if len(p.vertices) == 2]
    tri = {lab(g, p.vertices) for p in parts if len(p.vertices) != 2}
    want("Y3", len(parts) == 12 and len(small) == 9, "12 parts, 9 small")
    want("Y3", tri == {frozenset({f"u{i}", f"v{i}", f"w{i}"}) for i in (1, 2, 3)}, "3 triangles")
    if cx:
        want("Y3", [p.vertices for p in parts] == [p.vertices for p in complex_parts(g, cx[0])], "parts agree")
    want("Y3", len(build_hypertree(g).nodes) == 1, "single node")
    return bad


def test_criterion_1_fixture_censuses():
    t = time.perf_counter()
    bad = census_failures()
    dt = time.perf_counter() - t
    if dt >= 5:
        bad.append(f"took {dt:.1f} s")
    record(1, "fixture censuses", bad, f"{dt:.2f} s")


# ---------------------------------------------------------------- 2


def singular_counterexamples(g):
    cs = sorted(enumerate_cutsets(g), key=sort_key)
    small = set()
    for s, t in combinations(cs, 2):
        if dependent(g, s, t):
            small.update(p.vertices for p in decompose(g, [s, t]) if len(p.vertices) == 2)
    return [(g.edges, e) for e in g.edges if is_singular_edge(g, e) != (frozenset(e) in small)]


def test_criterion_2_singular_edges():
    t = time.perf_counter()
    bad = [x for g in fresh_corpus() for x in singular_counterexamples(g)]
    dt = time.perf_counter() - t
    if dt >= 60:
        bad.append(f"took {dt:.1f} s")
    record(2, "singular edge equivalence on 200 graphs", bad, f"{dt:.1f} s")


# ---------------------------------------------------------------- 3


def component_counterexamples(g):
    out = []
    for comp in dependence_components(g, enumerate_cutsets(g)):
        no_small = not any(len(p.vertices) == 2 for p in decompose(g, comp))
        flower = len(comp) == 1 or generate_flower(g, comp) is not None
        if no_small != flower:
            out.append(sorted(map(sort_key, comp)))
    return out


def test_criterion_3_components_and_flowers(corpus):
    bad = [x for g in corpus for x in component_counterexamples(g)]
    n = sum(len(dependence_components(g, enumerate_cutsets(g))) for g in corpus)
    record(3, "dependence components: no small part iff singleton or flower", bad, f"{n} components")


# ---------------------------------------------------------------- 4


def hypertree_failures(g):
    h = build_hypertree(g)
    out = []
    if len(h.nodes) > 1 and not is_hypertree(h):
        out.append("not a hypertree")
    try:
        check_separation_hypothesis(h.table, len(h.nodes))
    except IntegrityError as e:
        out.append(str(e))
    for i in range(len(h.nodes)):
        if hypertree_components(h, i) != separation_classes(h, i):
            out.append(f"node {i}: components differ from classes")
    return out


def test_criterion_4_hypertree(corpus):
    bad = [(g.edges, x) for g in corpus for x in hypertree_failures(g)]
    n = sum(len(build_hypertree(g).nodes) for g in corpus)
    record(4, "hypertree, separation hypothesis, removal classes", bad, f"{n} nodes")


# ---------------------------------------------------------------- 5


def _shape(parts):
    return [(p.vertices, p.boundary) for p in parts]


def oracle_mismatches(args):
    n, seed = args
    g = gen_random_triconnected(n, seed)
    cs = sorted(enumerate_cutsets(g), key=sort_key)
    if len(cs) > 40:
        return 0, []
    bad, checked = [], 0
    for k in (1, 2, 3):
        for fam in combinations(cs, k):
            checked += 1
            if _shape(oracle_parts(g, fam)) != _shape(decompose(g, fam)):
                bad.append((n, seed, [sorted(s) for s in fam]))
    return checked, bad


def test_criterion_5_oracle_equivalence():
    with ProcessPoolExecutor(JOBS) as pool:
        results = list(pool.map(oracle_mismatches, corpus_params()))
    checked = sum(c for c, _ in results)
    bad = [x for _, b in results for x in b]
    for name in fixture_names():
        g = load_fixture(name)
        for c in classify_complexes(g):
            checked += 1
            if _shape(oracle_parts(g, c.members)) != _shape(decompose(g, c.members)):
                bad.append((name, c.kind.value))
    record(5, "decompose equals the definitional oracle", bad, f"{checked} families")


# ---------------------------------------------------------------- 6


def _verify_params(args):
    return verify_graph(gen_random_triconnected(*args))


def test_criterion_6_invariant_suite():
    total = VerificationReport()
    for name in fixture_names():
        total.merge(verify_graph(load_fixture(name)))
    with ProcessPoolExecutor(JOBS) as pool:
        for r in pool.map(_verify_params, corpus_params()):
            total.merge(r)
    bad = [f"{r.lemma}: {r.violations} violations, e.g. {r.witnesses[:1]}" for r in total.rows() if r.violations]
    bad += [f"{i}: never exercised" for i in REQUIRED_IDS if i not in total.results or total[i].instances == 0]
    checks = sum(r.instances for r in total.results.values())
    record(6, "invariant suite with coverage", bad, f"{checks} checks over {len(total.results)} ids")


# ---------------------------------------------------------------- 7


@pytest.fixture(scope="module")
def fixture_files(tmp_path_factory):
    d = tmp_path_factory.mktemp("fixtures")
    out = {}
    for name in fixture_names():
        p = d / f"{name}.txt"
        subprocess.run([sys.executable, "-m", "tricut", "fixtures", "--emit", name, "-o", str(p)], check=True)
        out[name] = p
    return out


def test_criterion_7_determinism(fixture_files):
    bad = []
    for name, path in fixture_files.items():
        runs = [
            subprocess.run([sys.executable, "-m", "tricut", "decompose", str(path), "--json"], capture_output=True, check=True).stdout
            for _ in range(3)
        ]
        if len(set(runs)) != 1:
            bad.append(name)
    record(7, "decompose --json byte-identical over 3 runs", bad, f"{len(fixture_files)} fixtures")
