from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import S, graphs, name_sets, names
from tricut.cutsets import (
    decompose,
    dependence_components,
    dependent,
    enumerate_cutsets,
    parts_of,
    require_analyzable,
    separates,
    splits,
)
from tricut.errors import AnalysisError
from tricut.graph_core import Graph


def brute_cutsets(g):
    h = nx.Graph(list(g.edges))
    out = set()
    for t in combinations(g.vertices, 3):
        k = h.copy()
        k.remove_nodes_from(t)
        if not nx.is_connected(k):
            out.add(frozenset(t))
    return out


@pytest.mark.parametrize("name,count", [("WHEEL6", 9), ("Y3", 22), ("DK4", 8), ("FLOWER1", 7), ("SING1", 7)])
def test_census_matches_brute_force(fx, name, count):
    g = fx(name)
    got = enumerate_cutsets(g)
    assert len(got) == count
    assert got == brute_cutsets(g)


def test_wheel_cutsets_are_hub_plus_far_rim_pairs(fx):
    g = fx("WHEEL6")
    want = {frozenset({"p", f"q{i}", f"q{j}"}) for i in range(1, 7) for j in range(i + 2, 7) if (i, j) != (1, 6)}
    assert name_sets(g, enumerate_cutsets(g)) == want


def test_dk4_census(fx):
    g = fx("DK4")
    got = name_sets(g, enumerate_cutsets(g))
    assert S("a1 a2 a3", "b1 b2 b3") <= got
    mixed = got - S("a1 a2 a3", "b1 b2 b3")
    assert len(mixed) == 6
    assert all({w[1] for w in t} == {"1", "2", "3"} for t in mixed)


def test_too_small_or_not_triconnected_rejected():
    k4 = Graph(4, list(combinations(range(4), 2)))
    with pytest.raises(AnalysisError):
        require_analyzable(k4)
    path = Graph(7, [(i, i + 1) for i in range(6)])
    with pytest.raises(AnalysisError):
        enumerate_cutsets(path)


def test_splits_and_separates(fx):
    g = fx("WHEEL6")
    v = g.vset
    assert splits(g, v("p", "q1", "q3"), v("q2", "q4"))
    assert not splits(g, v("p", "q1", "q4"), v("q1", "q3"))
    assert separates(g, v("p", "q1", "q3"), v("q2"), v("q5"))
    assert not separates(g, v("p", "q1", "q3"), v("q4"), v("q5"))


def test_parts_of(fx):
    g = fx("WHEEL6")
    assert [names(g, p.vertices) for p in parts_of(g, g.vset("p", "q1", "q3"))] == [
        {"p", "q1", "q3", "q4", "q5", "q6"},
        {"p", "q1", "q2", "q3"},
    ]
    y = fx("Y3")
    ps = parts_of(y, y.vset("a", "b", "c"))
    assert name_sets(y, (p.vertices for p in ps)) == {
        frozenset({"a", "b", "c", f"u{i}", f"v{i}", f"w{i}"}) for i in (1, 2, 3)
    }
    f = fx("FLOWER1")
    assert name_sets(f, (p.vertices for p in parts_of(f, f.vset("p", "q1", "q2")))) == S(
        "p q1 q2 x1 x2", "p q1 q2 q3 y q4"
    )


def test_decompose_wheel_pair(fx):
    g = fx("WHEEL6")
    fam = [g.vset("p", "q1", "q3"), g.vset("p", "q2", "q4")]
    assert name_sets(g, (p.vertices for p in decompose(g, fam))) == S(
        "p q1 q2", "p q2 q3", "p q3 q4", "p q4 q5 q6 q1"
    )


def test_decompose_empty_family(fx):
    g = fx("DK4")
    (only,) = decompose(g, [])
    assert only.vertices == frozenset(g.vertices) and not only.boundary


def test_decompose_y3_full_family(fx):
    g = fx("Y3")
    ps = decompose(g, enumerate_cutsets(g))
    assert len(ps) == 12
    assert sum(p.is_small for p in ps) == 9
    triangles = {frozenset({f"u{i}", f"v{i}", f"w{i}"}) for i in (1, 2, 3)}
    assert name_sets(g, (p.vertices for p in ps if not p.is_small)) == triangles


def test_parts_sorted_by_size_then_minimum(fx):
    g = fx("WHEEL6")
    ps = decompose(g, enumerate_cutsets(g))
    keys = [(-len(p.vertices), min(p.vertices)) for p in ps]
    assert keys == sorted(keys)


def test_dependence_examples(fx):
    g = fx("WHEEL6")
    v = g.vset
    assert dependent(g, v("p", "q1", "q3"), v("p", "q2", "q4"))
    assert not dependent(g, v("p", "q1", "q3"), v("p", "q1", "q4"))
    assert len(dependence_components(g, enumerate_cutsets(g))) == 1


def test_dk4_dependence_components(fx):
    g = fx("DK4")
    comps = dependence_components(g, enumerate_cutsets(g))
    assert sorted(len(c) for c in comps) == [1, 1, 6]
    singles = {next(iter(name_sets(g, c))) for c in comps if len(c) == 1}
    assert singles == S("a1 a2 a3", "b1 b2 b3")


def test_independent_pair_gives_two_components(fx):
    g = fx("DK4")
    fam = [g.vset("a1", "a2", "a3"), g.vset("b1", "b2", "b3")]
    assert len(dependence_components(g, fam)) == 2


@settings(max_examples=25, deadline=None)
@given(graphs)
def test_cutset_census_matches_brute_force(g):
    assert enumerate_cutsets(g) == brute_cutsets(g)


@settings(max_examples=25, deadline=None)
@given(graphs)
def test_dependence_is_symmetric_and_mutual_splitting(g):
    cs = sorted(enumerate_cutsets(g), key=sorted)
    for s, t in combinations(cs, 2):
        d = dependent(g, s, t)
        assert d == dependent(g, t, s)
        assert d == splits(g, s, t) == splits(g, t, s)
        if d:
            assert len(s & t) <= 1
            assert len(parts_of(g, s)) <= 3 and len(parts_of(g, t)) <= 3
