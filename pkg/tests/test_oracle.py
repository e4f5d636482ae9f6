from itertools import combinations

import pytest
from hypothesis import given, settings

from conftest import S, graphs, name_sets
from tricut.complexes import classify_complexes
from tricut.cutsets import decompose, enumerate_cutsets, sort_key
from tricut.errors import InputError
from tricut.oracle import oracle_is_hypertree, oracle_parts


def same(a, b):
    return [(p.vertices, p.boundary) for p in a] == [(p.vertices, p.boundary) for p in b]


def test_wheel_pair(fx):
    g = fx("WHEEL6")
    fam = [g.vset("p", "q1", "q3"), g.vset("p", "q2", "q4")]
    got = oracle_parts(g, fam)
    assert name_sets(g, (p.vertices for p in got)) == S("p q1 q2", "p q2 q3", "p q3 q4", "p q4 q5 q6 q1")
    assert same(got, decompose(g, fam))


def test_empty_family(fx):
    g = fx("DK4")
    (p,) = oracle_parts(g, [])
    assert p.vertices == frozenset(g.vertices)


def test_y3_full_family(fx):
    g = fx("Y3")
    fam = enumerate_cutsets(g)
    got = oracle_parts(g, fam)
    assert len(got) == 12
    assert same(got, decompose(g, fam))


def test_rejects_non_cutset(fx):
    g = fx("WHEEL6")
    with pytest.raises(InputError):
        oracle_parts(g, [g.vset("p", "q1", "q2")])


@pytest.mark.parametrize("name", ["WHEEL6", "SING1", "FLOWER1", "DK4", "Y3", "LADDER"])
def test_complex_members_match(fx, name):
    g = fx(name)
    for c in classify_complexes(g):
        assert same(oracle_parts(g, c.members), decompose(g, c.members))


def test_empty_parts_need_not_be_connected(fx):
    # {u, v, p} with only uv an edge; the definition itself produces it
    g = fx("Y3")
    fam = [frozenset({0, 1, 5}), frozenset({0, 2, 4})]
    got = oracle_parts(g, fam)
    assert same(got, decompose(g, fam))
    empty = [p for p in got if not p.interior]
    assert frozenset({0, 1, 4}) in [p.vertices for p in empty]
    assert [g.has_edge(a, b) for a, b in combinations((0, 1, 4), 2)] == [False, False, True]


def test_cycle_oracle_examples():
    assert oracle_is_hypertree(3, [frozenset({0, 1}), frozenset({1, 2})])
    assert not oracle_is_hypertree(3, [frozenset({0, 1}), frozenset({1, 2}), frozenset({0, 2})])


@settings(max_examples=20, deadline=None)
@given(graphs)
def test_decompose_matches_oracle_on_pairs(g):
    cs = sorted(enumerate_cutsets(g), key=sort_key)[:12]
    for fam in combinations(cs, 2):
        assert same(oracle_parts(g, fam), decompose(g, fam))
