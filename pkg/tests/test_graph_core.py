import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, names
from tricut.errors import InputError
from tricut.graph_core import Graph, components_after_removal, edge, is_triconnected, neighbors
from tricut.generators import gen_wheel


def test_neighbors_of_hub_and_rim(fx):
    g = fx("WHEEL6")
    assert names(g, neighbors(g, g.index_of("p"))) == {f"q{i}" for i in range(1, 7)}
    assert names(g, neighbors(g, g.index_of("q1"))) == {"p", "q2", "q6"}


def test_components_after_vertex_removal(fx):
    g = fx("WHEEL6")
    comps = components_after_removal(g, g.vset("p", "q1", "q3"))
    assert [names(g, c) for c in comps] == [{"q2"}, {"q4", "q5", "q6"}]


def test_components_after_mixed_removal(fx):
    g = fx("WHEEL6")
    q1, q2 = g.index_of("q1"), g.index_of("q2")
    comps = components_after_removal(g, g.vset("p", "q4"), [(q1, q2)])
    assert sorted(map(frozenset, (names(g, c) for c in comps)), key=len, reverse=True) == [
        {"q1", "q6", "q5"},
        {"q2", "q3"},
    ]


def test_components_nothing_removed(fx):
    g = fx("DK4")
    assert components_after_removal(g, ()) == [frozenset(g.vertices)]


def test_wheel_is_triconnected_until_a_rim_edge_goes(fx):
    g = fx("WHEEL6")
    assert is_triconnected(g)
    q1, q2 = g.index_of("q1"), g.index_of("q2")
    cut = Graph(g.n, [e for e in g.edges if e != edge(q1, q2)], g.labels)
    assert not is_triconnected(cut)


def test_graph_rejects_bad_input():
    with pytest.raises(InputError):
        Graph(3, [(0, 0)])
    with pytest.raises(InputError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(InputError):
        Graph(3, [(0, 3)])


def test_degree_bound_on_triconnected():
    g = gen_wheel(8)
    assert all(g.degree(v) >= 3 for v in g.vertices)


@settings(max_examples=40, deadline=None)
@given(graphs)
def test_triconnected_matches_networkx(g):
    h = nx.Graph(list(g.edges))
    assert is_triconnected(g) == (nx.node_connectivity(h) >= 3)
    assert all(g.degree(v) >= 3 for v in g.vertices)


@settings(max_examples=30, deadline=None)
@given(graphs)
def test_component_partition_matches_networkx(g):
    removed = frozenset(list(g.vertices)[::3])
    h = nx.Graph(list(g.edges))
    h.remove_nodes_from(removed)
    want = sorted(map(frozenset, nx.connected_components(h)), key=min)
    assert components_after_removal(g, removed) == want
