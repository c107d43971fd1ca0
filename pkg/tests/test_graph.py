import pytest
from hypothesis import given

from arbor.graph import Graph, norm_edge
from conftest import graphs, to_nx


def test_edges_normalised_and_deduplicated():
    G = Graph(3, [(2, 1), (1, 2), (3, 2)])
    assert G.edges == ((1, 2), (2, 3))
    assert G.m == 2


@pytest.mark.parametrize("edges", [[(1, 1)], [(0, 1)], [(1, 4)]])
def test_rejects_loops_and_out_of_range(edges):
    with pytest.raises(ValueError):
        Graph(3, edges)


def test_norm_edge():
    assert norm_edge(5, 2) == (2, 5) == norm_edge(2, 5)


@given(graphs())
def test_adjacency_consistent_with_edges(G):
    for u, v in G.edges:
        assert u < v and v in G.neighbors(u) and u in G.neighbors(v)
    assert sum(G.degree(v) for v in G.vertices) == 2 * G.m
    for v in G.vertices:
        assert v not in G.neighbors(v)
        mask = G.adj_masks[v]
        assert {w for w in G.vertices if mask >> w & 1} == set(G.neighbors(v))


@given(graphs())
def test_components_and_bipartite_match_networkx(G):
    import networkx as nx

    g = to_nx(G)
    assert sorted(map(tuple, G.components())) == sorted(tuple(sorted(c)) for c in nx.connected_components(g))
    assert G.is_bipartite() == nx.is_bipartite(g)


@given(graphs())
def test_subgraph_relabels(G):
    keep = [v for v in G.vertices if v % 2]
    H, old = G.subgraph(keep)
    assert old == keep
    assert {(old[u - 1], old[v - 1]) for u, v in H.edges} == G.induced_edges(keep)


def test_value_semantics():
    assert Graph(3, [(1, 2)]) == Graph(3, [(2, 1)])
    assert hash(Graph(3, [(1, 2)])) == hash(Graph(3, [(2, 1)]))
    assert Graph(3, [(1, 2)]) != Graph(4, [(1, 2)])
