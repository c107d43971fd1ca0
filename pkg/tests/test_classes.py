import networkx as nx
import pytest
from hypothesis import given, settings

from arbor.classes import SUBCLASS_EDGES, ForestClass as FC, superclasses, validate_edge_set
from arbor.generators import complete, complete_bipartite
from arbor.graph import Graph
from conftest import graph_and_subset, to_nx


def naive_valid(G: Graph, S, cls: FC) -> bool:
    """Direct reading of the class definitions on networkx graphs."""
    if not S:
        return True
    H = nx.Graph(list(S))
    host = to_nx(G)
    if not nx.is_forest(H):
        return False
    comps = [H.subgraph(c) for c in nx.connected_components(H)]
    if cls in (FC.MATCHING, FC.INDUCED_MATCHING) and max(d for _, d in H.degree()) > 1:
        return False
    if cls in (FC.STAR_FOREST, FC.WEAK_INDUCED_STAR_FOREST, FC.INDUCED_STAR_FOREST):
        if any(sum(1 for _, d in c.degree() if d >= 2) > 1 for c in comps):
            return False
    if cls in (FC.INDUCED_FOREST, FC.INDUCED_STAR_FOREST, FC.INDUCED_MATCHING):
        return host.subgraph(H.nodes()).number_of_edges() == H.number_of_edges()
    if cls in (FC.WEAK_INDUCED_FOREST, FC.WEAK_INDUCED_STAR_FOREST):
        return all(host.subgraph(c.nodes()).number_of_edges() == c.number_of_edges() for c in comps)
    return True


@settings(max_examples=300)
@given(graph_and_subset())
def test_validator_matches_definitions(gs):
    G, S = gs
    for cls in FC:
        assert validate_edge_set(G, S, cls) == naive_valid(G, S, cls), cls


@settings(max_examples=300)
@given(graph_and_subset())
def test_lattice_monotone(gs):
    G, S = gs
    for small, big in SUBCLASS_EDGES:
        if validate_edge_set(G, S, small):
            assert validate_edge_set(G, S, big), (small, big)


def test_lattice_chains():
    assert superclasses(FC.INDUCED_MATCHING) == set(FC)
    assert superclasses(FC.FOREST) == {FC.FOREST}
    assert FC.STAR_FOREST in superclasses(FC.MATCHING)
    assert FC.INDUCED_FOREST not in superclasses(FC.MATCHING)


def test_single_edge_in_triangle_is_induced_forest():
    assert validate_edge_set(complete(3), [(1, 2)], FC.INDUCED_FOREST)


def test_weak_induced_forests_of_complete_graph_are_matchings():
    K4 = complete(4)
    assert validate_edge_set(K4, [(1, 2), (3, 4)], FC.WEAK_INDUCED_FOREST)
    assert not validate_edge_set(K4, [(1, 2), (1, 3)], FC.WEAK_INDUCED_FOREST)


def test_star_at_left_vertex_of_bipartite_graph_is_induced():
    K = complete_bipartite(3, 4)
    assert validate_edge_set(K, [(1, b) for b in range(4, 8)], FC.INDUCED_FOREST)


def test_empty_set_valid_and_foreign_edge_rejected():
    G = complete(3)
    assert all(validate_edge_set(G, [], c) for c in FC)
    with pytest.raises(ValueError):
        validate_edge_set(Graph(3, [(1, 2)]), [(2, 3)], FC.FOREST)


@pytest.mark.parametrize("name", ["if", "induced-forest", "INDUCED_FOREST", " If "])
def test_parse_names(name):
    assert FC.parse(name) is FC.INDUCED_FOREST


def test_parse_unknown():
    with pytest.raises(ValueError):
        FC.parse("tree")


def test_downward_closure_flags():
    # Dropping the middle edge of an induced path splits it into a non-induced pair.
    P = Graph(4, [(1, 2), (2, 3), (3, 4)])
    assert validate_edge_set(P, P.edges, FC.INDUCED_FOREST)
    assert not validate_edge_set(P, [(1, 2), (3, 4)], FC.INDUCED_FOREST)
    assert not FC.INDUCED_FOREST.downward_closed
    assert all(c.downward_closed for c in FC if c is not FC.INDUCED_FOREST)


@settings(max_examples=300)
@given(graph_and_subset())
def test_downward_closed_classes_keep_validity_on_subsets(gs):
    G, S = gs
    for cls in FC:
        if cls.downward_closed and validate_edge_set(G, S, cls):
            for i in range(len(S)):
                assert validate_edge_set(G, S[:i] + S[i + 1:], cls), cls
