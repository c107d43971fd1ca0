from math import comb

import networkx as nx
import pytest

from arbor.generators import (
    FAMILIES, complete, complete_bipartite, cycle, degenerate_lb_graph, double_wheel, gk, path,
    path_power, planar_ia_gadget, prop2_gadget, random_degenerate, subdivide_once,
)
from arbor.structure import chordality, clique_number, degeneracy, treewidth_chordal
from conftest import to_nx


def test_basic_counts():
    assert (complete(4).n, complete(4).m) == (4, 6)
    K = complete_bipartite(3, 4)
    assert K.m == 12 and all(K.has_edge(a, b) for a in (1, 2, 3) for b in range(4, 8))
    assert cycle(5).m == 5 and path(5).m == 4
    for bad in (lambda: cycle(2), lambda: complete(0), lambda: path_power(1, 1)):
        with pytest.raises(ValueError):
            bad()


@pytest.mark.parametrize("n,p", [(n, p) for n in range(2, 14) for p in range(1, 5)])
def test_path_power_counts(n, p):
    G = path_power(n, p)
    assert G.m == sum(max(n - j, 0) for j in range(1, p + 1))
    assert all(abs(u - v) <= p for u, v in G.edges)


def test_path_power_examples():
    assert path_power(9, 1) == path(9)
    assert path_power(12, 2).m == 21
    assert path_power(36, 3).m == 102


@pytest.mark.parametrize("l", range(3, 12))
def test_double_wheel(l):
    dw = double_wheel(l)
    G = dw.graph
    assert (G.n, G.m) == (l + 2, 3 * l)
    x, y = dw.hubs
    assert not G.has_edge(x, y)
    assert G.neighbors(x) == G.neighbors(y) == frozenset(dw.rim)


def test_double_wheel_needs_three():
    with pytest.raises(ValueError):
        double_wheel(2)


def gk_counts(k):
    npath = k * (k - 1) ** 2
    nw = k * (k - 1)
    h1_edges = sum(npath - j for j in range(1, k))
    h2 = npath + nw
    return h2 + h2 * (k - 1), h1_edges + nw * (k - 1) + h2 * comb(k, 2)


@pytest.mark.parametrize("k", [3, 4, 5])
def test_gk_counts(k):
    G = gk(k).graph
    assert (G.n, G.m) == gk_counts(k)


def test_gk_small_counts():
    assert gk_counts(3) == (54, 87)
    assert gk_counts(4) == (192, 426)


@pytest.mark.parametrize("k", [3, 4, 5])
def test_gk_structure(k):
    g = gk(k)
    G = g.graph
    h1 = set(g.path_vertices)
    for sp, spp in zip(g.prime, g.double_prime):
        for S in (sp, spp):
            assert len(S) == k - 1 and set(S) <= h1
            assert len(G.induced_edges(S)) == comb(k - 1, 2)
    for w, S in zip(g.w_prime + g.w_double_prime, g.prime + g.double_prime):
        assert G.neighbors(w) - {x for c in g.hanging.values() if w in c for x in c} == frozenset(S)
    for host, clique in g.hanging.items():
        assert clique[0] == host and len(G.induced_edges(clique)) == comb(k, 2)
    assert chordality(G).chordal and clique_number(G) == k and treewidth_chordal(G) == k - 1
    assert set(g.roles) == set(G.vertices)


def test_gk_rejects_small_k():
    with pytest.raises(ValueError):
        gk(2)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_prop2_gadget(k):
    g = prop2_gadget(k)
    G = g.graph
    assert (G.n, G.m) == (2 * (2 * k + 1), 2 * k * (k + 1) + 1)
    u, v = g.edge
    assert G.degree(u) == G.degree(v) == k + 1
    rest = to_nx(G)
    rest.remove_edge(u, v)
    comps = [rest.subgraph(c) for c in nx.connected_components(rest)]
    assert len(comps) == 2
    for c in comps:
        assert nx.is_isomorphic(c, nx.complete_bipartite_graph(k, k + 1))


def test_prop2_gadget_small_example():
    G = prop2_gadget(2).graph
    assert (G.n, G.m) == (10, 13)


def test_planar_gadget_counts_and_degrees():
    g = planar_ia_gadget()
    G = g.graph
    assert (G.n, G.m) == (63, 162)
    assert sum(G.degree(v) for v in G.vertices) == 2 * 162
    # DW_5 rim vertices have degree 4 and its hubs degree 5; each adds 7 as a DW_7 hub.
    for v in g.center:
        assert G.degree(v) == (4 if v <= 5 else 5) + 7
    for v, other in g.outer_hubs:
        assert G.degree(other) == 7 and not G.has_edge(v, other)


def test_degenerate_lb_graph():
    small = degenerate_lb_graph(2, 4)
    G = small.graph
    assert G.n == 2 + 4 + 6 * 4 and not small.faithful
    assert degeneracy(G).d <= 2 and G.is_bipartite()
    d3 = degenerate_lb_graph(3, 4)
    assert d3.graph.n == 3 + 4 + 4 * 4 and degeneracy(d3.graph).d <= 3 and d3.graph.is_bipartite()
    assert list(small.B_S) == sorted(small.B_S)


def test_degenerate_lb_faithful_size():
    assert 2 ** 2 * 2 ** 3 == 32
    assert 2 + 32 + comb(32, 2) * 32 == 15906
    big = degenerate_lb_graph(2)
    assert big.graph.n == 15906 and big.faithful and big.N == 32
    with pytest.raises(ValueError, match="vertices"):
        degenerate_lb_graph(3)


def test_subdivide_once():
    S3 = subdivide_once(complete(3))
    assert nx.is_isomorphic(to_nx(S3), nx.cycle_graph(6))
    S4 = subdivide_once(complete(4))
    assert (S4.n, S4.m) == (10, 12) and S4.is_bipartite()


@pytest.mark.parametrize("d", [1, 2, 3])
def test_random_degenerate(d):
    for seed in range(5):
        G = random_degenerate(40, d, seed)
        assert degeneracy(G).d <= d
    assert random_degenerate(30, 2, 7) == random_degenerate(30, 2, 7)


def test_family_registry_builds():
    for name, fam in FAMILIES.items():
        args = {"gk": [3], "degenerate-lb": [2, 3], "planar-gadget": []}.get(name, [5, 3][: fam.nargs])
        if fam.seeded:
            args = args + [1]
        G, roles = fam.build(*args)
        assert G.n >= 1
        if roles is not None:
            assert set(roles) <= set(G.vertices)
