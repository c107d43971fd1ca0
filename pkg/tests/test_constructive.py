from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from arbor.certificates import ColoringCertificate, CoverCertificate, verify_certificate, verify_coloring
from arbor.classes import ForestClass as FC, validate_edge_set
from arbor.constructive import (
    StarDecomposition, acyclic_matching_cover, acyclic_pairs_cover, degeneracy_star_cover,
    leaf_color_split, round_robin_matchings, shallow_minor_coloring, split_layers, star_centres,
)
from arbor.generators import (
    complete, complete_bipartite, cycle, double_wheel, path, random_degenerate, random_tree,
    subdivide_once,
)
from arbor.graph import Graph
from arbor.reproduce import canonical_subdivision_stars
from arbor.solver import (
    SolveRequest, acyclic_chromatic_number, chromatic_number, min_cover,
)
from arbor.structure import degeneracy
from conftest import graphs


def ok(G, cert, cls=None):
    rep = verify_certificate(G, cert)
    return rep.ok and (cls is None or cert.cls is cls)


# -- layer splitting ---------------------------------------------------------------------------


def test_single_star_unchanged():
    G = complete_bipartite(1, 4)
    out = split_layers(G, CoverCertificate(FC.FOREST, "partition", [G.edges]), 2)
    assert out.parts == (frozenset(G.edges),) and out.cls is FC.STAR_FOREST


def test_path_two_layers():
    P = path(5)
    out = split_layers(P, CoverCertificate(FC.FOREST, "partition", [P.edges]), 2)
    assert out.parts == (frozenset({(1, 2), (3, 4)}), frozenset({(2, 3), (4, 5)}))
    assert ok(P, out, FC.STAR_FOREST)


def test_bipartite_induced_to_induced_stars():
    K = complete_bipartite(3, 4)
    cert = min_cover(SolveRequest(K, FC.INDUCED_FOREST)).certificate
    out = split_layers(K, cert, 3)
    assert out.k <= 9 and ok(K, out, FC.INDUCED_STAR_FOREST)


def test_non_forest_rejected():
    C = cycle(4)
    with pytest.raises(ValueError, match="not a forest"):
        split_layers(C, CoverCertificate(FC.FOREST, "cover", [C.edges]), 2)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7, max_m=11), st.sampled_from([FC.FOREST, FC.WEAK_INDUCED_FOREST, FC.INDUCED_FOREST]),
       st.sampled_from(["cover", "partition"]), st.sampled_from([2, 3]))
def test_split_layers_properties(G, cls, mode, modulus):
    if not G.m:
        return
    cert = min_cover(SolveRequest(G, cls, mode)).certificate
    out = split_layers(G, cert, modulus)
    assert out.k <= modulus * cert.k
    assert set().union(*out.parts) == set().union(*cert.parts)
    want = {FC.FOREST: FC.STAR_FOREST, FC.WEAK_INDUCED_FOREST: FC.WEAK_INDUCED_STAR_FOREST,
            FC.INDUCED_FOREST: FC.INDUCED_STAR_FOREST if modulus == 3 else FC.WEAK_INDUCED_STAR_FOREST}
    assert ok(G, out, want[cls]) and out.mode == mode


# -- degeneracy colouring ---------------------------------------------------------------------------


def check_degeneracy_cover(G):
    col, cert = degeneracy_star_cover(G, check_invariants=True)
    d = degeneracy(G).d
    assert ok(G, cert, FC.WEAK_INDUCED_STAR_FOREST) and cert.mode == "partition"
    assert cert.k <= 2 * d
    assert col.reserved_ok() and col.right_stars_ok()
    assert set(col.edge_colors) == set(G.edges)
    assert all(1 <= c <= 2 * d for c in col.edge_colors.values())
    return cert


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_degeneracy_cover_any_graph(G):
    check_degeneracy_cover(G)


def test_degeneracy_cover_examples():
    for seed in range(5):
        assert check_degeneracy_cover(random_tree(20, seed)).k <= 2
    assert check_degeneracy_cover(complete(4)).k <= 6
    for seed in range(20):
        assert check_degeneracy_cover(random_degenerate(50, 2, seed)).k <= 4


def test_reserved_sets_checked_at_each_step():
    col, _ = degeneracy_star_cover(complete(5), check_invariants=True)
    assert all(len(S) == 4 for S in col.reserved_sets.values())


# -- acyclic colourings -----------------------------------------------------------------------------


def test_round_robin():
    for k in range(2, 12):
        M = round_robin_matchings(k)
        assert len(M) == k - 1 + k % 2
        edges = [e for m in M for e in m]
        assert sorted(edges) == sorted(complete(k).edges)
        for m in M:
            ends = [x for e in m for x in e]
            assert len(ends) == len(set(ends))
    assert all(len(m) == 2 for m in round_robin_matchings(4))
    assert all(len(m) == 2 for m in round_robin_matchings(5))
    assert all(len(m) == 1 for m in round_robin_matchings(3))
    with pytest.raises(ValueError):
        round_robin_matchings(1)


def singleton(G):
    return ColoringCertificate("acyclic-vertex", {v: v for v in G.vertices}, G.n)


def test_acyclic_pairs_examples():
    K = complete(4)
    out = acyclic_pairs_cover(K, singleton(K))
    assert out.k == 6 and all(len(p) == 1 for p in out.parts) and ok(K, out, FC.INDUCED_FOREST)
    T = random_tree(10, 2)
    col = acyclic_chromatic_number(T).certificate
    out = acyclic_pairs_cover(T, col)
    assert out.k == 1 and ok(T, out)


def test_acyclic_matching_examples():
    T = random_tree(10, 2)
    assert acyclic_matching_cover(T, acyclic_chromatic_number(T).certificate).k == 1
    K = complete(4)
    out = acyclic_matching_cover(K, singleton(K))
    assert out.k == 3 and ok(K, out, FC.WEAK_INDUCED_FOREST)
    DW = double_wheel(16).graph
    col = acyclic_chromatic_number(DW).certificate
    assert col.c == 5
    out = acyclic_matching_cover(DW, col)
    assert out.k == 5 and ok(DW, out, FC.WEAK_INDUCED_FOREST)
    pairs = acyclic_pairs_cover(DW, col)
    assert pairs.k <= 10 and ok(DW, pairs, FC.INDUCED_FOREST)


def test_non_acyclic_colouring_rejected():
    C = cycle(4)
    bad = ColoringCertificate("acyclic-vertex", {1: 1, 2: 2, 3: 1, 4: 2}, 2)
    with pytest.raises(ValueError):
        acyclic_pairs_cover(C, bad)
    with pytest.raises(ValueError):
        acyclic_matching_cover(C, ColoringCertificate("proper-vertex", bad.assignment, 2))


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8))
def test_acyclic_builders_on_random_graphs(G):
    col = acyclic_chromatic_number(G).certificate
    k = col.c
    pairs, match = acyclic_pairs_cover(G, col), acyclic_matching_cover(G, col)
    assert ok(G, pairs, FC.INDUCED_FOREST) and ok(G, match, FC.WEAK_INDUCED_FOREST)
    assert pairs.k <= comb(k, 2) and match.k <= max(k - 1 + k % 2, 0)
    # labels name the colour pairs, so counting them back recovers the full family
    used = {tuple(sorted((col.assignment[u], col.assignment[v]))) for u, v in G.edges}
    assert len(used) == pairs.k


# -- leaf colour split ----------------------------------------------------------------------------


def test_star_centres():
    assert star_centres([(1, 2)]) == {(1, 2): 1}
    assert set(star_centres([(1, 3), (2, 3)]).values()) == {3}
    with pytest.raises(ValueError):
        star_centres([(1, 2), (2, 3), (3, 4)])


def test_leaf_split_single_star():
    G = complete_bipartite(1, 3)
    stars = CoverCertificate(FC.STAR_FOREST, "partition", [G.edges])
    col = ColoringCertificate("proper-vertex", {1: 1, 2: 2, 3: 2, 4: 2}, 2)
    out = leaf_color_split(G, stars, col)
    assert out.parts == stars.parts and ok(G, out, FC.WEAK_INDUCED_STAR_FOREST)


def test_leaf_split_complete_graph():
    K = complete(4)
    stars = min_cover(SolveRequest(K, FC.STAR_FOREST, "partition")).certificate
    col = chromatic_number(K).certificate
    out = leaf_color_split(K, stars, col)
    assert out.k <= stars.k * col.c and ok(K, out, FC.WEAK_INDUCED_STAR_FOREST)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8))
def test_leaf_split_bound(G):
    if not G.m:
        return
    stars = min_cover(SolveRequest(G, FC.STAR_FOREST)).certificate
    col = chromatic_number(G).certificate
    out = leaf_color_split(G, stars, col)
    assert ok(G, out, FC.WEAK_INDUCED_STAR_FOREST) and out.k <= stars.k * col.c
    a = min_cover(SolveRequest(G, FC.FOREST)).k
    assert out.k <= 4 * a * a


# -- shallow minor colouring ----------------------------------------------------------------------


def test_trivial_decomposition_keeps_phi():
    G = cycle(5)
    dec = StarDecomposition(tuple((v, frozenset()) for v in G.vertices), G.edges)
    phi = chromatic_number(G).certificate
    isa = min_cover(SolveRequest(G, FC.INDUCED_STAR_FOREST)).certificate
    psi = shallow_minor_coloring(G, dec, phi, isa)
    assert psi.assignment == phi.assignment


def test_subdivided_complete_graph():
    H = complete(4)
    G = subdivide_once(H)
    dec = canonical_subdivision_stars(H)
    assert dec.is_valid(G)
    phi = chromatic_number(G).certificate
    isa = min_cover(SolveRequest(G, FC.INDUCED_STAR_FOREST)).certificate
    psi = shallow_minor_coloring(G, dec, phi, isa)
    assert verify_coloring(H, psi)
    assert psi.colors_used <= psi.c <= phi.c * 2 ** isa.k
    assert all(psi.assignment[i] != psi.assignment[j] for i, j in H.edges)


@pytest.mark.parametrize("n", [3, 5])
def test_bound_with_stated_inputs(n):
    H = complete(n)
    G = subdivide_once(H)
    ia = min_cover(SolveRequest(G, FC.INDUCED_FOREST)).k
    phi = chromatic_number(G).certificate
    isa = split_layers(G, min_cover(SolveRequest(G, FC.INDUCED_FOREST)).certificate, 3)
    assert phi.c <= 2 * ia and isa.k <= 3 * ia
    psi = shallow_minor_coloring(G, canonical_subdivision_stars(H), phi, isa)
    assert psi.colors_used <= 2 * ia * 2 ** (3 * ia)


def test_invalid_decomposition_rejected():
    P4 = path(4)
    dec = StarDecomposition(((1, frozenset()), (2, frozenset()), (4, frozenset())), complete(3).edges)
    phi = chromatic_number(P4).certificate
    isa = min_cover(SolveRequest(P4, FC.INDUCED_STAR_FOREST)).certificate
    with pytest.raises(ValueError):
        shallow_minor_coloring(P4, dec, phi, isa)
