import networkx as nx
import pytest
from hypothesis import strategies as st

from arbor.graph import Graph


def from_nx(g: nx.Graph) -> Graph:
    """Relabel a networkx graph onto 1..n in sorted node order."""
    idx = {v: i + 1 for i, v in enumerate(sorted(g.nodes()))}
    return Graph(len(idx), [(idx[u], idx[v]) for u, v in g.edges()])


def to_nx(G: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(G.vertices)
    g.add_edges_from(G.edges)
    return g


@st.composite
def graphs(draw, min_n=1, max_n=7, max_m=None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_m)) if pairs else []
    return Graph(n, chosen)


@st.composite
def graph_and_subset(draw, max_n=7):
    G = draw(graphs(max_n=max_n))
    S = draw(st.lists(st.sampled_from(G.edges), unique=True)) if G.m else []
    return G, S


def atlas(max_nodes):
    return [from_nx(g) for g in nx.graph_atlas_g() if 1 <= g.number_of_nodes() <= max_nodes]


@pytest.fixture(scope="session")
def atlas5():
    return atlas(5)
