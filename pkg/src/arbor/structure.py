"""Structural parameters: degeneracy, chordality, clique number, density, shallow minors."""
from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from .certificates import OrderingCertificate
from .graph import Graph

EXACT_DENSITY_LIMIT = 20


def degeneracy(G: Graph) -> OrderingCertificate:
    """Minimum d with a witness ordering, by repeated minimum-degree removal.

    The returned order is the reverse removal order, so every vertex has at
    most d neighbours earlier in it. Ties go to the smallest vertex id.
    """
    deg = {v: G.degree(v) for v in G.vertices}
    heap = [(d, v) for v, d in deg.items()]
    heapq.heapify(heap)
    removed = set()
    removal = []
    d = 0
    while heap:
        dv, v = heapq.heappop(heap)
        if v in removed or dv != deg[v]:
            continue
        removed.add(v)
        removal.append(v)
        d = max(d, dv)
        for w in G.neighbors(v):
            if w not in removed:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return OrderingCertificate(tuple(reversed(removal)), d)


# -- chordality -----------------------------------------------------------------

@dataclass(frozen=True)
class Chordality:
    chordal: bool
    peo: Optional[tuple[int, ...]] = None
    cycle: Optional[tuple[int, ...]] = None


def maximum_cardinality_search(G: Graph) -> list[int]:
    weight = {v: 0 for v in G.vertices}
    order = []
    unvisited = set(G.vertices)
    while unvisited:
        v = max(unvisited, key=lambda x: (weight[x], -x))
        unvisited.remove(v)
        order.append(v)
        for w in G.neighbors(v):
            if w in unvisited:
                weight[w] += 1
    return order


def is_perfect_elimination_ordering(G: Graph, order: Sequence[int]) -> bool:
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in G.neighbors(v) if pos[w] > pos[v]]
        if any(not G.has_edge(a, b) for a, b in combinations(later, 2)):
            return False
    return True


def _shortest_path(G: Graph, s: int, t: int, banned: set[int]) -> Optional[list[int]]:
    prev = {s: s}
    q = deque([s])
    while q:
        x = q.popleft()
        if x == t:
            path = [t]
            while path[-1] != s:
                path.append(prev[path[-1]])
            return path[::-1]
        for y in sorted(G.neighbors(x)):
            if y not in prev and y not in banned:
                prev[y] = x
                q.append(y)
    return None


def chordless_cycle(G: Graph) -> Optional[tuple[int, ...]]:
    """A chordless cycle of length >= 4, or None when G is chordal.

    For a vertex v with nonadjacent neighbours x, y, a shortest x-y path
    avoiding v and its other neighbours closes a chordless cycle through v.
    """
    for v in G.vertices:
        nb = sorted(G.neighbors(v))
        for x, y in combinations(nb, 2):
            if G.has_edge(x, y):
                continue
            banned = (set(nb) - {x, y}) | {v}
            path = _shortest_path(G, x, y, banned)
            if path is not None:
                return (v, *path)
    return None


def chordality(G: Graph) -> Chordality:
    order = maximum_cardinality_search(G)
    peo = tuple(reversed(order))
    if is_perfect_elimination_ordering(G, peo):
        return Chordality(True, peo=peo)
    cycle = chordless_cycle(G)
    assert cycle is not None, "MCS rejected a graph with no chordless cycle"
    return Chordality(False, cycle=cycle)


# -- cliques --------------------------------------------------------------------

def _color_bound(P: int, adj: Sequence[int]) -> list[tuple[int, int]]:
    """Greedy colour classes of P; returns (vertex, colour) with colours ascending."""
    out = []
    color = 0
    rest = P
    while rest:
        color += 1
        avail = rest
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~(1 << v) & ~adj[v]
            rest &= ~(1 << v)
            out.append((v, color))
    return out


def max_clique(G: Graph) -> list[int]:
    """Maximum clique by branch and bound with greedy-colouring bounds."""
    adj = G.adj_masks
    best: list[int] = []

    def expand(R: list[int], P: int) -> None:
        nonlocal best
        ordered = _color_bound(P, adj)
        for v, bound in reversed(ordered):
            if len(R) + bound <= len(best):
                return
            R.append(v)
            nxt = P & adj[v]
            if nxt:
                expand(R, nxt)
            elif len(R) > len(best):
                best = list(R)
            R.pop()
            P &= ~(1 << v)

    expand([], sum(1 << v for v in G.vertices))
    return sorted(best)


def clique_number(G: Graph) -> int:
    return len(max_clique(G))


def treewidth_chordal(G: Graph) -> int:
    """Tree-width of a chordal graph (clique number minus one)."""
    if not chordality(G).chordal:
        raise ValueError(
            "graph is not chordal; only chordal tree-width is supported "
            "(use clique/degeneracy bounds for general graphs)"
        )
    return max(clique_number(G) - 1, 0)


# -- Nash-Williams density --------------------------------------------------------

@dataclass(frozen=True)
class Density:
    value: int
    exact: bool


def _ceil_ratio(e: int, v: int) -> int:
    return -(-e // (v - 1)) if v >= 2 else 0


def _exact_density(G: Graph) -> int:
    n = G.n
    adj = G.adj_masks
    size = 1 << n
    ecount = np.zeros(size, dtype=np.int64)
    for i in range(n):
        lo = 1 << i
        low_nb = adj[i + 1] >> 1 & (lo - 1)
        masks = np.arange(lo, dtype=np.int64)
        ecount[lo : 2 * lo] = ecount[:lo] + np.bitwise_count(masks & low_nb)
    vcount = np.bitwise_count(np.arange(size, dtype=np.int64)).astype(np.int64)
    big = vcount >= 2
    ratios = -(-ecount[big] // (vcount[big] - 1))
    return int(ratios.max()) if ratios.size else 0


def nash_williams_density(G: Graph, exact_limit: int = EXACT_DENSITY_LIMIT) -> Density:
    """max over subgraphs H of ceil(|E(H)| / (|V(H)| - 1)), which equals a(G).

    Computed exactly per connected component when every component has at
    most ``exact_limit`` vertices; otherwise a lower bound from components
    and the cores of a degeneracy ordering is returned with ``exact=False``.
    """
    best = 0
    exact = True
    for comp in G.components():
        if len(comp) < 2:
            continue
        H, _ = G.subgraph(comp)
        if H.n <= exact_limit:
            best = max(best, _exact_density(H))
            continue
        exact = False
        order = degeneracy(H).order
        for i in range(len(order) - 1):
            suffix = order[i:]
            best = max(best, _ceil_ratio(len(H.induced_edges(suffix)), len(suffix)))
    return Density(best, exact)


def arboricity(G: Graph) -> int:
    dens = nash_williams_density(G)
    if not dens.exact:
        raise ValueError("graph too large for exact density; use the exact solver")
    return dens.value


# -- 1/2-shallow minors --------------------------------------------------------------

def check_star_decomposition(G: Graph, stars: Sequence[tuple[int, frozenset[int]]]) -> None:
    used: set[int] = set()
    for i, (c, leaves) in enumerate(stars, 1):
        members = {c, *leaves}
        if c in leaves:
            raise ValueError(f"star {i}: centre listed as a leaf")
        if any(not 1 <= x <= G.n for x in members):
            raise ValueError(f"star {i}: vertex out of range")
        if any(not G.has_edge(c, x) for x in leaves):
            raise ValueError(f"star {i}: a leaf is not adjacent to centre {c}")
        if used & members:
            raise ValueError(f"star {i} overlaps an earlier star")
        used |= members


def is_half_shallow_minor(G: Graph, H: Graph, stars: Sequence[tuple[int, frozenset[int]]]) -> bool:
    """Whether ``stars`` (one per vertex of H, in order) witness H as a 1/2-shallow minor of G."""
    if len(stars) != H.n:
        raise ValueError(f"need {H.n} stars, got {len(stars)}")
    check_star_decomposition(G, stars)
    members = [{c, *leaves} for c, leaves in stars]
    for i, j in H.edges:
        ci, cj = stars[i - 1][0], stars[j - 1][0]
        if not (G.neighbors(ci) & members[j - 1] or G.neighbors(cj) & members[i - 1]):
            return False
    return True
