"""Named graphs and the extremal families used by the regression suite."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable, Optional

from .graph import Edge, Graph

MAX_GENERATED_VERTICES = 200_000


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete(n) needs n >= 1")
    return Graph(n, combinations(range(1, n + 1), 2))


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise ValueError("complete_bipartite(m, n) needs m, n >= 1")
    return Graph(m + n, [(a, m + b) for a in range(1, m + 1) for b in range(1, n + 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle(n) needs n >= 3")
    return Graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path(n) needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def path_power(n: int, p: int) -> Graph:
    """Vertices 1..n in path order, u ~ v iff 0 < |u - v| <= p."""
    if n < 2 or p < 1:
        raise ValueError("path_power(n, p) needs n >= 2 and p >= 1")
    return Graph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, min(n, u + p) + 1)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    off = 0
    for g in graphs:
        edges.extend((u + off, v + off) for u, v in g.edges)
        off += g.n
    return Graph(off, edges)


@dataclass(frozen=True)
class DoubleWheel:
    graph: Graph
    hubs: tuple[int, int]
    rim: tuple[int, ...]


def double_wheel(l: int) -> DoubleWheel:
    """Rim cycle on 1..l plus two nonadjacent hubs l+1, l+2 joined to the whole rim."""
    if l < 3:
        raise ValueError("double_wheel(l) needs l >= 3")
    x, y = l + 1, l + 2
    rim = cycle(l).edges
    spokes = [(r, h) for h in (x, y) for r in range(1, l + 1)]
    return DoubleWheel(Graph(l + 2, [*rim, *spokes]), (x, y), tuple(range(1, l + 1)))


@dataclass(frozen=True)
class Gk:
    graph: Graph
    k: int
    path_vertices: tuple[int, ...]
    prime: tuple[tuple[int, ...], ...]
    double_prime: tuple[tuple[int, ...], ...]
    w_prime: tuple[int, ...]
    w_double_prime: tuple[int, ...]
    hanging: dict = field(default_factory=dict)  # H_2 vertex -> its hanging clique
    roles: dict = field(default_factory=dict)  # vertex -> role tag

    @property
    def h2_vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.hanging))


def gk(k: int) -> Gk:
    """The tree-width k-1 graph G_k (k >= 3) with every vertex labelled by role.

    H_1 is the (k-1)-th power of a path on k(k-1)^2 vertices cut into
    k(k-1)/2 blocks of 2(k-1) consecutive vertices; S_i' holds the first k-2
    and the k-th vertex of block i, S_i'' the rest. w_i', w_i'' are joined to
    S_i', S_i''; a K_k hangs on every vertex of the resulting H_2.
    """
    if k < 3:
        raise ValueError("gk(k) needs k >= 3 (G_2 is only given by a figure)")
    npath = k * (k - 1) ** 2
    nblocks = k * (k - 1) // 2
    bsize = 2 * (k - 1)
    edges: list[Edge] = list(path_power(npath, k - 1).edges)
    roles: dict[int, str] = {}
    prime, dprime = [], []
    for i in range(nblocks):
        block = list(range(i * bsize + 1, (i + 1) * bsize + 1))
        sp = tuple(block[: k - 2] + [block[k - 1]])
        spp = tuple(v for v in block if v not in sp)
        prime.append(sp)
        dprime.append(spp)
        for v in sp:
            roles[v] = f"S{i + 1}'"
        for v in spp:
            roles[v] = f"S{i + 1}''"
    w_p, w_pp = [], []
    nxt = npath + 1
    for i in range(nblocks):
        for members, store, mark in ((prime[i], w_p, "'"), (dprime[i], w_pp, "''")):
            store.append(nxt)
            roles[nxt] = f"w{i + 1}{mark}"
            edges.extend((v, nxt) for v in members)
            nxt += 1
    h2 = nxt - 1
    hanging = {}
    for host in range(1, h2 + 1):
        fresh = list(range(nxt, nxt + k - 1))
        nxt += k - 1
        clique = [host, *fresh]
        edges.extend(combinations(clique, 2))
        hanging[host] = tuple(clique)
        for v in fresh:
            roles[v] = f"hang{host}"
    return Gk(
        Graph(nxt - 1, edges),
        k,
        tuple(range(1, npath + 1)),
        tuple(prime),
        tuple(dprime),
        tuple(w_p),
        tuple(w_pp),
        hanging,
        roles,
    )


@dataclass(frozen=True)
class Prop2Gadget:
    graph: Graph
    edge: Edge
    copies: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]  # ((A, B) per copy)


def prop2_gadget(k: int) -> Prop2Gadget:
    """Two disjoint K_{k,k+1} joined by one edge between their (k+1)-sides."""
    if k < 2:
        raise ValueError("prop2_gadget(k) needs k >= 2")
    half = 2 * k + 1
    copies = []
    edges: list[Edge] = []
    for off in (0, half):
        A = tuple(range(off + 1, off + k + 1))
        B = tuple(range(off + k + 1, off + half + 1))
        copies.append((A, B))
        edges.extend((a, b) for a in A for b in B)
    e = (copies[0][1][0], copies[1][1][0])
    return Prop2Gadget(Graph(2 * half, [*edges, e]), e, tuple(copies))


@dataclass(frozen=True)
class PlanarGadget:
    graph: Graph
    center: tuple[int, ...]  # v_1..v_7 of the DW_5 copy
    outer_hubs: tuple[tuple[int, int], ...]  # (v_i, other hub of X_i)


def planar_ia_gadget() -> PlanarGadget:
    """A DW_5 on v_1..v_7 with a DW_7 hung on each v_i by one of its hubs."""
    base = double_wheel(5)
    edges = list(base.graph.edges)
    nxt = 8
    hubs = []
    for v in range(1, 8):
        rim = list(range(nxt, nxt + 7))
        other = nxt + 7
        nxt += 8
        edges.extend((rim[i], rim[(i + 1) % 7]) for i in range(7))
        edges.extend((r, h) for h in (v, other) for r in rim)
        hubs.append((v, other))
    return PlanarGadget(Graph(nxt - 1, edges), tuple(range(1, 8)), tuple(hubs))


@dataclass(frozen=True)
class DegenerateLB:
    graph: Graph
    d: int
    N: int
    faithful: bool
    A: tuple[int, ...]
    B: tuple[int, ...]
    B_S: dict  # d-subset S of B -> its private block


def degenerate_lb_graph(d: int, N_override: Optional[int] = None,
                        max_vertices: int = MAX_GENERATED_VERTICES) -> DegenerateLB:
    """Bipartite d-degenerate graph: K(A, B) plus K(S, B_S) for every d-subset S of B.

    |A| = d and |B| = |B_S| = N = 2^d d^(d+1) unless ``N_override`` truncates it.
    """
    if d < 2:
        raise ValueError("degenerate_lb_graph needs d >= 2")
    N = 2 ** d * d ** (d + 1) if N_override is None else N_override
    if N < d:
        raise ValueError(f"N must be at least d={d}")
    total = d + N + comb(N, d) * N
    if total > max_vertices:
        raise ValueError(
            f"degenerate_lb_graph(d={d}, N={N}) has {total} vertices, above the limit {max_vertices}"
        )
    A = tuple(range(1, d + 1))
    B = tuple(range(d + 1, d + N + 1))
    edges: list[Edge] = [(a, b) for a in A for b in B]
    nxt = d + N + 1
    blocks = {}
    for S in combinations(B, d):
        block = tuple(range(nxt, nxt + N))
        nxt += N
        blocks[S] = block
        edges.extend((s, t) for s in S for t in block)
    return DegenerateLB(Graph(nxt - 1, edges), d, N, N_override is None, A, B, blocks)


def subdivide_once(G: Graph) -> Graph:
    """sd_1(G): edge i (in sorted order) gets the new middle vertex n + i."""
    edges = []
    for i, (u, v) in enumerate(G.edges, 1):
        x = G.n + i
        edges.extend([(u, x), (v, x)])
    return Graph(G.n + G.m, edges)


def random_degenerate(n: int, d: int, seed: int = 1) -> Graph:
    """Each vertex i joins min(d, i-1) random earlier vertices, so degeneracy <= d."""
    rng = random.Random(seed)
    edges = []
    for i in range(2, n + 1):
        edges.extend((j, i) for j in rng.sample(range(1, i), min(d, i - 1)))
    return Graph(n, edges)


def random_graph(n: int, p: float, seed: int = 1) -> Graph:
    rng = random.Random(seed)
    return Graph(n, [(u, v) for u, v in combinations(range(1, n + 1), 2) if rng.random() < p])


def random_interval_graph(n: int, seed: int = 1, span: int = 100) -> Graph:
    """Intersection graph of n random closed integer intervals (chordal by construction)."""
    rng = random.Random(seed)
    iv = []
    for _ in range(n):
        a = rng.randrange(span)
        iv.append((a, a + rng.randrange(1, span // 4 + 2)))
    return Graph(n, [(i + 1, j + 1) for i, j in combinations(range(n), 2)
                     if iv[i][0] <= iv[j][1] and iv[j][0] <= iv[i][1]])


def random_tree(n: int, seed: int = 1) -> Graph:
    rng = random.Random(seed)
    return Graph(n, [(rng.randrange(1, i), i) for i in range(2, n + 1)])


def _double_wheel_roles(l: int):
    dw = double_wheel(l)
    roles = {v: "rim" for v in dw.rim}
    roles.update({h: "hub" for h in dw.hubs})
    return dw.graph, roles


def _gadget_roles(k: int):
    g = prop2_gadget(k)
    roles = {}
    for c, (A, B) in enumerate(g.copies, 1):
        roles.update({a: f"A{c}" for a in A})
        roles.update({b: f"B{c}" for b in B})
    for x in g.edge:
        roles[x] += "+e"
    return g.graph, roles


def _planar_roles():
    g = planar_ia_gadget()
    roles = {v: "centre" for v in g.center}
    roles.update({h: "outer-hub" for _, h in g.outer_hubs})
    return g.graph, roles


def _plain(fn):
    return lambda *a: (fn(*a), None)


@dataclass(frozen=True)
class Family:
    build: Callable  # (*int args[, seed]) -> (Graph, roles or None)
    nargs: int
    seeded: bool = False


FAMILIES = {
    "complete": Family(_plain(complete), 1),
    "complete-bipartite": Family(_plain(complete_bipartite), 2),
    "cycle": Family(_plain(cycle), 1),
    "path": Family(_plain(path), 1),
    "path-power": Family(_plain(path_power), 2),
    "double-wheel": Family(_double_wheel_roles, 1),
    "gk": Family(lambda k: (lambda g: (g.graph, g.roles))(gk(k)), 1),
    "bipartite-gadget": Family(_gadget_roles, 1),
    "planar-gadget": Family(_planar_roles, 0),
    "degenerate-lb": Family(_plain(lambda d, N: degenerate_lb_graph(d, N).graph), 2),
    "sd1-complete": Family(_plain(lambda n: subdivide_once(complete(n))), 1),
    "random-degenerate": Family(_plain(random_degenerate), 2, True),
    "random-tree": Family(_plain(random_tree), 1, True),
    "random-interval": Family(_plain(random_interval_graph), 1, True),
}
