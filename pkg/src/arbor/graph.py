"""Immutable simple undirected graphs on vertices ``1..n``."""
from __future__ import annotations

from functools import cached_property
from typing import Iterable, Iterator


Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple graph on ``1..n``; edges are stored as ``(u, v)`` with ``u < v``.

    Instances are treated as values: they never change after construction,
    compare by (n, edge set) and hash accordingly.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        es = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge {u}-{v} out of range 1..{n}")
            es.add(norm_edge(u, v))
        adj: list[set[int]] = [set() for _ in range(n + 1)]
        for u, v in es:
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(es))
        self._adj = tuple(frozenset(a) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 < u <= self.n and v in self._adj[u]

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        """Neighbourhood bitmasks, bit ``v`` set for neighbour ``v`` (bit 0 unused)."""
        return tuple(sum(1 << w for w in a) for a in self._adj)

    def induced_edges(self, vertices: Iterable[int]) -> set[Edge]:
        vs = set(vertices)
        return {(u, v) for u in vs for v in self._adj[u] if u < v and v in vs}

    def subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``1..k``; also returns the old ids in order."""
        old = sorted(set(vertices))
        new = {v: i + 1 for i, v in enumerate(old)}
        es = [(new[u], new[v]) for u, v in self.edges if u in new and v in new]
        return Graph(len(old), es), old

    def components(self) -> list[list[int]]:
        seen = set()
        out = []
        for s in self.vertices:
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        stack.append(y)
            out.append(sorted(comp))
        return out

    def is_bipartite(self) -> bool:
        side: dict[int, int] = {}
        for s in self.vertices:
            if s in side:
                continue
            side[s] = 0
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if y not in side:
                        side[y] = 1 - side[x]
                        stack.append(y)
                    elif side[y] == side[x]:
                        return False
        return True

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"
