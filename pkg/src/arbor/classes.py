"""The eight forest-like edge classes and their validity predicates."""
from __future__ import annotations

import enum
from collections import defaultdict
from typing import Iterable

from .graph import Edge, Graph, norm_edge


class ForestClass(enum.Enum):
    FOREST = "forest"
    WEAK_INDUCED_FOREST = "wif"
    INDUCED_FOREST = "if"
    STAR_FOREST = "sf"
    WEAK_INDUCED_STAR_FOREST = "wisf"
    INDUCED_STAR_FOREST = "isf"
    MATCHING = "matching"
    INDUCED_MATCHING = "im"

    @property
    def tag(self) -> str:
        return self.value

    @property
    def long_name(self) -> str:
        return self.name.lower().replace("_", "-")

    @property
    def induced(self) -> bool:
        return self in _INDUCED

    @property
    def weak_induced(self) -> bool:
        return self in _WEAK

    @property
    def star(self) -> bool:
        return self in _STAR

    @property
    def matching(self) -> bool:
        return self in (ForestClass.MATCHING, ForestClass.INDUCED_MATCHING)

    @property
    def downward_closed(self) -> bool:
        # Dropping an edge from an induced star forest only sheds a leaf, so
        # the induced forests are the one class where it can break validity.
        return self is not ForestClass.INDUCED_FOREST

    @property
    def code(self) -> int:
        return _CODES[self]

    @classmethod
    def parse(cls, name: str) -> "ForestClass":
        key = name.strip().lower()
        for c in cls:
            if key in (c.value, c.long_name, c.name.lower()):
                return c
        raise ValueError(f"unknown forest class {name!r}")


_INDUCED = frozenset(
    {ForestClass.INDUCED_FOREST, ForestClass.INDUCED_STAR_FOREST, ForestClass.INDUCED_MATCHING}
)
_WEAK = frozenset(
    {ForestClass.WEAK_INDUCED_FOREST, ForestClass.WEAK_INDUCED_STAR_FOREST}
)
_STAR = frozenset(
    {ForestClass.STAR_FOREST, ForestClass.WEAK_INDUCED_STAR_FOREST, ForestClass.INDUCED_STAR_FOREST}
)
# Integer codes shared with the search kernels.
_CODES = {c: i for i, c in enumerate(ForestClass)}

# Direct containments (smaller class -> larger class).
SUBCLASS_EDGES: tuple[tuple[ForestClass, ForestClass], ...] = (
    (ForestClass.INDUCED_MATCHING, ForestClass.INDUCED_STAR_FOREST),
    (ForestClass.INDUCED_STAR_FOREST, ForestClass.INDUCED_FOREST),
    (ForestClass.INDUCED_FOREST, ForestClass.WEAK_INDUCED_FOREST),
    (ForestClass.WEAK_INDUCED_FOREST, ForestClass.FOREST),
    (ForestClass.MATCHING, ForestClass.WEAK_INDUCED_STAR_FOREST),
    (ForestClass.WEAK_INDUCED_STAR_FOREST, ForestClass.WEAK_INDUCED_FOREST),
    (ForestClass.INDUCED_STAR_FOREST, ForestClass.WEAK_INDUCED_STAR_FOREST),
    (ForestClass.INDUCED_MATCHING, ForestClass.MATCHING),
    (ForestClass.WEAK_INDUCED_STAR_FOREST, ForestClass.STAR_FOREST),
    (ForestClass.STAR_FOREST, ForestClass.FOREST),
)


def superclasses(cls: ForestClass) -> set[ForestClass]:
    """All classes containing ``cls`` (including itself)."""
    out = {cls}
    frontier = [cls]
    while frontier:
        c = frontier.pop()
        for a, b in SUBCLASS_EDGES:
            if a is c and b not in out:
                out.add(b)
                frontier.append(b)
    return out


def edge_components(edges: Iterable[Edge]) -> list[tuple[set[int], list[Edge]]]:
    """Connected components of an edge set as (vertex set, edge list) pairs."""
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    es = list(edges)
    for u, v in es:
        parent.setdefault(u, u)
        parent.setdefault(v, v)
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[int, tuple[set[int], list[Edge]]] = {}
    for u, v in es:
        vs, part = groups.setdefault(find(u), (set(), []))
        vs.update((u, v))
        part.append((u, v))
    return list(groups.values())


def _is_star(vs: set[int], es: list[Edge]) -> bool:
    deg: dict[int, int] = defaultdict(int)
    for u, v in es:
        deg[u] += 1
        deg[v] += 1
    return sum(1 for d in deg.values() if d >= 2) <= 1


def validate_edge_set(G: Graph, S: Iterable[tuple[int, int]], cls: ForestClass) -> bool:
    """Whether the subgraph formed by the edge set ``S`` belongs to ``cls`` in ``G``.

    Raises ``ValueError`` when ``S`` contains a pair that is not an edge of ``G``.
    The empty set is valid for every class.
    """
    es = {norm_edge(u, v) for u, v in S}
    for e in es:
        if e not in G.edge_set:
            raise ValueError(f"edge {e[0]}-{e[1]} is not in the graph")
    if not es:
        return True

    comps = edge_components(es)
    # A component with c vertices is a tree iff it has c - 1 edges.
    if any(len(part) != len(vs) - 1 for vs, part in comps):
        return False
    if cls.matching:
        if any(len(part) != 1 for _, part in comps):
            return False
    elif cls.star:
        if not all(_is_star(vs, part) for vs, part in comps):
            return False
    if cls.induced:
        support = set().union(*(vs for vs, _ in comps))
        return len(G.induced_edges(support)) == len(es)
    if cls.weak_induced:
        return all(len(G.induced_edges(vs)) == len(part) for vs, part in comps)
    return True
