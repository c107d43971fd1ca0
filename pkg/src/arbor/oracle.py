"""Brute-force reference answers for tiny graphs, independent of the search kernels."""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Mapping, Optional

from .classes import ForestClass, validate_edge_set
from .graph import Graph


def valid_masks(G: Graph, cls: ForestClass) -> list[int]:
    """Every nonempty edge subset (as a bitmask over ``G.edges``) valid for ``cls``."""
    es = G.edges
    out = []
    for mask in range(1, 1 << len(es)):
        S = [es[i] for i in range(len(es)) if (mask >> i) & 1]
        if validate_edge_set(G, S, cls):
            out.append(mask)
    return out


def oracle_min_cover(G: Graph, cls: ForestClass, mode: str = "cover") -> int:
    """Smallest family of valid sets covering (or partitioning) E(G).

    Memoised over the covered-edge mask, always branching on the lowest
    uncovered edge, so every family is reached in some order.
    """
    if G.m == 0:
        return 0
    full = (1 << G.m) - 1
    sets = valid_masks(G, cls)
    by_edge = [[s for s in sets if (s >> i) & 1] for i in range(G.m)]

    @lru_cache(maxsize=None)
    def best(covered: int) -> int:
        if covered == full:
            return 0
        free = full & ~covered
        low = (free & -free).bit_length() - 1
        out = G.m + 1
        for s in by_edge[low]:
            if mode == "partition" and s & covered:
                continue
            out = min(out, 1 + best(covered | s))
        return out

    return best(0)


def oracle_decide(G: Graph, cls: ForestClass, mode: str, k: int,
                  caps: Optional[Mapping[int, int]] = None,
                  floors: Optional[Mapping[int, int]] = None) -> bool:
    """Whether some family of at most k valid sets covers E(G) within the load bounds.

    Enumerates multisets of k valid sets (or the empty set); only practical when
    the graph has a handful of edges.
    """
    caps, floors = caps or {}, floors or {}
    full = (1 << G.m) - 1
    sets = [0] + valid_masks(G, cls)
    vmask = []
    for s in sets:
        vs = set()
        for i, (u, v) in enumerate(G.edges):
            if (s >> i) & 1:
                vs.update((u, v))
        vmask.append(vs)
    for fam in combinations_with_replacement(range(len(sets)), k):
        union = 0
        clash = False
        for i in fam:
            if mode == "partition" and union & sets[i]:
                clash = True
                break
            union |= sets[i]
        if clash or union != full:
            continue
        load = {v: sum(1 for i in fam if v in vmask[i]) for v in G.vertices}
        if all(load[v] <= t for v, t in caps.items()) and all(load[v] >= t for v, t in floors.items()):
            return True
    return False
