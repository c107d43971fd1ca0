"""Exact vertex, acyclic and edge colouring numbers by backtracking."""
from __future__ import annotations

import time
from typing import Optional

from ..certificates import ColoringCertificate
from ..classes import ForestClass
from ..graph import Graph
from ..structure import clique_number
from .engine import (
    EXHAUSTED_S, FEASIBLE_S, Budget, SolveRequest, SolveResult, min_cover,
)


class BudgetExhausted(Exception):
    pass


def _comp(start: int, allowed: int, adj) -> int:
    comp = 1 << start
    frontier = comp
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        nxt &= allowed & ~comp
        comp |= nxt
        frontier = nxt
    return comp


def k_coloring(G: Graph, k: int, acyclic: bool = False, budget: Optional[Budget] = None):
    """A proper (optionally acyclic) colouring with at most k colours, or None.

    DSATUR vertex choice; a new colour is only ever the next unused one.
    Raises ``BudgetExhausted`` when the budget runs out.
    """
    budget = budget or Budget()
    adj = G.adj_masks
    color = [0] * (G.n + 1)
    cm = [0] * (k + 2)
    nodes = 0
    deadline = time.monotonic() + budget.seconds

    def ok(v: int, c: int) -> bool:
        if adj[v] & cm[c]:
            return False
        if not acyclic:
            return True
        for c2 in range(1, k + 1):
            if c2 == c:
                continue
            N = adj[v] & cm[c2]
            if N & (N - 1) == 0:
                continue
            allowed = cm[c] | cm[c2]
            seen = 0
            while N:
                low = N & -N
                z = low.bit_length() - 1
                N ^= low
                if (seen >> z) & 1:
                    return False
                seen |= _comp(z, allowed, adj)
        return True

    def pick() -> int:
        best, best_key = 0, None
        for v in G.vertices:
            if color[v]:
                continue
            sat = len({color[w] for w in G.neighbors(v)} - {0})
            key = (sat, G.degree(v), -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def rec(done: int, used: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget.nodes or ((nodes & 1023) == 0 and time.monotonic() > deadline):
            raise BudgetExhausted
        if done == G.n:
            return True
        v = pick()
        for c in range(1, min(used + 1, k) + 1):
            if ok(v, c):
                color[v] = c
                cm[c] |= 1 << v
                if rec(done + 1, max(used, c)):
                    return True
                cm[c] &= ~(1 << v)
                color[v] = 0
        return False

    if rec(0, 0):
        return {v: color[v] for v in G.vertices}, nodes
    return None, nodes


def _vertex_number(G: Graph, acyclic: bool, budget: Optional[Budget]) -> SolveResult:
    budget = budget or Budget()
    kind = "acyclic-vertex" if acyclic else "proper-vertex"
    t0 = time.perf_counter()
    if G.n == 0:
        return SolveResult(FEASIBLE_S, 0, ColoringCertificate(kind, {}, 0), 0, 0.0, (0, 0))
    k = max(1, clique_number(G))
    if acyclic and G.m:
        k = max(k, 2)
    total = 0
    while True:
        try:
            col, nodes = k_coloring(G, k, acyclic, budget)
        except BudgetExhausted:
            return SolveResult(EXHAUSTED_S, None, None, total, time.perf_counter() - t0, (k, G.n))
        total += nodes
        if col is not None:
            cert = ColoringCertificate(kind, col, k)
            return SolveResult(FEASIBLE_S, k, cert, total, time.perf_counter() - t0, (k, k))
        k += 1


def chromatic_number(G: Graph, budget: Optional[Budget] = None) -> SolveResult:
    return _vertex_number(G, False, budget)


def acyclic_chromatic_number(G: Graph, budget: Optional[Budget] = None) -> SolveResult:
    return _vertex_number(G, True, budget)


def edge_chromatic_number(G: Graph, budget: Optional[Budget] = None) -> SolveResult:
    """chi'(G) as a minimum partition into matchings, returned as an edge colouring."""
    res = min_cover(SolveRequest(G, ForestClass.MATCHING, "partition", budget=budget or Budget()))
    if res.status != FEASIBLE_S:
        return res
    assignment = {}
    if res.certificate is not None:
        for i, part in enumerate(res.certificate.parts, 1):
            for e in part:
                assignment[e] = i
    res.certificate = ColoringCertificate("proper-edge", assignment, res.k or 0)
    return res
