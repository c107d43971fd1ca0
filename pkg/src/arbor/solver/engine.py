"""Exact minimum covers/partitions of E(G) by forest-class parts."""
from __future__ import annotations

import os
import time
from dataclasses import dataclass, field, replace
from typing import Mapping, Optional, Union

from ..certificates import ColoringCertificate, CoverCertificate
from ..classes import ForestClass
from ..graph import Edge, Graph
from ..structure import nash_williams_density
from . import kernel
from ._pysearch import EXHAUSTED, FEASIBLE, INFEASIBLE

FEASIBLE_S = "feasible"
INFEASIBLE_S = "infeasible"
EXHAUSTED_S = "budget-exhausted"
_STATUS = {FEASIBLE: FEASIBLE_S, INFEASIBLE: INFEASIBLE_S, EXHAUSTED: EXHAUSTED_S}

DEFAULT_TIME_LIMIT = 60.0
UNLIMITED = 1 << 30


def default_node_limit() -> int:
    return int(os.environ.get("ARBOR_BUDGET_NODES", 10_000_000))


@dataclass(frozen=True)
class Budget:
    nodes: int = field(default_factory=default_node_limit)
    seconds: float = DEFAULT_TIME_LIMIT


@dataclass(frozen=True)
class SolveRequest:
    graph: Graph
    cls: ForestClass
    mode: str = "cover"
    k: Optional[int] = None  # None: minimise
    load_caps: Mapping[int, int] = field(default_factory=dict)
    load_floors: Mapping[int, int] = field(default_factory=dict)
    budget: Budget = field(default_factory=Budget)
    lower_bound: int = 0
    symmetry: bool = True
    reduce_cover: bool = True
    kernel: Optional[str] = None

    def __post_init__(self):
        if self.mode not in ("cover", "partition"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.k is not None and self.k < 1:
            raise ValueError("k must be >= 1 when deciding")
        for name, bounds in (("cap", self.load_caps), ("floor", self.load_floors)):
            for v, t in bounds.items():
                if not 1 <= v <= self.graph.n:
                    raise ValueError(f"load {name} on unknown vertex {v}")
                if t < 0 or (self.k is not None and t > self.k):
                    raise ValueError(f"load {name} {t} at vertex {v} outside [0, k]")


@dataclass
class SolveResult:
    status: str
    k: Optional[int]
    certificate: Union[CoverCertificate, ColoringCertificate, None]
    nodes: int
    seconds: float
    bounds: tuple[int, int]

    @property
    def feasible(self) -> bool:
        return self.status == FEASIBLE_S

    @property
    def exit_code(self) -> int:
        return {FEASIBLE_S: 0, INFEASIBLE_S: 1, EXHAUSTED_S: 2}[self.status]


def edge_order(G: Graph) -> list[Edge]:
    """Edges by triangle count (desc), then endpoint degree sum (desc), then id."""
    def key(e):
        u, v = e
        tri = len(G.neighbors(u) & G.neighbors(v))
        return (-tri, -(G.degree(u) + G.degree(v)), u, v)

    return sorted(G.edges, key=key)


def decide_cover(req: SolveRequest) -> SolveResult:
    """Is there a cover (or partition) of E(G) by at most ``req.k`` parts?"""
    if req.k is None:
        raise ValueError("decide_cover needs req.k")
    G, k = req.graph, req.k
    t0 = time.perf_counter()
    mode = req.mode
    # For downward-closed classes, dropping duplicate memberships turns a cover
    # into a partition without raising any load, so only floors need the cover search.
    partition = mode == "partition" or (
        req.reduce_cover and req.cls.downward_closed and not any(req.load_floors.values())
    )
    order = edge_order(G)
    n = G.n
    adj = [m >> 1 for m in G.adj_masks[1:]]
    eu = [u - 1 for u, _ in order]
    ev = [v - 1 for _, v in order]
    caps = [req.load_caps.get(v, UNLIMITED) for v in G.vertices]
    floors = [req.load_floors.get(v, 0) for v in G.vertices]
    search = kernel.get(req.kernel, n, k)
    status, sets, nodes = search(
        n, adj, eu, ev, req.cls.code, partition, k, caps, floors,
        req.budget.nodes, req.budget.seconds, req.symmetry,
    )
    cert = None
    if status == FEASIBLE:
        parts: list[list[Edge]] = [[] for _ in range(k)]
        for e, s in zip(order, sets):
            for p in range(k):
                if (s >> p) & 1:
                    parts[p].append(e)
        cert = CoverCertificate(req.cls, mode, tuple(p for p in parts if p))
    lo = 0 if status != INFEASIBLE else k + 1
    hi = cert.k if cert is not None else G.m
    return SolveResult(_STATUS[status], cert.k if cert else None, cert, nodes,
                       time.perf_counter() - t0, (lo, hi))


def lower_bound(G: Graph, cls: ForestClass) -> int:
    """A sound lower bound on the optimum for any class and mode."""
    if G.m == 0:
        return 0
    lo = max(1, nash_williams_density(G).value)
    if cls.matching:
        lo = max(lo, G.max_degree(), -(-G.m // max(1, G.n // 2)))
    return lo


def min_cover(req: SolveRequest) -> SolveResult:
    """Optimum k by iterative deepening from a sound lower bound."""
    G = req.graph
    t0 = time.perf_counter()
    if G.m == 0:
        if any(req.load_floors.values()):
            return SolveResult(INFEASIBLE_S, None, None, 0, 0.0, (1, 0))
        return SolveResult(FEASIBLE_S, 0, None, 0, 0.0, (0, 0))
    # A floor of t needs at least t parts.
    lo = max(req.lower_bound, lower_bound(G, req.cls), max(req.load_floors.values(), default=0))
    nodes = 0
    k = lo
    while True:
        res = decide_cover(replace(req, k=k))
        nodes += res.nodes
        if res.status == FEASIBLE_S:
            return SolveResult(FEASIBLE_S, res.k, res.certificate, nodes,
                               time.perf_counter() - t0, (res.k, res.k))
        if res.status == EXHAUSTED_S:
            return SolveResult(EXHAUSTED_S, None, None, nodes,
                               time.perf_counter() - t0, (k, G.m))
        k += 1
        if k > G.m and not req.load_caps and not req.load_floors:
            # Single edges form valid parts of every class.
            raise AssertionError("search missed the one-edge-per-part cover")
        # Past m + max floor, extra parts can only duplicate existing ones.
        if k > G.m + max(req.load_floors.values(), default=0):
            return SolveResult(INFEASIBLE_S, None, None, nodes,
                               time.perf_counter() - t0, (k, k))


def solve(req: SolveRequest) -> SolveResult:
    return min_cover(req) if req.k is None else decide_cover(req)


def strong_chromatic_index(G: Graph, budget: Optional[Budget] = None) -> SolveResult:
    return min_cover(SolveRequest(G, ForestClass.INDUCED_MATCHING, "cover",
                                  budget=budget or Budget()))
