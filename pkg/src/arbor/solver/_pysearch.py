"""Pure-Python backtracking kernel (fallback for the compiled ``_csearch``).

Both kernels walk the same search tree in the same order, so for equal
inputs they return identical assignments and node counts.

Vertices are ``0..n-1`` with neighbourhoods given as int bitmasks; edges are
visited in the order of ``eu``/``ev``. Each edge receives a bitmask of the
parts containing it. For the induced classes a part is determined by its
vertex set U (the part is exactly G[U]); the other classes keep per-part
adjacency masks.
"""
from __future__ import annotations

import time
from itertools import combinations

FEASIBLE, INFEASIBLE, EXHAUSTED = 0, 1, 2
FOREST, WIF, IF, SF, WISF, ISF, MATCHING, IM = range(8)
INDUCED = (IF, ISF, IM)


class _Exhausted(Exception):
    pass


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _comp(start: int, allowed: int, adj) -> int:
    comp = 1 << start
    frontier = comp
    while frontier:
        nxt = 0
        for x in _bits(frontier):
            nxt |= adj[x]
        nxt &= allowed & ~comp
        comp |= nxt
        frontier = nxt
    return comp


def search(n, adj, eu, ev, cls, partition, k, caps, floors,
           node_limit, time_limit, symmetry=True):
    """Find at most ``k`` parts of class ``cls`` covering (or partitioning) the edges.

    Returns ``(status, sets, nodes)`` where ``sets[i]`` is the part mask of
    edge ``i`` when status is FEASIBLE.
    """
    m = len(eu)
    induced = cls in INDUCED
    everything = (1 << n) - 1
    pos = [[-1] * n for _ in range(n)]
    lastpos = [-1] * n
    for i in range(m):
        pos[eu[i]][ev[i]] = pos[ev[i]][eu[i]] = i
        lastpos[eu[i]] = lastpos[ev[i]] = i
    U = [0] * k
    P = [[0] * n for _ in range(k)]
    load = [0] * n
    sets = [0] * m
    nodes = 0
    deadline = time.monotonic() + time_limit

    def add_vertex(p, w, i):
        if load[w] >= caps[w]:
            return False
        Up = U[p]
        N = adj[w] & Up
        for z in _bits(N):
            q = pos[w][z]
            if q < i and not (sets[q] >> p) & 1:
                return False
        Un = Up | (1 << w)
        if cls == IF:
            seen = 0
            for z in _bits(N):
                if (seen >> z) & 1:
                    return False
                seen |= _comp(z, Up, adj)
        elif cls == ISF:
            big = 0
            for x in _bits(_comp(w, Un, adj)):
                if bin(adj[x] & Un).count("1") >= 2:
                    big += 1
            if big > 1:
                return False
        else:
            if N & (N - 1):
                return False
            if N and bin(adj[N.bit_length() - 1] & Un).count("1") > 1:
                return False
        U[p] = Un
        load[w] += 1
        return True

    def apply_induced(p, i):
        u, v = eu[i], ev[i]
        saved = U[p]
        added = []
        for w in (u, v):
            if not (U[p] >> w) & 1:
                if not add_vertex(p, w, i):
                    for x in added:
                        load[x] -= 1
                    U[p] = saved
                    return None
                added.append(w)
        return (p, saved, added)

    def undo_induced(rec):
        p, saved, added = rec
        U[p] = saved
        for x in added:
            load[x] -= 1

    def apply_plain(p, i):
        u, v = eu[i], ev[i]
        Pp = P[p]
        if cls == MATCHING:
            if Pp[u] or Pp[v]:
                return None
        else:
            Cu = _comp(u, everything, Pp)
            if (Cu >> v) & 1:
                return None
            if cls != FOREST:
                C = Cu | _comp(v, everything, Pp)
                if cls == WIF or cls == WISF:
                    inside = 0
                    for x in _bits(C):
                        inside += bin(adj[x] & C).count("1")
                    if inside != 2 * (bin(C).count("1") - 1):
                        return None
                if cls == SF or cls == WISF:
                    big = 0
                    for x in _bits(C):
                        d = bin(Pp[x]).count("1") + (x == u or x == v)
                        if d >= 2:
                            big += 1
                    if big > 1:
                        return None
        nu = Pp[u] == 0
        nv = Pp[v] == 0
        if (nu and load[u] >= caps[u]) or (nv and load[v] >= caps[v]):
            return None
        Pp[u] |= 1 << v
        Pp[v] |= 1 << u
        if nu:
            load[u] += 1
        if nv:
            load[v] += 1
        return (p, u, v, nu, nv)

    def undo_plain(rec):
        p, u, v, nu, nv = rec
        Pp = P[p]
        Pp[u] &= ~(1 << v)
        Pp[v] &= ~(1 << u)
        if nu:
            load[u] -= 1
        if nv:
            load[v] -= 1

    apply_part = apply_induced if induced else apply_plain
    undo_part = undo_induced if induced else undo_plain

    def options(i, used, forced):
        """Candidate part masks for edge i, smallest sets first."""
        if partition:
            if forced:
                if forced & (forced - 1) == 0:
                    yield forced, 0
                return
            for p in range(used):
                r = apply_part(p, i)
                if r is not None:
                    undo_part(r)
                    yield 1 << p, 0
            if used < k:
                yield 1 << used, 1
            return
        cand = []
        for p in range(used):
            if not (forced >> p) & 1:
                r = apply_part(p, i)
                if r is not None:
                    undo_part(r)
                    cand.append(p)
        newmax = k - used
        for s in range(len(cand) + newmax + 1):
            for j in range(min(s, newmax) + 1):
                if s - j > len(cand):
                    continue
                fresh = ((1 << j) - 1) << used
                for T in combinations(cand, s - j):
                    S = forced | fresh
                    for p in T:
                        S |= 1 << p
                    if S:
                        yield S, j

    def rec(i, used):
        nonlocal nodes
        nodes += 1
        if nodes > node_limit or ((nodes & 1023) == 0 and time.monotonic() > deadline):
            raise _Exhausted
        if i == m:
            return all(load[x] >= floors[x] for x in range(n))
        u, v = eu[i], ev[i]
        both = (1 << u) | (1 << v)
        forced = 0
        if induced:
            for p in range(used):
                if U[p] & both == both:
                    forced |= 1 << p
        for S, j in options(i, used, forced):
            done = []
            ok = True
            for p in _bits(S & ~forced):
                r = apply_part(p, i)
                if r is None:
                    ok = False
                    break
                done.append(r)
            if ok:
                sets[i] = S
                if not ((lastpos[u] == i and load[u] < floors[u])
                        or (lastpos[v] == i and load[v] < floors[v])):
                    if rec(i + 1, used + j):
                        return True
                sets[i] = 0
            for r in reversed(done):
                undo_part(r)
        return False

    start_used = 0 if symmetry else k
    try:
        found = rec(0, start_used)
    except _Exhausted:
        return EXHAUSTED, None, nodes
    if found:
        return FEASIBLE, list(sets), nodes
    return INFEASIBLE, None, nodes
