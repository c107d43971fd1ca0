# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled backtracking kernel; mirrors ``_pysearch.search`` step for step.

Masks are 64-bit, so callers must keep n <= 64 and k <= 64.
"""
from libc.stdlib cimport calloc, free

import time

ctypedef unsigned long long u64

cdef extern from *:
    int popcount "__builtin_popcountll"(unsigned long long) nogil
    int ctz "__builtin_ctzll"(unsigned long long) nogil

cdef enum:
    K_FOREST = 0
    K_WIF = 1
    K_IF = 2
    K_SF = 3
    K_WISF = 4
    K_ISF = 5
    K_MATCHING = 6
    K_IM = 7
    MAXK = 64


cdef struct State:
    int n
    int m
    int k
    int cls
    int partition
    int induced
    u64 everything
    u64 *adj
    int *eu
    int *ev
    int *pos
    int *lastpos
    long long *caps
    long long *floors
    u64 *U
    u64 *P
    long long *load
    u64 *sets
    long long nodes
    long long node_limit
    double deadline
    int exhausted


cdef inline u64 lowmask(int j) noexcept nogil:
    if j >= 64:
        return <u64>0xFFFFFFFFFFFFFFFF
    return ((<u64>1) << j) - 1


cdef inline u64 comp(int start, u64 allowed, u64 *adjl) noexcept nogil:
    cdef u64 c = (<u64>1) << start
    cdef u64 frontier = c
    cdef u64 nxt, f
    cdef int x
    while frontier:
        nxt = 0
        f = frontier
        while f:
            x = ctz(f)
            f &= f - 1
            nxt |= adjl[x]
        nxt &= allowed & ~c
        c |= nxt
        frontier = nxt
    return c


cdef int add_vertex(State *st, int p, int w, int i) noexcept nogil:
    cdef u64 Up, N, Un, seen, f
    cdef int z, q, big, x
    if st.load[w] >= st.caps[w]:
        return 0
    Up = st.U[p]
    N = st.adj[w] & Up
    f = N
    while f:
        z = ctz(f)
        f &= f - 1
        q = st.pos[w * st.n + z]
        if q < i and not ((st.sets[q] >> p) & 1):
            return 0
    Un = Up | ((<u64>1) << w)
    if st.cls == K_IF:
        seen = 0
        f = N
        while f:
            z = ctz(f)
            f &= f - 1
            if (seen >> z) & 1:
                return 0
            seen |= comp(z, Up, st.adj)
    elif st.cls == K_ISF:
        big = 0
        f = comp(w, Un, st.adj)
        while f:
            x = ctz(f)
            f &= f - 1
            if popcount(st.adj[x] & Un) >= 2:
                big += 1
        if big > 1:
            return 0
    else:
        if N & (N - 1):
            return 0
        if N and popcount(st.adj[ctz(N)] & Un) > 1:
            return 0
    st.U[p] = Un
    st.load[w] += 1
    return 1


cdef int apply_induced(State *st, int p, int i, u64 *saved, int *a1, int *a2) noexcept nogil:
    cdef int u = st.eu[i]
    cdef int v = st.ev[i]
    saved[0] = st.U[p]
    a1[0] = -1
    a2[0] = -1
    if not ((st.U[p] >> u) & 1):
        if not add_vertex(st, p, u, i):
            st.U[p] = saved[0]
            return 0
        a1[0] = u
    if not ((st.U[p] >> v) & 1):
        if not add_vertex(st, p, v, i):
            if a1[0] >= 0:
                st.load[a1[0]] -= 1
            st.U[p] = saved[0]
            a1[0] = -1
            return 0
        a2[0] = v
    return 1


cdef inline void undo_induced(State *st, int p, u64 saved, int a1, int a2) noexcept nogil:
    st.U[p] = saved
    if a1 >= 0:
        st.load[a1] -= 1
    if a2 >= 0:
        st.load[a2] -= 1


cdef int apply_plain(State *st, int p, int i, int *nu, int *nv) noexcept nogil:
    cdef int u = st.eu[i]
    cdef int v = st.ev[i]
    cdef u64 *Pp = st.P + p * st.n
    cdef u64 Cu, C, f
    cdef int inside, big, x, d
    if st.cls == K_MATCHING:
        if Pp[u] or Pp[v]:
            return 0
    else:
        Cu = comp(u, st.everything, Pp)
        if (Cu >> v) & 1:
            return 0
        if st.cls != K_FOREST:
            C = Cu | comp(v, st.everything, Pp)
            if st.cls == K_WIF or st.cls == K_WISF:
                inside = 0
                f = C
                while f:
                    x = ctz(f)
                    f &= f - 1
                    inside += popcount(st.adj[x] & C)
                if inside != 2 * (popcount(C) - 1):
                    return 0
            if st.cls == K_SF or st.cls == K_WISF:
                big = 0
                f = C
                while f:
                    x = ctz(f)
                    f &= f - 1
                    d = popcount(Pp[x]) + (1 if (x == u or x == v) else 0)
                    if d >= 2:
                        big += 1
                if big > 1:
                    return 0
    nu[0] = 1 if Pp[u] == 0 else 0
    nv[0] = 1 if Pp[v] == 0 else 0
    if (nu[0] and st.load[u] >= st.caps[u]) or (nv[0] and st.load[v] >= st.caps[v]):
        return 0
    Pp[u] |= (<u64>1) << v
    Pp[v] |= (<u64>1) << u
    if nu[0]:
        st.load[u] += 1
    if nv[0]:
        st.load[v] += 1
    return 1


cdef inline void undo_plain(State *st, int p, int i, int nu, int nv) noexcept nogil:
    cdef int u = st.eu[i]
    cdef int v = st.ev[i]
    cdef u64 *Pp = st.P + p * st.n
    Pp[u] &= ~((<u64>1) << v)
    Pp[v] &= ~((<u64>1) << u)
    if nu:
        st.load[u] -= 1
    if nv:
        st.load[v] -= 1


cdef int single_ok(State *st, int p, int i) noexcept nogil:
    cdef u64 saved
    cdef int a1, a2
    if st.induced:
        if apply_induced(st, p, i, &saved, &a1, &a2):
            undo_induced(st, p, saved, a1, a2)
            return 1
        return 0
    if apply_plain(st, p, i, &a1, &a2):
        undo_plain(st, p, i, a1, a2)
        return 1
    return 0


cdef int try_set(State *st, int i, u64 S, u64 forced, int used, int j):
    cdef u64 rest = S & ~forced
    cdef int parts[MAXK]
    cdef u64 saved[MAXK]
    cdef int a1[MAXK]
    cdef int a2[MAXK]
    cdef int cnt = 0
    cdef int ok = 1
    cdef int found = 0
    cdef int p
    cdef int u = st.eu[i]
    cdef int v = st.ev[i]
    while rest:
        p = ctz(rest)
        rest &= rest - 1
        if st.induced:
            ok = apply_induced(st, p, i, &saved[cnt], &a1[cnt], &a2[cnt])
        else:
            ok = apply_plain(st, p, i, &a1[cnt], &a2[cnt])
        if not ok:
            break
        parts[cnt] = p
        cnt += 1
    if ok:
        st.sets[i] = S
        if not ((st.lastpos[u] == i and st.load[u] < st.floors[u])
                or (st.lastpos[v] == i and st.load[v] < st.floors[v])):
            found = rec(st, i + 1, used + j)
        if not found:
            st.sets[i] = 0
    while cnt > 0:
        cnt -= 1
        if st.induced:
            undo_induced(st, parts[cnt], saved[cnt], a1[cnt], a2[cnt])
        else:
            undo_plain(st, parts[cnt], i, a1[cnt], a2[cnt])
    return found


cdef int rec(State *st, int i, int used):
    cdef int u, v, p, s, j, r, t, ncand, newmax, x
    cdef u64 both, forced, fresh, S
    cdef int cand[MAXK]
    cdef int idx[MAXK]
    st.nodes += 1
    if st.nodes > st.node_limit:
        st.exhausted = 1
        return 0
    if (st.nodes & 1023) == 0 and time.monotonic() > st.deadline:
        st.exhausted = 1
        return 0
    if i == st.m:
        for x in range(st.n):
            if st.load[x] < st.floors[x]:
                return 0
        return 1
    u = st.eu[i]
    v = st.ev[i]
    both = ((<u64>1) << u) | ((<u64>1) << v)
    forced = 0
    if st.induced:
        for p in range(used):
            if (st.U[p] & both) == both:
                forced |= (<u64>1) << p

    if st.partition:
        if forced:
            if forced & (forced - 1):
                return 0
            return try_set(st, i, forced, forced, used, 0)
        for p in range(used):
            if single_ok(st, p, i):
                if try_set(st, i, (<u64>1) << p, 0, used, 0):
                    return 1
                if st.exhausted:
                    return 0
        if used < st.k:
            return try_set(st, i, (<u64>1) << used, 0, used, 1)
        return 0

    ncand = 0
    for p in range(used):
        if not ((forced >> p) & 1) and single_ok(st, p, i):
            cand[ncand] = p
            ncand += 1
    newmax = st.k - used
    for s in range(ncand + newmax + 1):
        for j in range((s if s < newmax else newmax) + 1):
            r = s - j
            if r > ncand:
                continue
            fresh = lowmask(j) << used if used < 64 else 0
            for t in range(r):
                idx[t] = t
            while True:
                S = forced | fresh
                for t in range(r):
                    S |= (<u64>1) << cand[idx[t]]
                if S:
                    if try_set(st, i, S, forced, used, j):
                        return 1
                    if st.exhausted:
                        return 0
                # next r-combination of range(ncand), lexicographic
                t = r - 1
                while t >= 0 and idx[t] == ncand - r + t:
                    t -= 1
                if t < 0:
                    break
                idx[t] += 1
                t += 1
                while t < r:
                    idx[t] = idx[t - 1] + 1
                    t += 1
    return 0


def search(int n, adj, eu, ev, int cls, partition, int k, caps, floors,
           long long node_limit, double time_limit, symmetry=True):
    """Same contract as ``arbor.solver._pysearch.search``."""
    cdef State st
    cdef int i, m = len(eu)
    cdef int found
    if n > 64 or k > MAXK:
        raise ValueError("compiled kernel supports n <= 64 and k <= 64")
    st.n = n
    st.m = m
    st.k = k
    st.cls = cls
    st.partition = 1 if partition else 0
    st.induced = 1 if cls in (K_IF, K_ISF, K_IM) else 0
    st.everything = lowmask(n)
    st.adj = <u64 *>calloc(max(n, 1), sizeof(u64))
    st.eu = <int *>calloc(max(m, 1), sizeof(int))
    st.ev = <int *>calloc(max(m, 1), sizeof(int))
    st.pos = <int *>calloc(max(n * n, 1), sizeof(int))
    st.lastpos = <int *>calloc(max(n, 1), sizeof(int))
    st.caps = <long long *>calloc(max(n, 1), sizeof(long long))
    st.floors = <long long *>calloc(max(n, 1), sizeof(long long))
    st.U = <u64 *>calloc(max(k, 1), sizeof(u64))
    st.P = <u64 *>calloc(max(k * n, 1), sizeof(u64))
    st.load = <long long *>calloc(max(n, 1), sizeof(long long))
    st.sets = <u64 *>calloc(max(m, 1), sizeof(u64))
    try:
        for i in range(n):
            st.adj[i] = adj[i]
            st.caps[i] = caps[i]
            st.floors[i] = floors[i]
            st.lastpos[i] = -1
        for i in range(n * n):
            st.pos[i] = -1
        for i in range(m):
            st.eu[i] = eu[i]
            st.ev[i] = ev[i]
            st.pos[st.eu[i] * n + st.ev[i]] = i
            st.pos[st.ev[i] * n + st.eu[i]] = i
            st.lastpos[st.eu[i]] = i
            st.lastpos[st.ev[i]] = i
        st.nodes = 0
        st.node_limit = node_limit
        st.deadline = time.monotonic() + time_limit
        st.exhausted = 0
        found = rec(&st, 0, 0 if symmetry else k)
        if st.exhausted:
            return 2, None, st.nodes
        if found:
            return 0, [int(st.sets[i]) for i in range(m)], st.nodes
        return 1, None, st.nodes
    finally:
        free(st.adj)
        free(st.eu)
        free(st.ev)
        free(st.pos)
        free(st.lastpos)
        free(st.caps)
        free(st.floors)
        free(st.U)
        free(st.P)
        free(st.load)
        free(st.sets)
