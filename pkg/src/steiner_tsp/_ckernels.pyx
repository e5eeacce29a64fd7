# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the loops in ``_pykernels``. Results must match exactly."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int32_t
from libc.stdlib cimport malloc, free

cnp.import_array()

BACKEND = "cython"

cdef int32_t INF = 1 << 30


def bfs_all_pairs(int n, const int32_t[::1] indptr, const int32_t[::1] indices):
    out = np.full((n, n), -1, dtype=np.int32)
    cdef int32_t[:, ::1] o = out
    cdef int32_t* queue = <int32_t*> malloc(max(n, 1) * sizeof(int32_t))
    cdef int s, head, tail, u, w, e
    try:
        for s in range(n):
            o[s, s] = 0
            queue[0] = s
            head = 0
            tail = 1
            while head < tail:
                u = queue[head]
                head += 1
                for e in range(indptr[u], indptr[u + 1]):
                    w = indices[e]
                    if o[s, w] < 0:
                        o[s, w] = o[s, u] + 1
                        queue[tail] = w
                        tail += 1
    finally:
        free(queue)
    return out


def held_karp(dist):
    cdef const int32_t[:, ::1] d = np.ascontiguousarray(dist, dtype=np.int32)
    cdef int n = d.shape[0]
    if n == 0:
        return 0, []
    if n == 1:
        return 0, [0]
    if n == 2:
        return int(d[0, 1] + d[1, 0]), [0, 1]
    cdef int m = n - 1
    cdef Py_ssize_t full = (<Py_ssize_t> 1 << m) - 1
    dp_arr = np.full(((<Py_ssize_t> 1) << m, m), INF, dtype=np.int32)
    par_arr = np.full(((<Py_ssize_t> 1) << m, m), -1, dtype=np.int8)
    cdef int32_t[:, ::1] dp = dp_arr
    cdef signed char[:, ::1] par = par_arr
    cdef Py_ssize_t mask, nmask
    cdef int j, k
    cdef int32_t cur, cand
    for j in range(m):
        dp[(<Py_ssize_t> 1) << j, j] = d[0, j + 1]
    for mask in range(1, full + 1):
        for j in range(m):
            cur = dp[mask, j]
            if cur >= INF or not ((mask >> j) & 1):
                continue
            for k in range(m):
                if (mask >> k) & 1:
                    continue
                nmask = mask | ((<Py_ssize_t> 1) << k)
                cand = cur + d[j + 1, k + 1]
                if cand < dp[nmask, k]:
                    dp[nmask, k] = cand
                    par[nmask, k] = j
    cdef int32_t best = INF
    cdef int last = -1
    for j in range(m):
        cand = dp[full, j] + d[j + 1, 0]
        if cand < best:
            best = cand
            last = j
    tour = []
    mask = full
    j = last
    cdef int pj
    while j >= 0:
        tour.append(j + 1)
        pj = par[mask, j]
        mask &= ~((<Py_ssize_t> 1) << j)
        j = pj
    tour.append(0)
    tour.reverse()
    return int(best), tour


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef inline int lowbit(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef struct Search:
    int n
    uint64_t* adj
    const int32_t* dist
    int* path
    int plen
    int best_len
    int* best_path
    int start
    uint64_t above


cdef uint64_t reach(Search* S, int src, uint64_t free_mask) nogil:
    cdef uint64_t seen = (<uint64_t> 1) << src
    cdef uint64_t frontier = seen
    cdef uint64_t nxt, f
    while frontier:
        nxt = 0
        f = frontier
        while f:
            nxt |= S.adj[lowbit(f)]
            f &= f - 1
        nxt &= free_mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen


cdef void extend(Search* S, int v, uint64_t visited, uint64_t rem) nogil:
    cdef int k = S.plen
    cdef int start = S.start
    cdef int n = S.n
    cdef uint64_t nb = S.adj[v]
    cdef uint64_t cand, b, rem2, r, visited2, free_mask, target
    cdef int w, nrem, back, need, x, i
    cdef bint bad
    if k >= 3 and rem == 0 and ((nb >> start) & 1) and S.path[1] < v and k < S.best_len:
        S.best_len = k
        for i in range(k):
            S.best_path[i] = S.path[i]
    cand = nb & S.above & ~visited
    while cand:
        w = lowbit(cand)
        b = (<uint64_t> 1) << w
        cand &= cand - 1
        rem2 = rem & ~b
        nrem = popcount(rem2)
        back = S.dist[w * n + start]
        need = nrem + 1 if nrem else back
        if back > need:
            need = back
        if k + need >= S.best_len:
            continue
        if rem2:
            r = rem2
            bad = False
            while r:
                x = lowbit(r)
                r &= r - 1
                if k + S.dist[w * n + x] + S.dist[x * n + start] >= S.best_len:
                    bad = True
                    break
            if bad:
                continue
        visited2 = visited | b
        free_mask = (S.above & ~visited2) | ((<uint64_t> 1) << start)
        target = rem2 | ((<uint64_t> 1) << start)
        if (reach(S, w, free_mask) & target) != target:
            continue
        S.path[S.plen] = w
        S.plen += 1
        extend(S, w, visited2, rem2)
        S.plen -= 1


def shortest_steiner_cycle(int n, adj_masks, required_mask, dist):
    if n > 63:
        raise ValueError("compiled search supports at most 63 vertices")
    cdef uint64_t req = <uint64_t> int(required_mask)
    if req == 0:
        raise ValueError("required set must be non-empty")
    cdef const int32_t[:, ::1] d = np.ascontiguousarray(dist, dtype=np.int32)
    cdef Search S
    cdef int lowest_req = lowbit(req)
    cdef int start, i
    cdef uint64_t all_mask = ((<uint64_t> 1) << n) - 1
    cdef uint64_t rem
    S.n = n
    S.adj = <uint64_t*> malloc(max(n, 1) * sizeof(uint64_t))
    S.path = <int*> malloc((n + 1) * sizeof(int))
    S.best_path = <int*> malloc((n + 1) * sizeof(int))
    S.dist = &d[0, 0]
    S.best_len = n + 1
    try:
        for i in range(n):
            S.adj[i] = <uint64_t> int(adj_masks[i])
        with nogil:
            for start in range(lowest_req + 1):
                S.start = start
                S.above = all_mask & ~(((<uint64_t> 1) << (start + 1)) - 1)
                rem = req & ~((<uint64_t> 1) << start)
                if rem & ~S.above:
                    continue
                S.path[0] = start
                S.plen = 1
                extend(&S, start, (<uint64_t> 1) << start, rem)
        if S.best_len > n:
            return None
        return [S.best_path[i] for i in range(S.best_len)]
    finally:
        free(S.adj)
        free(S.path)
        free(S.best_path)
