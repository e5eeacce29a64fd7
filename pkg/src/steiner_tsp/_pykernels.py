"""Pure-Python implementations of the hot loops.

Every function here has a twin in ``_ckernels.pyx`` with the same signature
and the same (deterministic) result. ``steiner_tsp.kernels`` picks one at
import time.
"""

import numpy as np

BACKEND = "python"

INF = 1 << 30


def bfs_all_pairs(n, indptr, indices):
    """Hop distances from every vertex, -1 where unreachable.

    ``indptr``/``indices`` are a CSR adjacency (int32 arrays).
    """
    ptr = indptr.tolist()
    idx = indices.tolist()
    nbrs = [idx[ptr[v]:ptr[v + 1]] for v in range(n)]
    out = np.full((n, n), -1, dtype=np.int32)
    for s in range(n):
        row = [-1] * n
        row[s] = 0
        frontier = [s]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for u in frontier:
                for w in nbrs[u]:
                    if row[w] < 0:
                        row[w] = d
                        nxt.append(w)
            frontier = nxt
        out[s, :] = row
    return out


def held_karp(dist):
    """Exact minimum Hamiltonian cycle over a complete metric.

    Returns ``(length, tour)`` where ``tour`` starts at vertex 0. Ties are
    broken towards the smallest predecessor index.
    """
    d = dist.tolist() if hasattr(dist, "tolist") else [list(r) for r in dist]
    n = len(d)
    if n == 0:
        return 0, []
    if n == 1:
        return 0, [0]
    if n == 2:
        return d[0][1] + d[1][0], [0, 1]
    m = n - 1
    full = (1 << m) - 1
    dp = [[INF] * m for _ in range(1 << m)]
    parent = [[-1] * m for _ in range(1 << m)]
    for j in range(m):
        dp[1 << j][j] = d[0][j + 1]
    for mask in range(1, full + 1):
        row = dp[mask]
        for j in range(m):
            cur = row[j]
            if cur >= INF or not (mask >> j) & 1:
                continue
            dj = d[j + 1]
            for k in range(m):
                if (mask >> k) & 1:
                    continue
                nmask = mask | (1 << k)
                cand = cur + dj[k + 1]
                if cand < dp[nmask][k] or (cand == dp[nmask][k] and j < parent[nmask][k]):
                    dp[nmask][k] = cand
                    parent[nmask][k] = j
    best = INF
    last = -1
    for j in range(m):
        cand = dp[full][j] + d[j + 1][0]
        if cand < best:
            best = cand
            last = j
    tour = []
    mask = full
    j = last
    while j >= 0:
        tour.append(j + 1)
        pj = parent[mask][j]
        mask &= ~(1 << j)
        j = pj
    tour.append(0)
    tour.reverse()
    return best, tour


def shortest_steiner_cycle(n, adj_masks, required_mask, dist):
    """Shortest simple cycle containing every vertex of ``required_mask``.

    Exhaustive branch and bound over simple paths. Each cycle is explored
    once, in canonical form: it starts at its smallest vertex and its second
    vertex is smaller than its last one. Neighbours are tried in increasing
    order, so among minimum-length cycles the lexicographically smallest
    canonical sequence is returned. Returns None when no cycle exists.
    """
    adj = [int(a) for a in adj_masks]
    d = dist.tolist() if hasattr(dist, "tolist") else dist
    req = int(required_mask)
    if req == 0:
        raise ValueError("required set must be non-empty")
    lowest_req = (req & -req).bit_length() - 1
    best = [n + 1, None]
    path = []

    def reach(src, free):
        seen = 1 << src
        frontier = seen
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                nxt |= adj[b.bit_length() - 1]
                f ^= b
            nxt &= free & ~seen
            seen |= nxt
            frontier = nxt
        return seen

    def extend(v, visited, rem, start, above):
        k = len(path)
        nb = adj[v]
        # closing edge back to start
        if k >= 3 and rem == 0 and (nb >> start) & 1 and path[1] < v and k < best[0]:
            best[0] = k
            best[1] = list(path)
        cand = nb & above & ~visited
        while cand:
            b = cand & -cand
            cand ^= b
            w = b.bit_length() - 1
            rem2 = rem & ~b
            nrem = bin(rem2).count("1")
            back = d[w][start]
            need = nrem + 1 if nrem else back
            if back > need:
                need = back
            if k + need >= best[0]:
                continue
            if rem2:
                r = rem2
                bad = False
                dw = d[w]
                while r:
                    rb = r & -r
                    r ^= rb
                    x = rb.bit_length() - 1
                    if k + dw[x] + d[x][start] >= best[0]:
                        bad = True
                        break
                if bad:
                    continue
            visited2 = visited | b
            free = (above & ~visited2) | (1 << start)
            target = rem2 | (1 << start)
            if reach(w, free) & target != target:
                continue
            path.append(w)
            extend(w, visited2, rem2, start, above)
            path.pop()

    for start in range(lowest_req + 1):
        above = ((1 << n) - 1) & ~((1 << (start + 1)) - 1)
        rem = req & ~(1 << start)
        if rem & ~above:
            continue
        path.append(start)
        extend(start, 1 << start, rem, start, above)
        path.pop()
    return best[1]
