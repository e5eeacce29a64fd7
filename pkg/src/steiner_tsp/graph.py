"""Undirected simple graphs, the shortest-path metric, and connectivity.

Graphs are immutable. Vertices are ``0 .. n-1``.
"""

from collections import deque
from dataclasses import dataclass
from itertools import combinations
import math

import numpy as np

from . import kernels
from ._flow import VertexSplitFlow
from .errors import (
    Disconnected,
    IndexOutOfRange,
    NotTwoConnectedBetween,
    SelfLoop,
    SubsetTooLarge,
)

INDEPENDENCE_SUBSET_LIMIT = 20


class Graph:
    """Undirected simple unweighted graph on vertices ``0 .. n-1``."""

    __slots__ = ("n", "_adj", "_nbrs", "_m", "_cache")

    def __init__(self, n, adjacency):
        self.n = n
        self._adj = tuple(frozenset(a) for a in adjacency)
        self._nbrs = tuple(tuple(sorted(a)) for a in self._adj)
        self._m = sum(len(a) for a in self._adj) // 2
        self._cache = {}

    @property
    def m(self):
        return self._m

    @property
    def adjacency(self):
        return self._adj

    def neighbors(self, v):
        """Neighbours of ``v`` in increasing order."""
        return self._nbrs[v]

    def has_edge(self, u, v):
        return v in self._adj[u]

    def degree(self, v):
        return len(self._adj[v])

    def edges(self):
        return [(u, v) for u in range(self.n) for v in self._nbrs[u] if u < v]

    def vertices(self):
        return range(self.n)

    def is_complete(self):
        return self._m == self.n * (self.n - 1) // 2

    def csr(self):
        if "csr" not in self._cache:
            indptr = np.zeros(self.n + 1, dtype=np.int32)
            indptr[1:] = np.cumsum([len(a) for a in self._nbrs], dtype=np.int64)
            indices = np.fromiter(
                (w for a in self._nbrs for w in a), dtype=np.int32, count=2 * self._m
            )
            self._cache["csr"] = (indptr, indices)
        return self._cache["csr"]

    def adjacency_masks(self):
        return [sum(1 << w for w in a) for a in self._nbrs]

    def subgraph_edges(self, edges):
        """New graph on the same vertex set with only ``edges``."""
        return from_edge_list(self.n, edges)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self):
        return hash((self.n, self._adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n, edges):
    """Build a graph, silently dropping repeated edges."""
    if n < 0:
        raise IndexOutOfRange(f"vertex count must be non-negative, got {n}")
    adj = [set() for _ in range(n)]
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, adj)


class Metric:
    """All-pairs hop distances of a connected graph."""

    __slots__ = ("dist",)

    def __init__(self, dist):
        self.dist = dist

    @property
    def n(self):
        return self.dist.shape[0]

    def __call__(self, u, v):
        return int(self.dist[u, v])

    def __getitem__(self, uv):
        u, v = uv
        return int(self.dist[u, v])

    def tour_length(self, order):
        """Length of the closed tour visiting ``order`` cyclically."""
        if len(order) < 2:
            return 0
        idx = np.asarray(order, dtype=np.intp)
        return int(self.dist[idx, np.roll(idx, -1)].sum())


def shortest_path_metric(g):
    if "metric" not in g._cache:
        indptr, indices = g.csr()
        dist = kernels.bfs_all_pairs(g.n, indptr, indices)
        if g.n and (dist < 0).any():
            raise Disconnected("graph is disconnected; some pair is unreachable")
        dist.setflags(write=False)
        g._cache["metric"] = Metric(dist)
    return g._cache["metric"]


def bfs_order(g, source=0, allowed=None):
    """Vertices reachable from ``source`` with their BFS parents."""
    parent = {source: None}
    q = deque([source])
    while q:
        u = q.popleft()
        for w in g.neighbors(u):
            if w not in parent and (allowed is None or w in allowed):
                parent[w] = u
                q.append(w)
    return parent


def is_connected(g):
    return g.n == 0 or len(bfs_order(g, 0)) == g.n


def shortest_path(g, s, t):
    """One shortest ``s``-``t`` path (smallest-index BFS parents)."""
    parent = bfs_order(g, s)
    if t not in parent:
        raise Disconnected(f"no path from {s} to {t}")
    path = [t]
    while path[-1] != s:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def articulation_points(g):
    """Cut vertices, by iterative Hopcroft-Tarjan low-point DFS."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cut = set()
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if parent != root and low[v] >= disc[parent]:
                    cut.add(parent)
        if root_children > 1:
            cut.add(root)
    return cut


def is_biconnected(g):
    if g.n < 3 or not is_connected(g):
        return False
    return not articulation_points(g)


def local_vertex_connectivity(g, s, t, limit=None):
    """Maximum number of internally disjoint ``s``-``t`` paths (s, t non-adjacent)."""
    return VertexSplitFlow(g, [s], [t]).run(limit)


def vertex_connectivity(g):
    """Vertex connectivity; ``n - 1`` for complete graphs.

    Even/Esfahanian-Hakimi sweep: with ``v`` of minimum degree, a minimum
    separator either misses ``v`` (then it separates ``v`` from some
    non-neighbour) or contains it (then it separates two neighbours of ``v``).
    """
    if "kappa" in g._cache:
        return g._cache["kappa"]
    n = g.n
    if not is_connected(g):
        raise Disconnected("vertex connectivity of a disconnected graph")
    if g.is_complete():
        k = max(n - 1, 0)
    else:
        v = min(range(n), key=lambda x: (g.degree(x), x))
        k = g.degree(v)
        for t in range(n):
            if t != v and not g.has_edge(v, t):
                k = min(k, local_vertex_connectivity(g, v, t, limit=k))
        nb = g.neighbors(v)
        for a, b in combinations(nb, 2):
            if not g.has_edge(a, b):
                k = min(k, local_vertex_connectivity(g, a, b, limit=k))
    g._cache["kappa"] = k
    return k


@dataclass(frozen=True)
class VertexPairPaths:
    path_a: tuple
    path_b: tuple

    def as_cycle(self):
        """The simple cycle formed by the two paths (``path_a`` then ``path_b`` reversed)."""
        return tuple(self.path_a) + tuple(reversed(self.path_b[1:-1]))


def two_disjoint_paths(g, s, t):
    """Two internally vertex-disjoint ``s``-``t`` paths.

    When ``s`` and ``t`` are adjacent one of the paths is the edge itself and
    the other has at least one interior vertex.
    """
    if s == t:
        raise ValueError("endpoints must differ")
    flow = VertexSplitFlow(g, [s], [t])
    if flow.run(limit=2) < 2:
        raise NotTwoConnectedBetween(f"{s} and {t} are separated by a single vertex")
    a, b = sorted(flow.paths(), key=lambda p: (len(p), p))
    return VertexPairPaths(tuple(a), tuple(b))


def subset_independence_number(g, x):
    x = sorted(set(x))
    if len(x) > INDEPENDENCE_SUBSET_LIMIT:
        raise SubsetTooLarge(
            f"|X| = {len(x)} exceeds the exhaustive limit {INDEPENDENCE_SUBSET_LIMIT}"
        )
    pos = {v: i for i, v in enumerate(x)}
    nbr = [sum(1 << pos[w] for w in g.neighbors(v) if w in pos) for v in x]

    def best(cand):
        if not cand:
            return 0
        low = cand & -cand
        i = low.bit_length() - 1
        if not nbr[i] & cand:
            return 1 + best(cand & ~low)
        without = best(cand & ~low)
        with_ = 1 + best(cand & ~low & ~nbr[i])
        return max(with_, without)

    return best((1 << len(x)) - 1)


def sigma2(g, x):
    """Minimum degree sum over non-adjacent pairs in ``x``; ``math.inf`` if none."""
    best = math.inf
    for u, v in combinations(sorted(set(x)), 2):
        if not g.has_edge(u, v):
            best = min(best, g.degree(u) + g.degree(v))
    return best
