"""Spanning trees of a graph and their odd-degree vertex sets."""

from collections import deque
from dataclasses import dataclass
import enum
import random

from .dfs_circulation import dfs_tree
from .errors import BadParameter, Disconnected, PreconditionViolated
from .graph import bfs_order


class TreeStrategy(enum.Enum):
    BFS = "bfs"
    DFS = "dfs"
    RANDOM = "random"
    FEW_ODD = "fewodd"

    @classmethod
    def parse(cls, name):
        try:
            return cls(name.lower())
        except ValueError:
            raise BadParameter(f"unknown tree strategy {name!r}") from None


@dataclass(frozen=True)
class SpanningTree:
    n: int
    edges: frozenset  # (u, v) with u < v
    degree: tuple
    strategy: str = "given"

    @property
    def odd_set(self):
        return frozenset(v for v, d in enumerate(self.degree) if d % 2)

    @property
    def leaf_count(self):
        return sum(1 for d in self.degree if d == 1)

    def adjacency(self):
        adj = [[] for _ in range(self.n)]
        for u, v in sorted(self.edges):
            adj[u].append(v)
            adj[v].append(u)
        return adj


def odd_vertices(t):
    return t.odd_set


def leaf_count(t):
    return t.leaf_count


def _norm(u, v):
    return (u, v) if u < v else (v, u)


def tree_from_edges(g, edges, strategy="given"):
    """Validate ``edges`` as a spanning tree of ``g``."""
    n = g.n
    edges = {_norm(int(u), int(v)) for u, v in edges}
    if len(edges) != max(n - 1, 0):
        raise PreconditionViolated(f"a spanning tree on {n} vertices needs {n - 1} edges, got {len(edges)}")
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n) or not g.has_edge(u, v):
            raise PreconditionViolated(f"tree edge ({u}, {v}) is not an edge of the graph")
    degree = [0] * n
    uf = list(range(n))

    def find(x):
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            raise PreconditionViolated(f"tree edges contain a cycle through ({u}, {v})")
        uf[ru] = rv
        degree[u] += 1
        degree[v] += 1
    return SpanningTree(n, frozenset(edges), tuple(degree), strategy)


def path_tree(g, path):
    """Spanning tree given as a Hamiltonian path (vertex sequence)."""
    if sorted(path) != list(range(g.n)):
        raise PreconditionViolated("path must visit every vertex exactly once")
    return tree_from_edges(g, zip(path, path[1:]), strategy="path")


def build_spanning_tree(g, strategy, *, root=0, seed=0, budget=None):
    """Spanning tree of a connected graph.

    ``FEW_ODD`` starts from the ``RANDOM`` tree and hill-climbs with edge
    swaps for ``budget`` iterations (default ``50 n``): add a random non-tree
    edge, drop a random tree edge of the cycle it closes, keep the swap only
    if the number of odd-degree vertices strictly drops.
    """
    if isinstance(strategy, str):
        strategy = TreeStrategy.parse(strategy)
    if strategy is TreeStrategy.BFS:
        parent = bfs_order(g, root)
        if len(parent) != g.n:
            raise Disconnected("graph is disconnected")
        return tree_from_edges(g, [(v, p) for v, p in parent.items() if p is not None], "bfs")
    if strategy is TreeStrategy.DFS:
        return tree_from_edges(g, dfs_tree(g, root).tree_edges(), "dfs")
    rng = random.Random(seed)
    start = _random_tree(g, rng)
    if strategy is TreeStrategy.RANDOM:
        return start
    if budget is None:
        budget = 50 * g.n
    return _few_odd(g, start, rng, budget)


def _random_tree(g, rng):
    edges = g.edges()
    rng.shuffle(edges)
    uf = list(range(g.n))

    def find(x):
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    chosen = []
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            uf[ru] = rv
            chosen.append((u, v))
    if len(chosen) != g.n - 1:
        raise Disconnected("graph is disconnected")
    return tree_from_edges(g, chosen, "random")


def _root_tree(n, adj):
    parent = [-1] * n
    depth = [0] * n
    seen = [False] * n
    seen[0] = True
    q = deque([0])
    while q:
        u = q.popleft()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                depth[w] = depth[u] + 1
                q.append(w)
    return parent, depth


def _few_odd(g, tree, rng, budget):
    n = g.n
    tree_edges = set(tree.edges)
    non_tree = [e for e in g.edges() if e not in tree_edges]
    if not non_tree:
        return SpanningTree(n, tree.edges, tree.degree, "fewodd")
    degree = list(tree.degree)
    adj = [set() for _ in range(n)]
    for u, v in tree_edges:
        adj[u].add(v)
        adj[v].add(u)
    parent, depth = _root_tree(n, adj)
    odd = sum(d % 2 for d in degree)
    for _ in range(budget):
        if odd <= 2:
            break
        i = rng.randrange(len(non_tree))
        a, b = non_tree[i]
        # tree path a .. b as a list of edges
        left, right = [], []
        x, y = a, b
        while x != y:
            if depth[x] >= depth[y]:
                left.append((x, parent[x]))
                x = parent[x]
            else:
                right.append((y, parent[y]))
                y = parent[y]
        cycle = left + right[::-1]
        c, d = cycle[rng.randrange(len(cycle))]
        delta = {}
        for v, s in ((a, 1), (b, 1), (c, -1), (d, -1)):
            delta[v] = delta.get(v, 0) + s
        new_odd = odd
        for v, s in delta.items():
            new_odd += ((degree[v] + s) % 2) - (degree[v] % 2)
        if new_odd >= odd:
            continue
        for v, s in delta.items():
            degree[v] += s
        odd = new_odd
        adj[a].add(b)
        adj[b].add(a)
        adj[c].discard(d)
        adj[d].discard(c)
        removed = _norm(c, d)
        tree_edges.discard(removed)
        tree_edges.add((a, b))
        non_tree[i] = removed
        parent, depth = _root_tree(n, adj)
    return SpanningTree(n, frozenset(tree_edges), tuple(degree), "fewodd")
