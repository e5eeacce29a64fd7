"""DFS spanning trees and the back-edge certificate behind the 4n/3 + 2k/3 bound.

The certificate picks back edges so that the DFS tree plus those edges is a
2-connected spanning subgraph, then charges every vertex
``max(0, incoming_back_edges - tree_children)``. The charge is an upper
bound on the circulation cost in the Mömke-Svensson framework; the tour
construction of that framework is not built here, only the certificate and
the resulting bound.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    Disconnected,
    InvariantViolation,
    NotBiconnected,
    PreconditionViolated,
    SelectionFailed,
)
from .graph import from_edge_list, is_biconnected


@dataclass(frozen=True)
class DfsTree:
    root: int
    parent: tuple  # parent[root] == -1
    order: tuple  # discovery index
    depth: tuple
    children: tuple
    leaves: frozenset  # vertices without tree children
    back_edges: tuple  # (descendant, ancestor) pairs
    leaf_order: tuple = field(default=())  # leaves by discovery

    @property
    def n(self):
        return len(self.parent)

    @property
    def k(self):
        return len(self.leaves)

    def tree_edges(self):
        return [(min(v, p), max(v, p)) for v, p in enumerate(self.parent) if p >= 0]

    def is_ancestor(self, a, x):
        while x >= 0:
            if x == a:
                return True
            x = self.parent[x]
        return False


def dfs_tree(g, root=0):
    """Iterative DFS; neighbours are explored in increasing order."""
    n = g.n
    if not 0 <= root < n:
        raise PreconditionViolated(f"root {root} outside 0..{n - 1}")
    parent = [-2] * n
    order = [-1] * n
    depth = [0] * n
    children = [[] for _ in range(n)]
    parent[root] = -1
    order[root] = 0
    counter = 1
    stack = [(root, iter(g.neighbors(root)))]
    while stack:
        v, it = stack[-1]
        for w in it:
            if order[w] < 0:
                parent[w] = v
                order[w] = counter
                counter += 1
                depth[w] = depth[v] + 1
                children[v].append(w)
                stack.append((w, iter(g.neighbors(w))))
                break
        else:
            stack.pop()
    if counter != n:
        raise Disconnected("DFS from the root does not reach every vertex")
    back = []
    for u, v in g.edges():
        if parent[u] == v or parent[v] == u:
            continue
        x, y = (u, v) if depth[u] > depth[v] else (v, u)
        back.append((x, y))
    back.sort(key=lambda e: (order[e[0]], order[e[1]]))
    leaves = [v for v in range(n) if not children[v]]
    leaves.sort(key=lambda v: order[v])
    return DfsTree(
        root=root,
        parent=tuple(parent),
        order=tuple(order),
        depth=tuple(depth),
        children=tuple(tuple(c) for c in children),
        leaves=frozenset(leaves),
        back_edges=tuple(back),
        leaf_order=tuple(leaves),
    )


def ms_bound(n, k):
    """The tour-length bound ``4n/3 + 2k/3`` as an exact rational."""
    return Fraction(4 * n + 2 * k, 3)


@dataclass(frozen=True)
class CirculationCertificate:
    selected_back_edges: tuple
    per_vertex_cost: dict
    total_cost: int
    k: int
    n: int

    @property
    def bound(self):
        return ms_bound(self.n, self.k)

    def to_dict(self):
        b = self.bound
        return {
            "kind": "dfs_circulation",
            "n": self.n,
            "k": self.k,
            "selected_back_edges": [list(e) for e in self.selected_back_edges],
            "total_cost": self.total_cost,
            "bound_num": b.numerator,
            "bound_den": b.denominator,
        }


def select_back_edges(g, t):
    """Back edges making ``t`` plus them 2-connected, and the induced cost.

    Root-leaf paths are handled in leaf discovery order. For each new path
    segment, while some segment vertex ``u`` (with non-root parent ``p``) has
    no selected back edge leaving its subtree above ``p``, take the deepest
    such ``u`` and add the back edge from the path below ``u`` that reaches
    the shallowest ancestor. If the path offers none, any back edge out of
    the subtree of ``u`` is used; 2-connectivity of ``g`` guarantees one.
    """
    if not is_biconnected(g):
        raise NotBiconnected("back-edge selection needs a 2-connected graph")
    n = g.n
    parent, depth, order = t.parent, t.depth, t.order
    size = [1] * n
    for v in sorted(range(n), key=lambda x: -order[x]):
        if parent[v] >= 0:
            size[parent[v]] += size[v]
    by_order = sorted(range(n), key=lambda x: order[x])
    up = [[] for _ in range(n)]
    for x, y in t.back_edges:
        up[x].append(y)

    inf = n + 1
    low = [inf] * n  # shallowest depth reached by a selected edge from the subtree
    selected = []
    processed = [False] * n
    processed[t.root] = True

    def violated(u):
        p = parent[u]
        return p >= 0 and parent[p] >= 0 and low[u] >= depth[p]

    def add(x, y):
        selected.append((x, y))
        a = x
        while a != y:
            if depth[y] < low[a]:
                low[a] = depth[y]
            a = parent[a]

    for leaf in t.leaf_order:
        segment = []
        v = leaf
        while not processed[v]:
            processed[v] = True
            segment.append(v)
            v = parent[v]
        while True:
            u = next((s for s in segment if violated(s)), None)
            if u is None:
                break
            limit = depth[parent[u]]
            best = None
            # candidates on the current root-leaf path, below or at u
            for x in segment[: segment.index(u) + 1]:
                for y in up[x]:
                    if depth[y] < limit and (best is None or depth[y] < depth[best[1]]):
                        best = (x, y)
            if best is None:
                lo = order[u]
                for x in by_order[lo : lo + size[u]]:
                    for y in up[x]:
                        if depth[y] < limit and (best is None or depth[y] < depth[best[1]]):
                            best = (x, y)
            if best is None:
                raise SelectionFailed(f"no back edge leaves the subtree of {u} above its parent")
            add(*best)

    incoming = [0] * n
    for _, y in selected:
        incoming[y] += 1
    cost = {v: max(0, incoming[v] - len(t.children[v])) for v in range(n) if incoming[v]}
    cert = CirculationCertificate(
        selected_back_edges=tuple(selected),
        per_vertex_cost=cost,
        total_cost=sum(cost.values()),
        k=t.k,
        n=n,
    )
    sub = from_edge_list(n, t.tree_edges() + list(selected))
    if not is_biconnected(sub):
        raise InvariantViolation("tree plus selected back edges is not 2-connected")
    if cert.total_cost > cert.k:
        raise InvariantViolation(f"circulation cost {cert.total_cost} exceeds k = {cert.k}")
    return cert
