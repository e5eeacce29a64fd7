"""TSP tours from a spanning tree and a cycle through its odd vertices.

Given a spanning tree ``T`` and a closed walk ``C`` through the odd-degree
vertices of ``T`` with ``length(C) = (1 + gamma) |C|``:

* if ``|C| > 2n / (3 - gamma)``, the cycle is contracted, a spanning tree of
  the quotient is doubled and glued to ``C`` (``CONTRACT_DOUBLE``);
* otherwise ``T`` is completed by the cheaper of the two alternating
  matchings that ``C`` induces on the odd vertices (``TREE_MATCHING``).

Either way the Euler circuit is shortcut to a tour of length at most
``4n / (3 - gamma)``. All threshold arithmetic is exact.
"""

from collections import deque
from dataclasses import dataclass, field, replace
import enum
from fractions import Fraction
from functools import lru_cache

from .errors import (
    DisconnectedSupport,
    GammaTooLarge,
    InvariantViolation,
    NotBiconnected,
    OddDegree,
    OddRequiredSet,
    RequiredNotOnCycle,
    RequiredSetNotCovered,
    SteinerCycleNotFound,
    TooLarge,
)
from .graph import bfs_order, is_biconnected, shortest_path, shortest_path_metric
from .spanning import TreeStrategy, build_spanning_tree


class Case(enum.Enum):
    CONTRACT_DOUBLE = "contract_double"
    TREE_MATCHING = "tree_matching"
    DOUBLE_TREE_FALLBACK = "double_tree_fallback"


@dataclass(frozen=True)
class Tour:
    order: tuple  # each vertex exactly once, visited cyclically
    length: int

    @property
    def n(self):
        return len(self.order)

    def expand(self, g):
        """The tour as a closed walk of ``g`` (shortest paths between stops)."""
        seq = []
        k = len(self.order)
        for i, a in enumerate(self.order):
            seq.extend(shortest_path(g, a, self.order[(i + 1) % k])[:-1])
        return seq


@dataclass(frozen=True)
class Certificate:
    case: Case
    n: int
    cycle_unique: int | None
    cycle_length: int | None
    gamma: Fraction | None
    bound: Fraction  # the case-specific bound
    achieved: int
    tree_strategy: str | None = None
    cycle_method: str | None = None
    opt: int | None = None
    proven_absent: bool = False

    @property
    def theorem_bound(self):
        """``4n / (3 - gamma)`` for the two cycle cases, ``2(n - 1)`` otherwise."""
        if self.case is Case.DOUBLE_TREE_FALLBACK:
            return Fraction(2 * (self.n - 1))
        return theorem_bound(self.n, self.gamma)

    def to_dict(self):
        tb = self.theorem_bound
        return {
            "case": self.case.value,
            "n": self.n,
            "cycle_unique": self.cycle_unique,
            "cycle_length": self.cycle_length,
            "gamma": None if self.gamma is None else str(self.gamma),
            "bound_num": self.bound.numerator,
            "bound_den": self.bound.denominator,
            "theorem_bound_num": tb.numerator,
            "theorem_bound_den": tb.denominator,
            "achieved": self.achieved,
            "opt": self.opt,
            "tree_strategy": self.tree_strategy,
            "cycle_method": self.cycle_method,
            "proven_absent": self.proven_absent,
        }


def theorem_bound(n, gamma):
    return Fraction(4 * n) / (3 - Fraction(gamma))


# ---------------------------------------------------------------- multigraphs


@dataclass(frozen=True)
class EvenMultigraph:
    n: int
    edges: tuple  # multiset of (u, v)

    def degrees(self):
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg


def euler_circuit(m, start=None):
    """Hierholzer's algorithm; returns ``[v0, ..., v0]`` using every edge once."""
    deg = m.degrees()
    odd = [v for v, d in enumerate(deg) if d % 2]
    if odd:
        raise OddDegree(f"vertices of odd degree: {odd[:10]}")
    if not m.edges:
        return [start if start is not None else 0]
    inc = [[] for _ in range(m.n)]
    for i, (u, v) in enumerate(m.edges):
        inc[u].append(i)
        inc[v].append(i)
    for lst in inc:
        lst.reverse()  # pop() then yields edges in input order
    if start is None:
        start = next(v for v in range(m.n) if deg[v])
    used = [False] * len(m.edges)
    stack = [start]
    circuit = []
    while stack:
        v = stack[-1]
        lst = inc[v]
        while lst and used[lst[-1]]:
            lst.pop()
        if lst:
            i = lst.pop()
            used[i] = True
            a, b = m.edges[i]
            stack.append(b if a == v else a)
        else:
            circuit.append(stack.pop())
    if len(circuit) != len(m.edges) + 1:
        raise DisconnectedSupport("edges do not form a single connected component")
    circuit.reverse()
    return circuit


def shortcut(walk, metric):
    """Keep first visits; the closed tour is never longer than the walk.

    ``walk`` is read cyclically; a repeated final vertex equal to the first
    is ignored.
    """
    walk = list(walk)
    if len(walk) > 1 and walk[0] == walk[-1]:
        walk.pop()
    order = list(dict.fromkeys(walk))
    length = metric.tour_length(order)
    walk_len = metric.tour_length(walk)
    if length > walk_len:
        raise InvariantViolation(f"shortcut tour {length} longer than walk {walk_len}")
    return Tour(tuple(order), length)


# ------------------------------------------------------------------ matching


def cycle_induced_matching(metric, cycle, s):
    """The cheaper alternating pairing of ``s`` along ``cycle``.

    Vertices of ``s`` are ordered by first appearance on the walk. Pairing
    (1,2)(3,4)... or (2,3)...(2m,1) uses arcs that together cover the walk
    once, so the cheaper one has metric length at most ``length(C) / 2``.
    """
    s = frozenset(s)
    if len(s) % 2 or not s:
        raise OddRequiredSet(f"matching needs a non-empty even set, got {len(s)} vertices")
    seq = cycle.sequence
    missing = s - set(seq)
    if missing:
        raise RequiredNotOnCycle(f"vertices {sorted(missing)} are not on the cycle")
    ordered = []
    seen = set()
    for v in seq:
        if v in s and v not in seen:
            seen.add(v)
            ordered.append(v)
    k = len(ordered)
    m1 = [(ordered[i], ordered[i + 1]) for i in range(0, k, 2)]
    m2 = [(ordered[i], ordered[(i + 1) % k]) for i in range(1, k, 2)]
    c1 = sum(metric(a, b) for a, b in m1)
    c2 = sum(metric(a, b) for a, b in m2)
    pairs, cost = (m1, c1) if c1 <= c2 else (m2, c2)
    if 2 * cost > cycle.length:
        raise InvariantViolation(f"matching length {cost} exceeds half the cycle length {cycle.length}")
    return pairs


def min_weight_perfect_matching(metric, vertices, max_size=16):
    """Exact minimum-weight perfect matching by subset DP."""
    vs = sorted(vertices)
    k = len(vs)
    if k % 2:
        raise OddRequiredSet("perfect matching needs an even vertex set")
    if k > max_size:
        raise TooLarge(f"subset DP limited to {max_size} vertices, got {k}")
    d = [[metric(a, b) for b in vs] for a in vs]

    @lru_cache(maxsize=None)
    def best(mask):
        if not mask:
            return 0, ()
        i = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << i)
        out = None
        r = rest
        while r:
            low = r & -r
            j = low.bit_length() - 1
            r ^= low
            c, pairs = best(rest & ~low)
            c += d[i][j]
            if out is None or c < out[0]:
                out = (c, ((vs[i], vs[j]),) + pairs)
        return out

    cost, pairs = best((1 << k) - 1)
    return list(pairs), cost


# -------------------------------------------------------------- construction


def _tree_tour(g, metric, tree_edges, extra_edges, start):
    multi = EvenMultigraph(g.n, tuple(tree_edges) + tuple(extra_edges))
    walk = euler_circuit(multi, start=start)
    if set(walk) != set(range(g.n)):
        raise InvariantViolation("Euler circuit misses a vertex")
    tour = shortcut(walk, metric)
    if tour.length > len(multi.edges):
        raise InvariantViolation("tour longer than its Euler circuit")
    return tour


def _path_edges(path):
    return list(zip(path, path[1:]))


def build_tour(g, metric, t, c, tree_strategy=None):
    """Tour plus certificate from a spanning tree and a cycle through its odd set."""
    n = g.n
    odd = t.odd_set
    missing = odd - c.walk.vertices
    if missing:
        raise RequiredSetNotCovered(f"odd tree vertices {sorted(missing)} are not on the cycle")
    gamma = c.gamma
    if gamma >= 1:
        raise GammaTooLarge(f"gamma = {gamma} >= 1 gives no improvement over tree doubling")
    size = c.unique_count
    threshold = Fraction(2 * n) / (3 - gamma)
    if size > threshold:
        case = Case.CONTRACT_DOUBLE
        on_cycle = c.walk.vertices
        parent = {v: None for v in on_cycle}
        q = deque(sorted(on_cycle))
        while q:
            u = q.popleft()
            for w in g.neighbors(u):
                if w not in parent:
                    parent[w] = u
                    q.append(w)
        quotient = [(v, p) for v, p in parent.items() if p is not None]
        doubled = quotient + quotient
        tour = _tree_tour(g, metric, doubled, c.walk.edges(), c.sequence[0])
        bound = c.length + 2 * (n - size)
    else:
        case = Case.TREE_MATCHING
        pairs = cycle_induced_matching(metric, c, odd)
        extra = []
        for a, b in pairs:
            extra.extend(_path_edges(shortest_path(g, a, b)))
        tour = _tree_tour(g, metric, sorted(t.edges), extra, 0)
        bound = Fraction(n - 1) + Fraction(c.length, 2)
    bound = Fraction(bound)
    cert = Certificate(
        case=case,
        n=n,
        cycle_unique=size,
        cycle_length=c.length,
        gamma=gamma,
        bound=bound,
        achieved=tour.length,
        tree_strategy=tree_strategy or t.strategy,
        cycle_method=c.method or None,
    )
    if not tour.length <= bound <= cert.theorem_bound:
        raise InvariantViolation(
            f"achieved {tour.length}, case bound {bound}, theorem bound {cert.theorem_bound}"
        )
    return tour, cert


def double_tree_baseline(g, metric, tree=None):
    """Double a spanning tree (BFS from 0 unless given), Euler, shortcut."""
    if tree is None:
        parent = bfs_order(g, 0)
        edges = [(v, p) for v, p in parent.items() if p is not None]
    else:
        edges = sorted(tree.edges)
    tour = _tree_tour(g, metric, edges + edges, (), 0)
    if tour.length > 2 * (g.n - 1) and g.n > 1:
        raise InvariantViolation("double-tree tour exceeds 2(n - 1)")
    return tour


def christofides_exact(g, metric, tree):
    """Tree plus an exact minimum-weight matching on its odd vertices."""
    pairs, _ = min_weight_perfect_matching(metric, tree.odd_set)
    extra = []
    for a, b in pairs:
        extra.extend(_path_edges(shortest_path(g, a, b)))
    return _tree_tour(g, metric, sorted(tree.edges), extra, 0)


# ------------------------------------------------------------------ pipeline

DEFAULT_STRATEGIES = (TreeStrategy.BFS, TreeStrategy.DFS, TreeStrategy.FEW_ODD, TreeStrategy.RANDOM)


@dataclass(frozen=True)
class SolveConfig:
    strategies: tuple = DEFAULT_STRATEGIES
    seed: int = 0
    tree: object = None  # a SpanningTree supplied by the caller
    search_budget: object = None  # steiner.SearchBudget
    approximate: bool = True


@dataclass(frozen=True)
class Attempt:
    strategy: str
    odd_count: int
    leaf_count: int
    outcome: str  # "cycle", "proven_absent", "budget", "approximate", "gamma_too_large"
    achieved: int | None = None


@dataclass(frozen=True)
class Solution:
    tour: Tour
    certificate: Certificate
    attempts: tuple = field(default=())
    cycle: object = None  # the SteinerCycle behind the certificate, if any


def solve(g, config=None):
    """Best certified tour over the configured tree strategies."""
    from .steiner import approximate_steiner_cycle, find_steiner_cycle

    config = config or SolveConfig()
    if not is_biconnected(g):
        raise NotBiconnected("the pipeline requires a 2-connected graph")
    metric = shortest_path_metric(g)
    if config.tree is not None:
        trees = [config.tree]
    else:
        trees = [
            build_spanning_tree(g, st, seed=config.seed) for st in config.strategies
        ]
    attempts = []
    best = None
    failed = []
    for t in trees:
        try:
            c = find_steiner_cycle(g, t.odd_set, config.search_budget)
        except SteinerCycleNotFound as exc:
            outcome = "proven_absent" if exc.proven_absent else "budget"
            attempts.append(Attempt(t.strategy, len(t.odd_set), t.leaf_count, outcome))
            failed.append(t)
            continue
        tour, cert = build_tour(g, metric, t, c)
        attempts.append(Attempt(t.strategy, len(t.odd_set), t.leaf_count, "cycle", tour.length))
        if best is None or tour.length < best[0].length:
            best = (tour, cert, c)
    # every tried tree had an odd set that provably lies on no simple cycle
    proven = best is None and all(a.outcome == "proven_absent" for a in attempts)
    if best is None and config.approximate:
        for t in failed:
            c = approximate_steiner_cycle(g, metric, t.odd_set)
            if c.gamma >= 1:
                attempts.append(Attempt(t.strategy, len(t.odd_set), t.leaf_count, "gamma_too_large"))
                continue
            tour, cert = build_tour(g, metric, t, c)
            attempts.append(
                Attempt(t.strategy, len(t.odd_set), t.leaf_count, "approximate", tour.length)
            )
            if best is None or tour.length < best[0].length:
                best = (tour, cert, c)
    if best is None:
        tour = double_tree_baseline(g, metric, trees[0] if config.tree is not None else None)
        cert = Certificate(
            case=Case.DOUBLE_TREE_FALLBACK,
            n=g.n,
            cycle_unique=None,
            cycle_length=None,
            gamma=None,
            bound=Fraction(2 * (g.n - 1)),
            achieved=tour.length,
            tree_strategy=trees[0].strategy if config.tree is not None else "bfs",
        )
        best = (tour, cert, None)
    tour, cert, cycle = best
    if proven:
        cert = replace(cert, proven_absent=True)
    return Solution(tour, cert, tuple(attempts), cycle)


# ----------------------------------------------------------------- corollary


def corollary_threshold(alpha):
    """Largest admissible ``length(C) / |C|`` given ``OPT >= (1 + alpha) n``."""
    alpha = Fraction(alpha)
    return (1 + 4 * alpha) / (1 + alpha)


def corollary_check(alpha, c):
    """Whether the cycle is short enough for a 4/3 * OPT guarantee.

    With ``length(C) <= (1 + 4 alpha) |C| / (1 + alpha)`` the tour bound
    ``4n / (3 - gamma)`` is at most ``4/3 (1 + alpha) n <= 4/3 OPT``.
    """
    alpha = Fraction(alpha)
    if not 0 <= alpha <= 1:
        raise ValueError("alpha must lie in [0, 1]")
    return Fraction(c.length) <= corollary_threshold(alpha) * c.unique_count


def corollary_bound(alpha, n):
    """``4/3 (1 + alpha) n``, the bound certified when ``corollary_check`` holds."""
    return Fraction(4, 3) * (1 + Fraction(alpha)) * n
