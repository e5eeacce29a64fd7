"""Finding cycles through a required vertex set.

``find_steiner_cycle`` tries, in order: two disjoint paths when at most two
vertices are required, fan augmentation when the required set is no larger
than the vertex connectivity, and exhaustive search on small graphs.
"""

from dataclasses import dataclass

import numpy as np

from ._flow import VertexSplitFlow
from .errors import (
    AugmentationStuck,
    BadParameter,
    InvalidWalk,
    NotBiconnected,
    PreconditionViolated,
    SteinerCycleNotFound,
)
from .graph import (
    is_biconnected,
    sigma2,
    subset_independence_number,
    two_disjoint_paths,
    vertex_connectivity,
)
from .oracle import EXHAUSTIVE_MAX_N, brute_force_steiner_cycle
from .walks import ClosedWalk, SteinerCycle


@dataclass(frozen=True)
class SearchBudget:
    exhaustive_max_n: int = EXHAUSTIVE_MAX_N


def _menger_cycle(g, s):
    s = sorted(s)
    if len(s) == 1:
        a, b = s[0], g.neighbors(s[0])[0]
    else:
        a, b = s
    return list(two_disjoint_paths(g, a, b).as_cycle())


def find_steiner_cycle(g, s, budget=None):
    """A simple cycle of ``g`` through every vertex of ``s``.

    Raises ``SteinerCycleNotFound``; its ``proven_absent`` flag is set when
    exhaustive search showed that no such cycle exists.
    """
    budget = budget or SearchBudget()
    s = frozenset(s)
    if not s:
        raise BadParameter("required set must be non-empty")
    if not is_biconnected(g):
        raise NotBiconnected("Steiner cycles are searched in 2-connected graphs only")
    if len(s) <= 2:
        seq = _menger_cycle(g, s)
        return SteinerCycle(ClosedWalk.in_graph(g, seq), s, method="menger")
    if len(s) <= vertex_connectivity(g):
        try:
            return dirac_cycle(g, s)
        except AugmentationStuck:
            pass
    if g.n <= budget.exhaustive_max_n:
        found = brute_force_steiner_cycle(g, s, max_n=budget.exhaustive_max_n)
        if found:
            return found
        raise SteinerCycleNotFound(
            "no simple cycle contains the required set (exhaustive search)",
            proven_absent=True,
            reason="exhausted",
        )
    raise SteinerCycleNotFound(
        f"|S| = {len(s)} exceeds connectivity and n = {g.n} exceeds the "
        f"exhaustive limit {budget.exhaustive_max_n}",
        reason="budget",
    )


def dirac_cycle(g, x):
    """Simple cycle through ``x`` when ``|x|`` is at most the connectivity.

    Starts from a cycle through two vertices of ``x`` and repeatedly pulls a
    missing vertex ``v`` onto it: a fan of disjoint paths from ``v`` lands on
    distinct cycle vertices, and two landing points whose cycle arc holds no
    vertex of ``x`` in its interior let that arc be replaced by a detour
    through ``v``. The longest resulting cycle is kept.
    """
    x = frozenset(x)
    kappa = vertex_connectivity(g)
    if len(x) > kappa:
        raise PreconditionViolated(f"|X| = {len(x)} exceeds connectivity {kappa}")
    if len(x) < 2:
        seq = _menger_cycle(g, x)
        return SteinerCycle(ClosedWalk.in_graph(g, seq), x, method="dirac")
    xs = sorted(x)
    cycle = _menger_cycle(g, xs[:2])
    while True:
        on = set(cycle)
        missing = [v for v in xs if v not in on]
        if not missing:
            break
        cycle = _reroute(g, cycle, missing[0], x)
    return SteinerCycle(ClosedWalk.in_graph(g, cycle), x, method="dirac")


def _reroute(g, cycle, v, x):
    L = len(cycle)
    pos = {c: i for i, c in enumerate(cycle)}
    flow = VertexSplitFlow(g, [v], cycle, sink_capacity=1)
    flow.run()
    fan = {p[-1]: p for p in flow.paths()}
    is_x = [c in x for c in cycle]
    best = None
    for a in sorted(fan, key=pos.get):
        for b in sorted(fan, key=pos.get):
            if a == b:
                continue
            i, j = pos[a], pos[b]
            gap = (j - i) % L  # steps from a forward to b
            if any(is_x[(i + t) % L] for t in range(1, gap)):
                continue
            kept = [cycle[(j + t) % L] for t in range(L - gap + 1)]  # b .. a
            pa, pb = fan[a], fan[b]
            new = kept + list(reversed(pa))[1:] + list(pb)[1:-1]
            if best is None or len(new) > len(best):
                best = new
    if best is None:
        raise AugmentationStuck(f"no fan from {v} gives an admissible reroute")
    return best


@dataclass(frozen=True)
class CyclabilityFlags:
    dirac: bool
    shi: bool
    fournier: bool

    @property
    def any(self):
        return self.dirac or self.shi or self.fournier


def cyclability_predicates(g, x):
    """Sufficient conditions for ``x`` to lie on a simple cycle.

    dirac: ``|x| <= kappa``; shi: degree sum of every non-adjacent pair in
    ``x`` is at least ``n``; fournier: independence number of ``x`` is at
    most ``kappa``. Any true flag guarantees a cycle through ``x``.
    """
    if not is_biconnected(g):
        raise NotBiconnected("cyclability conditions apply to 2-connected graphs")
    x = frozenset(x)
    kappa = vertex_connectivity(g)
    return CyclabilityFlags(
        dirac=len(x) <= kappa,
        shi=sigma2(g, x) >= g.n,
        fournier=subset_independence_number(g, x) <= kappa,
    )


def _nearest_neighbor_order(d, s):
    order = [s[0]]
    left = set(s[1:])
    while left:
        last = order[-1]
        nxt = min(left, key=lambda v: (d[last][v], v))
        order.append(nxt)
        left.remove(nxt)
    return order


def _two_opt(d, order):
    k = len(order)
    improved = True
    while improved and k >= 4:
        improved = False
        for i in range(k - 1):
            for j in range(i + 2, k if i else k - 1):
                a, b = order[i], order[i + 1]
                c, e = order[j], order[(j + 1) % k]
                if d[a][c] + d[b][e] < d[a][b] + d[c][e]:
                    order[i + 1 : j + 1] = reversed(order[i + 1 : j + 1])
                    improved = True
    return order


def _fresh_shortest_path(g, metric, a, b, used):
    """Shortest ``a``-``b`` path maximising vertices outside ``used``."""
    da, db = metric.dist[a], metric.dist[b]
    total = int(da[b])
    on_path = np.flatnonzero(da + db == total)
    layers = [[] for _ in range(total + 1)]
    for w in on_path.tolist():
        layers[int(da[w])].append(w)
    score = {a: 0}
    pred = {a: None}
    for level in range(1, total + 1):
        for w in layers[level]:
            best = None
            for p in g.neighbors(w):
                if p in score and int(da[p]) == level - 1:
                    if best is None or score[p] > score[best]:
                        best = p
            score[w] = score[best] + (w not in used)
            pred[w] = best
    path = [b]
    while path[-1] != a:
        path.append(pred[path[-1]])
    return path[::-1]


def approximate_steiner_cycle(g, metric, s):
    """A closed walk through ``s`` that may repeat vertices.

    The required vertices are ordered by nearest neighbour under the metric,
    improved by 2-opt, and consecutive ones are joined by shortest paths that
    prefer vertices not yet on the walk.
    """
    s = sorted(set(s))
    if len(s) < 2:
        raise BadParameter("approximate cycles need at least two required vertices")
    d = metric.dist.tolist()
    order = _two_opt(d, _nearest_neighbor_order(d, s))
    seq = []
    used = set()
    for i, a in enumerate(order):
        b = order[(i + 1) % len(order)]
        path = _fresh_shortest_path(g, metric, a, b, used)
        used.update(path)
        seq.extend(path[:-1])
    if len(seq) == 2:
        u, v = seq
        common = sorted(set(g.neighbors(u)) & set(g.neighbors(v)))
        if common:
            seq = [u, v, common[0]]
        else:
            w = next((w for w in g.neighbors(v) if w != u), None)
            if w is None:
                raise InvalidWalk("graph too small for a closed walk through both vertices")
            seq = [u, v, w, v]
    return SteinerCycle(ClosedWalk.in_graph(g, seq), frozenset(s), method="approximate")
