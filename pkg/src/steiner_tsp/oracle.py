"""Exact ground truth for small instances.

Held-Karp gives the optimal graph-TSP tour on the metric closure, and an
exhaustive simple-cycle search decides cyclability. Both are exponential and
guarded by explicit size limits.
"""

from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb

from . import kernels
from .errors import BudgetExceeded, Disconnected, TooLarge
from .graph import shortest_path_metric
from .walks import ClosedWalk, SteinerCycle

HELD_KARP_MAX_N = 18
EXHAUSTIVE_MAX_N = 18
CYC_SUBSET_BUDGET = 5000


@dataclass(frozen=True)
class OptResult:
    opt_length: int
    opt_tour: tuple


@dataclass(frozen=True)
class ProvenAbsent:
    """Complete enumeration found no simple cycle through ``required``."""

    required: frozenset

    def __bool__(self):
        return False


def held_karp_opt(metric, max_n=HELD_KARP_MAX_N):
    n = metric.n
    if n > max_n:
        raise TooLarge(f"Held-Karp limited to n <= {max_n}, got {n}")
    length, tour = kernels.held_karp(metric.dist)
    return OptResult(int(length), tuple(tour))


def brute_force_tsp(metric, max_n=9):
    """Optimal tour by trying every permutation; independent of Held-Karp."""
    n = metric.n
    if n > max_n:
        raise TooLarge(f"permutation search limited to n <= {max_n}, got {n}")
    if n <= 1:
        return OptResult(0, tuple(range(n)))
    d = metric.dist.tolist()
    best = None
    for rest in permutations(range(1, n)):
        order = (0,) + rest
        length = sum(d[order[i]][order[(i + 1) % n]] for i in range(n))
        if best is None or length < best[0]:
            best = (length, order)
    return OptResult(*best)


def brute_force_steiner_cycle(g, s, max_n=EXHAUSTIVE_MAX_N):
    """Shortest simple cycle containing ``s``, or ``ProvenAbsent``.

    Among shortest cycles the lexicographically smallest one is returned,
    written from its smallest vertex towards its smaller neighbour.
    """
    s = frozenset(s)
    if g.n > max_n:
        raise TooLarge(f"exhaustive cycle search limited to n <= {max_n}, got {g.n}")
    if not s:
        raise ValueError("required set must be non-empty")
    if g.n < 3:
        return ProvenAbsent(s)
    dist = _search_metric(g)
    mask = sum(1 << v for v in s)
    seq = kernels.shortest_steiner_cycle(g.n, g.adjacency_masks(), mask, dist)
    if seq is None:
        return ProvenAbsent(s)
    return SteinerCycle(ClosedWalk.in_graph(g, seq), s, method="exhaustive")


def _search_metric(g):
    """Hop distances, with unreachable pairs set beyond any cycle length."""
    try:
        return shortest_path_metric(g).dist
    except Disconnected:
        indptr, indices = g.csr()
        d = kernels.bfs_all_pairs(g.n, indptr, indices)
        d[d < 0] = g.n + 1
        return d


def is_cyclable(g, x, max_n=EXHAUSTIVE_MAX_N):
    return bool(brute_force_steiner_cycle(g, x, max_n=max_n))


def cyc_at_least(g, c, budget=CYC_SUBSET_BUDGET, max_n=EXHAUSTIVE_MAX_N):
    """Whether every vertex subset of size at most ``c`` is cyclable.

    Subsets of cyclable sets are cyclable, so only subsets of size exactly
    ``min(c, n)`` are checked.
    """
    size = min(c, g.n)
    if size <= 0:
        return True
    count = comb(g.n, size)
    if count > budget:
        raise BudgetExceeded(f"C({g.n}, {size}) = {count} subsets exceed budget {budget}")
    return all(is_cyclable(g, x, max_n=max_n) for x in combinations(range(g.n), size))
