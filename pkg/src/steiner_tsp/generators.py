"""Named graph families and seeded random instances.

Vertex numbering of the named families:

* ``petersen``: outer 5-cycle ``0..4``, spokes ``i - i+5``, inner pentagram
  ``5+i - 5+(i+2)%5``.
* ``wheel(r)``: hub ``0``, rim cycle ``1..r``.
* ``complete_bipartite(c, r)``: left side ``0..c-1``, right side ``c..c+r-1``.
* ``cycle(n)``: ``0 - 1 - ... - n-1 - 0``.
* ``theta(n, chord)``: ``cycle(n)`` plus the chord ``0 - chord``.
* ``complete(n)``, ``path(n)``, ``star(n)`` (hub ``0``).
"""

from dataclasses import dataclass
import random

from .errors import BadParameter, BudgetExceeded
from .graph import from_edge_list, is_biconnected


def petersen():
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return from_edge_list(10, edges)


def cycle(n):
    if n < 3:
        raise BadParameter("a cycle needs n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    if n < 1:
        raise BadParameter("a path needs n >= 1")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star(n):
    if n < 2:
        raise BadParameter("a star needs n >= 2")
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def complete(n):
    if n < 1:
        raise BadParameter("a complete graph needs n >= 1")
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def wheel(r):
    if r < 3:
        raise BadParameter("a wheel needs a rim of at least 3 vertices")
    edges = [(0, i) for i in range(1, r + 1)]
    edges += [(i, i % r + 1) for i in range(1, r + 1)]
    return from_edge_list(r + 1, edges)


def complete_bipartite(c, r):
    if c < 1 or r < 1:
        raise BadParameter("both sides of K_{c,r} must be non-empty")
    return from_edge_list(c + r, [(i, c + j) for i in range(c) for j in range(r)])


def theta(n, chord):
    if n < 4 or not 2 <= chord <= n - 2:
        raise BadParameter("theta(n, chord) needs n >= 4 and 2 <= chord <= n - 2")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)] + [(0, chord)])


NAMED = {
    "petersen": (petersen, 0),
    "wheel": (wheel, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "cycle": (cycle, 1),
    "theta": (theta, 2),
    "complete": (complete, 1),
    "path": (path, 1),
    "star": (star, 1),
}


def named(spec):
    """Build a named family from ``"name"`` or ``"name:p1,p2"``."""
    name, _, params = spec.partition(":")
    name = name.strip().lower().replace("-", "_")
    if name in ("k", "bipartite"):
        name = "complete_bipartite"
    if name not in NAMED:
        raise BadParameter(f"unknown graph family {name!r}; choose from {sorted(NAMED)}")
    fn, arity = NAMED[name]
    try:
        args = [int(p) for p in params.split(",")] if params else []
    except ValueError:
        raise BadParameter(f"non-integer parameter in {spec!r}") from None
    if len(args) != arity:
        raise BadParameter(f"{name} takes {arity} parameter(s), got {len(args)}")
    return fn(*args)


@dataclass(frozen=True)
class PlantedPathInstance:
    graph: object
    path: tuple
    nonce: int


def planted_ham_path(n, extra_edges, seed, max_tries=2000):
    """Path ``0 - 1 - ... - n-1`` plus random extra edges, resampled until 2-connected."""
    if n < 3:
        raise BudgetExceeded("no 2-connected graph on fewer than 3 vertices")
    base = [(i, i + 1) for i in range(n - 1)]
    pool = n * (n - 1) // 2 - (n - 1)
    if extra_edges > pool:
        raise BadParameter(f"at most {pool} extra edges fit on {n} vertices")
    for nonce in range(max_tries):
        rng = random.Random(f"planted:{seed}:{nonce}")
        extra = set()
        while len(extra) < extra_edges:
            u, v = sorted(rng.sample(range(n), 2))
            if v != u + 1:
                extra.add((u, v))
        g = from_edge_list(n, base + sorted(extra))
        if is_biconnected(g):
            return PlantedPathInstance(g, tuple(range(n)), nonce)
    raise BudgetExceeded(
        f"no 2-connected planted-path graph with n={n}, extra={extra_edges} after {max_tries} tries"
    )


def random_biconnected(n, m, seed):
    """Random 2-connected graph with exactly ``n`` vertices and ``m`` edges.

    Built from a random ear decomposition (a base cycle plus paths hung
    between existing vertices), then padded with uniformly random edges and
    relabelled by a random permutation. Every 2-connected graph has an ear
    decomposition, so every such graph can be produced.
    """
    if n < 3 or m < n:
        raise BudgetExceeded(f"no 2-connected graph with n={n}, m={m} (need n >= 3, m >= n)")
    if m > n * (n - 1) // 2:
        raise BadParameter(f"{m} edges do not fit on {n} vertices")
    rng = random.Random(f"biconnected:{n}:{m}:{seed}")
    spare = m - n  # each ear costs one edge beyond its new vertices
    base = n if spare == 0 else rng.randint(3, n)
    rest = n - base
    ears = 0 if rest == 0 else rng.randint(1, min(rest, spare))
    cuts = sorted(rng.sample(range(1, rest), ears - 1)) if ears > 1 else []
    sizes = [b - a for a, b in zip([0] + cuts, cuts + [rest])] if ears else []
    edges = {(i, (i + 1) % base) if i < (i + 1) % base else ((i + 1) % base, i) for i in range(base)}
    nxt = base
    for size in sizes:
        a, b = rng.sample(range(nxt), 2)
        chain = [a] + list(range(nxt, nxt + size)) + [b]
        for u, v in zip(chain, chain[1:]):
            edges.add((min(u, v), max(u, v)))
        nxt += size
    while len(edges) < m:
        u, v = sorted(rng.sample(range(n), 2))
        edges.add((u, v))
    perm = list(range(n))
    rng.shuffle(perm)
    g = from_edge_list(n, sorted((perm[u], perm[v]) for u, v in edges))
    if g.m != m or not is_biconnected(g):
        raise BudgetExceeded("ear construction failed")  # unreachable by construction
    return g


def random_cubic(n, seed, max_tries=10000):
    """Random 2-connected 3-regular simple graph (pairing model with rejection)."""
    if n < 4 or n % 2:
        raise BadParameter("cubic graphs need an even n >= 4")
    rng = random.Random(f"cubic:{n}:{seed}")
    for _ in range(max_tries):
        points = [v for v in range(n) for _ in range(3)]
        rng.shuffle(points)
        pairs = [tuple(sorted(points[i : i + 2])) for i in range(0, len(points), 2)]
        if any(u == v for u, v in pairs) or len(set(pairs)) != len(pairs):
            continue
        g = from_edge_list(n, pairs)
        if is_biconnected(g):
            return g
    raise BudgetExceeded(f"no simple 2-connected cubic graph on {n} vertices after {max_tries} tries")
