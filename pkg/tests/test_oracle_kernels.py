import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import biconnected_graphs, nx_opt
from steiner_tsp import generators, kernels
from steiner_tsp.errors import BudgetExceeded, TooLarge
from steiner_tsp.graph import shortest_path_metric
from steiner_tsp.oracle import (
    ProvenAbsent,
    brute_force_steiner_cycle,
    brute_force_tsp,
    cyc_at_least,
    held_karp_opt,
    is_cyclable,
)

BACKENDS = kernels.available_backends()


@settings(max_examples=40, deadline=None)
@given(biconnected_graphs(max_n=8))
def test_held_karp_matches_networkx_permutations(g):
    m = shortest_path_metric(g)
    r = held_karp_opt(m)
    assert r.opt_length == nx_opt(g) == brute_force_tsp(m).opt_length
    assert sorted(r.opt_tour) == list(range(g.n))
    assert m.tour_length(r.opt_tour) == r.opt_length


def test_petersen_opt_is_eleven_by_both_methods(petersen):
    m = shortest_path_metric(petersen)
    assert held_karp_opt(m).opt_length == brute_force_tsp(m, max_n=10).opt_length


def test_size_guards():
    m = shortest_path_metric(generators.cycle(20))
    with pytest.raises(TooLarge):
        held_karp_opt(m)
    with pytest.raises(TooLarge):
        brute_force_tsp(m)


def test_proven_absent_is_falsy(petersen):
    r = brute_force_steiner_cycle(petersen, range(10))
    assert isinstance(r, ProvenAbsent) and not r
    assert not is_cyclable(petersen, range(10))


def test_exhaustive_returns_shortest_cycle():
    g = generators.theta(8, 4)
    c = brute_force_steiner_cycle(g, {0, 2})
    assert c.sequence == (0, 1, 2, 3, 4)


def test_cyc_monotone_and_budget(petersen):
    assert cyc_at_least(petersen, 9)
    assert not cyc_at_least(petersen, 10)
    with pytest.raises(BudgetExceeded):
        cyc_at_least(generators.complete(18), 9, budget=100)


@pytest.mark.parametrize("name", BACKENDS)
@settings(max_examples=40, deadline=None)
@given(g=biconnected_graphs(max_n=11), data=st.data())
def test_backends_agree(name, g, data):
    ref = kernels.load_backend("python")
    impl = kernels.load_backend(name)
    indptr, indices = g.csr()
    d1 = impl.bfs_all_pairs(g.n, indptr, indices)
    d2 = ref.bfs_all_pairs(g.n, indptr, indices)
    assert np.array_equal(np.asarray(d1), np.asarray(d2))
    dist = shortest_path_metric(g).dist
    assert impl.held_karp(dist) == ref.held_karp(dist)
    s = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1, max_size=g.n))
    mask = sum(1 << v for v in s)
    a = impl.shortest_steiner_cycle(g.n, g.adjacency_masks(), mask, dist)
    b = ref.shortest_steiner_cycle(g.n, g.adjacency_masks(), mask, dist)
    assert (None if a is None else list(a)) == (None if b is None else list(b))


def test_exhaustive_matches_enumeration():
    # every simple cycle of K_5 minus an edge, enumerated by permutations
    g = generators.complete(5)
    g = type(g)(5, [set(g.neighbors(v)) - ({1} if v == 0 else {0} if v == 1 else set()) for v in range(5)])
    for s in [{0, 1}, {0, 1, 2, 3, 4}, {2, 3}]:
        best = None
        for k in range(3, 6):
            for combo in itertools.permutations(range(5), k):
                if all(g.has_edge(combo[i], combo[(i + 1) % k]) for i in range(k)) and s <= set(combo):
                    best = k if best is None else min(best, k)
                    break
            if best:
                break
        c = brute_force_steiner_cycle(g, s)
        assert (c.length if c else None) == best


def test_env_var_forces_python_backend():
    import os
    import subprocess
    import sys

    env = dict(os.environ, STEINER_TSP_PURE_PYTHON="1")
    code = "from steiner_tsp import kernels; print(kernels.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "python"
