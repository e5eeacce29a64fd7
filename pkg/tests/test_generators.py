import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from conftest import to_nx
from steiner_tsp import generators
from steiner_tsp.errors import BadParameter, BudgetExceeded


def test_petersen_is_the_petersen_graph(petersen):
    assert nx.is_isomorphic(to_nx(petersen), nx.petersen_graph())


@pytest.mark.parametrize(
    "spec, ref",
    [
        ("wheel:5", nx.wheel_graph(6)),
        ("complete_bipartite:2,4", nx.complete_bipartite_graph(2, 4)),
        ("cycle:7", nx.cycle_graph(7)),
        ("complete:5", nx.complete_graph(5)),
        ("path:4", nx.path_graph(4)),
        ("star:5", nx.star_graph(4)),
    ],
)
def test_named_families(spec, ref):
    assert nx.is_isomorphic(to_nx(generators.named(spec)), ref)


def test_named_errors():
    with pytest.raises(BadParameter):
        generators.named("dodecahedron")
    with pytest.raises(BadParameter):
        generators.named("wheel")
    with pytest.raises(BadParameter):
        generators.named("wheel:x")


@settings(max_examples=80, deadline=None)
@given(st.integers(3, 20), st.data(), st.integers(0, 2**64 - 1))
def test_random_biconnected_exact_size(n, data, seed):
    m = data.draw(st.integers(n, n * (n - 1) // 2))
    g = generators.random_biconnected(n, m, seed)
    assert (g.n, g.m) == (n, m)
    assert nx.is_biconnected(to_nx(g))
    assert g == generators.random_biconnected(n, m, seed)


def test_random_biconnected_rejects_impossible():
    with pytest.raises(BudgetExceeded):
        generators.random_biconnected(5, 4, 0)
    with pytest.raises(BadParameter):
        generators.random_biconnected(4, 7, 0)


@pytest.mark.parametrize("n", [4, 10, 24])
def test_random_cubic(n):
    for seed in range(5):
        g = generators.random_cubic(n, seed)
        assert all(g.degree(v) == 3 for v in range(n))
        assert nx.is_biconnected(to_nx(g))


def test_planted_path_contains_path():
    inst = generators.planted_ham_path(50, 5, 9)
    g = inst.graph
    assert all(g.has_edge(a, b) for a, b in zip(inst.path, inst.path[1:]))
    assert g.m == 49 + 5
    assert nx.is_biconnected(to_nx(g))
    assert generators.planted_ham_path(50, 5, 9) == inst
