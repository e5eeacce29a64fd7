import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from conftest import biconnected_graphs, to_nx
from steiner_tsp import generators
from steiner_tsp.errors import Disconnected, IndexOutOfRange, SelfLoop, SubsetTooLarge
from steiner_tsp.graph import (
    articulation_points,
    from_edge_list,
    is_biconnected,
    is_connected,
    local_vertex_connectivity,
    shortest_path,
    shortest_path_metric,
    sigma2,
    subset_independence_number,
    two_disjoint_paths,
    vertex_connectivity,
)


def test_edge_list_dedupes_and_rejects_bad_input():
    g = from_edge_list(3, [(0, 1), (1, 0), (1, 2)])
    assert g.m == 2
    assert g.neighbors(1) == (0, 2)
    with pytest.raises(SelfLoop):
        from_edge_list(3, [(1, 1)])
    with pytest.raises(IndexOutOfRange):
        from_edge_list(3, [(0, 3)])


def test_metric_is_symmetric_and_read_only(petersen):
    d = shortest_path_metric(petersen)
    assert d.dist.shape == (10, 10)
    assert (d.dist == d.dist.T).all()
    assert d.dist.max() == 2  # diameter of the Petersen graph
    with pytest.raises(ValueError):
        d.dist[0, 1] = 5


def test_metric_rejects_disconnected():
    with pytest.raises(Disconnected):
        shortest_path_metric(from_edge_list(4, [(0, 1), (2, 3)]))


def test_petersen_connectivity(petersen):
    assert vertex_connectivity(petersen) == 3
    assert is_biconnected(petersen)
    assert subset_independence_number(petersen, range(10)) == 4


def test_named_connectivities():
    assert vertex_connectivity(generators.complete(5)) == 4
    assert vertex_connectivity(generators.cycle(7)) == 2
    assert vertex_connectivity(generators.wheel(6)) == 3
    assert not is_biconnected(generators.path(4))
    assert articulation_points(generators.star(5)) == {0}


def test_independence_guard():
    g = generators.complete(25)
    with pytest.raises(SubsetTooLarge):
        subset_independence_number(g, range(21))


def test_sigma2_without_nonadjacent_pairs_is_infinite():
    assert sigma2(generators.complete(4), range(4)) == float("inf")


@settings(max_examples=60, deadline=None)
@given(biconnected_graphs(max_n=10))
def test_connectivity_matches_networkx(g):
    h = to_nx(g)
    assert is_connected(g) == nx.is_connected(h)
    assert is_biconnected(g) == nx.is_biconnected(h)
    assert vertex_connectivity(g) == nx.node_connectivity(h)
    assert set(articulation_points(g)) == set(nx.articulation_points(h))
    d = shortest_path_metric(g).dist
    ref = dict(nx.all_pairs_shortest_path_length(h))
    assert all(d[u, v] == ref[u][v] for u in range(g.n) for v in range(g.n))


@settings(max_examples=60, deadline=None)
@given(biconnected_graphs(max_n=10))
def test_two_disjoint_paths_form_a_cycle(g):
    s, t = 0, g.n - 1
    pp = two_disjoint_paths(g, s, t)
    cyc = pp.as_cycle()
    assert len(cyc) == len(set(cyc)) >= 3
    assert s in cyc and t in cyc
    assert all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))
    if not g.has_edge(s, t):
        assert local_vertex_connectivity(g, s, t) == nx.node_connectivity(to_nx(g), s, t)


def test_shortest_path_length_matches_metric(petersen):
    d = shortest_path_metric(petersen)
    for t in range(10):
        p = shortest_path(petersen, 0, t)
        assert len(p) - 1 == d(0, t)
        assert p[0] == 0 and p[-1] == t


def test_independence_number_matches_networkx():
    rng = np.random.default_rng(7)
    for _ in range(20):
        g = generators.random_biconnected(9, int(rng.integers(9, 20)), int(rng.integers(1 << 30)))
        comp = nx.complement(to_nx(g))
        ref = max(len(c) for c in nx.find_cliques(comp))
        assert subset_independence_number(g, range(g.n)) == ref
