from fractions import Fraction

import networkx as nx
from hypothesis import given, settings

from conftest import biconnected_graphs, to_nx
from steiner_tsp import generators
from steiner_tsp.dfs_circulation import dfs_tree, ms_bound, select_back_edges


def _check(g, root=0):
    t = dfs_tree(g, root)
    cert = select_back_edges(g, t)
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(t.tree_edges())
    h.add_edges_from(cert.selected_back_edges)
    assert nx.is_biconnected(h)
    assert set(cert.selected_back_edges) <= set(t.back_edges)
    assert cert.total_cost == sum(cert.per_vertex_cost.values())
    assert 0 <= cert.total_cost <= cert.k == t.k == len(t.leaves)
    return t, cert


def test_dfs_tree_shape(petersen):
    t = dfs_tree(petersen)
    assert t.parent[0] == -1
    assert len(t.tree_edges()) == 9
    # back edges go to proper ancestors
    assert all(t.is_ancestor(a, d) and a != d for d, a in t.back_edges)
    nt = nx.dfs_tree(to_nx(petersen), 0)
    assert sorted(tuple(sorted(e)) for e in nt.edges) == sorted(tuple(sorted(e)) for e in t.tree_edges())


@settings(max_examples=80, deadline=None)
@given(biconnected_graphs(max_n=16))
def test_certificate_on_random_graphs(g):
    _check(g)


def test_certificate_on_cubic_and_named():
    for s in range(10):
        _check(generators.random_cubic(20, s))
    for g in (generators.petersen(), generators.wheel(9), generators.complete(7), generators.cycle(9)):
        for root in range(g.n):
            _check(g, root)


def test_bound_is_exact():
    assert ms_bound(9, 3) == Fraction(42, 3) == 14
    _, cert = _check(generators.cycle(6))
    assert cert.k == 1 and cert.bound == Fraction(26, 3)


def test_cycle_and_k4_examples():
    t, cert = _check(generators.cycle(9))
    assert cert.selected_back_edges == ((8, 0),)
    t, cert = _check(generators.complete(4))
    assert sorted(t.back_edges) == [(2, 0), (3, 0), (3, 1)]
    assert cert.selected_back_edges == ((3, 0),)
    assert cert.total_cost == 0
    assert ms_bound(10, 1) == 14
