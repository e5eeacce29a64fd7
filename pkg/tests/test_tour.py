from fractions import Fraction
import math

import pytest
from hypothesis import given, settings

from conftest import biconnected_graphs
from steiner_tsp import generators
from steiner_tsp.errors import GammaTooLarge, InvariantViolation, OddDegree
from steiner_tsp.graph import shortest_path_metric
from steiner_tsp.oracle import held_karp_opt
from steiner_tsp.spanning import build_spanning_tree, path_tree
from steiner_tsp.steiner import find_steiner_cycle
from steiner_tsp.tour import (
    Case,
    EvenMultigraph,
    SolveConfig,
    build_tour,
    corollary_check,
    corollary_threshold,
    cycle_induced_matching,
    euler_circuit,
    min_weight_perfect_matching,
    shortcut,
    solve,
    theorem_bound,
)
from steiner_tsp.walks import ClosedWalk, SteinerCycle


def test_euler_circuit_uses_each_edge_once():
    m = EvenMultigraph(4, ((0, 1), (1, 2), (2, 0), (0, 3), (3, 0)))
    walk = euler_circuit(m, start=0)
    assert walk[0] == walk[-1] == 0
    steps = sorted(tuple(sorted(e)) for e in zip(walk, walk[1:]))
    assert steps == sorted(tuple(sorted(e)) for e in m.edges)


def test_euler_rejects_odd_degree():
    with pytest.raises(OddDegree):
        euler_circuit(EvenMultigraph(3, ((0, 1), (1, 2))))


def test_shortcut_never_lengthens(petersen):
    m = shortest_path_metric(petersen)
    walk = [0, 1, 2, 3, 4, 0, 5, 7, 9, 6, 8, 5, 0]
    tour = shortcut(walk, m)
    assert sorted(tour.order) == list(range(10))
    assert tour.length <= len(walk) - 1


def test_matching_is_at_most_half_the_cycle():
    g = generators.cycle(8)
    m = shortest_path_metric(g)
    c = SteinerCycle(ClosedWalk.in_graph(g, range(8)), {0, 1, 4, 6})
    pairs = cycle_induced_matching(m, c, {0, 1, 4, 6})
    assert 2 * sum(m(a, b) for a, b in pairs) <= 8
    assert sorted(v for p in pairs for v in p) == [0, 1, 4, 6]


def test_exact_matching_is_minimum():
    g = generators.cycle(6)
    m = shortest_path_metric(g)
    pairs, cost = min_weight_perfect_matching(m, [0, 1, 3, 4])
    assert cost == 2


def test_theta_case_and_bound():
    g = generators.theta(6, 3)
    t = path_tree(g, list(range(6)))
    c = find_steiner_cycle(g, t.odd_set)
    tour, cert = build_tour(g, shortest_path_metric(g), t, c)
    assert cert.case is Case.TREE_MATCHING
    assert tour.length == cert.achieved <= cert.bound <= theorem_bound(6, 0)


def test_ties_go_to_tree_matching():
    # |C| = 2n/3 exactly: n = 6, |C| = 4
    g = generators.theta(6, 3)
    t = path_tree(g, [1, 2, 3, 4, 5, 0])
    c = SteinerCycle(ClosedWalk.in_graph(g, (0, 1, 2, 3)), t.odd_set)
    _, cert = build_tour(g, shortest_path_metric(g), t, c)
    assert Fraction(2 * 6, 3) == c.unique_count
    assert cert.case is Case.TREE_MATCHING


def test_gamma_at_least_one_rejected():
    g = generators.complete_bipartite(2, 3)
    t = build_spanning_tree(g, "bfs")
    c = SteinerCycle(ClosedWalk.in_graph(g, (0, 2, 0, 3, 0, 4, 1, 4, 1, 2)), t.odd_set)
    assert c.gamma == 1
    with pytest.raises(GammaTooLarge):
        build_tour(g, shortest_path_metric(g), t, c)


@settings(max_examples=60, deadline=None)
@given(biconnected_graphs(max_n=10))
def test_solve_is_certified_and_above_opt(g):
    sol = solve(g)
    cert = sol.certificate
    m = shortest_path_metric(g)
    assert sorted(sol.tour.order) == list(range(g.n))
    assert m.tour_length(sol.tour.order) == sol.tour.length == cert.achieved
    assert cert.achieved <= cert.bound
    assert held_karp_opt(m).opt_length <= cert.achieved
    if sol.cycle is not None and sol.cycle.is_simple:
        assert cert.achieved <= math.floor(Fraction(4 * g.n, 3))


def test_tour_expands_to_closed_walk(petersen):
    sol = solve(petersen)
    walk = sol.tour.expand(petersen)
    assert len(walk) == sol.tour.length
    assert ClosedWalk.in_graph(petersen, walk).vertices == set(range(10))


def test_fallback_when_nothing_is_usable():
    # K_{2,8}: right side odd in the star-like trees; no simple cycle covers it
    g = generators.complete_bipartite(2, 8)
    sol = solve(g, SolveConfig(approximate=False))
    assert sol.certificate.case is Case.DOUBLE_TREE_FALLBACK
    assert sol.certificate.proven_absent
    assert sol.certificate.achieved <= 2 * (g.n - 1)


@pytest.mark.parametrize(
    "alpha, threshold",
    [(0, Fraction(1)), (Fraction(1, 4), Fraction(8, 5)), (1, Fraction(5, 2))],
)
def test_corollary_thresholds(alpha, threshold):
    assert corollary_threshold(alpha) == threshold


def test_corollary_rejects_alpha_out_of_range(fig1_graph):
    c = SteinerCycle(ClosedWalk.in_graph(fig1_graph, range(6)), {0})
    with pytest.raises(ValueError):
        corollary_check(2, c)


def test_invariant_violation_is_assertion():
    assert issubclass(InvariantViolation, AssertionError)
