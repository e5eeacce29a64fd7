from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import biconnected_graphs
from steiner_tsp import io
from steiner_tsp.errors import InvalidWalk, ParseError, RequiredNotOnCycle
from steiner_tsp.walks import ClosedWalk, SteinerCycle, walk_stats


def test_parse_comments_and_tree_flag():
    n, edges, is_tree = io.parse_edge_list("# hello\n3 2 tree\n0 1\n# mid\n1 2\n")
    assert (n, edges, is_tree) == (3, [(0, 1), (1, 2)], True)


@pytest.mark.parametrize(
    "text",
    ["", "3\n", "3 x\n", "3 2\n0 1\n", "3 1\n0 1 2\n", "2 1\n0 5\n"],
)
def test_parse_errors(tmp_path, text):
    p = tmp_path / "g.txt"
    p.write_text(text)
    with pytest.raises(ParseError):
        io.read_graph(p)


@settings(max_examples=40, deadline=None)
@given(biconnected_graphs(max_n=12))
def test_round_trip(g):
    n, edges, _ = io.parse_edge_list(io.format_edge_list(g.n, g.edges(), comment="x\ny"))
    assert n == g.n and sorted(edges) == sorted(g.edges())


def test_cycle_round_trip():
    assert io.parse_cycle(io.format_cycle((0, 1, 2, 3))) == (0, 1, 2, 3)


def test_fig1_walk_stats(fig1_graph):
    w = ClosedWalk.in_graph(fig1_graph, (0, 1, 2, 3, 4, 5, 6, 7, 6, 5))
    stats = walk_stats(w)
    assert stats.unique == 8
    assert stats.length == 10
    assert stats.beta == Fraction(5, 4)
    c = SteinerCycle(w, {0, 7})
    assert c.gamma == Fraction(1, 4)
    assert not c.is_simple


def test_walk_validation(fig1_graph):
    with pytest.raises(InvalidWalk):
        ClosedWalk.in_graph(fig1_graph, (0, 1, 3))
    with pytest.raises(InvalidWalk):
        ClosedWalk((0, 1))
    w = ClosedWalk.in_graph(fig1_graph, tuple(range(6)))
    assert w.is_simple and w.length == 6
    with pytest.raises(RequiredNotOnCycle):
        SteinerCycle(w, {7})
