from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gmcone.geometry.exceptions import InvalidWalshPointError
from gmcone.geometry.walsh import (
    Frame,
    Line,
    MetricGraph,
    b0,
    corner_graph,
    horofunction,
    walsh_distance,
    walsh_distance_oracle,
    walsh_gromov,
    x1,
    x2,
    y1,
    y2,
)


positions = st.fractions(min_value=-35, max_value=35, max_denominator=8)


@st.composite
def walsh_points(draw):
    if draw(st.booleans()):
        return Line(draw(positions))
    n = draw(st.integers(min_value=1, max_value=30))
    ell = draw(st.fractions(min_value=0, max_value=4 * n, max_denominator=8))
    return Frame(n, ell)


def test_frame_invalid():
    with pytest.raises(InvalidWalshPointError):
        Frame(0, 0)
    with pytest.raises(InvalidWalshPointError):
        Frame(2, 9)
    with pytest.raises(InvalidWalshPointError):
        Frame(2, -1)


def test_anchors():
    assert b0() == Line(0)
    assert x1(4) == Line(-4)
    assert x2(4) == Line(4)
    assert y1(4) == Frame(4, 4)
    assert y2(4) == Frame(4, 12)


@pytest.mark.parametrize('n', (1, 2, 7, 30))
def test_walsh_distance_anchors(n):
    assert walsh_distance(b0(), y1(n)) == 2 * n
    assert walsh_distance(y1(n), y2(n)) == 2 * n
    assert walsh_distance(x1(n), x2(n)) == 2 * n


def test_walsh_distance_examples():
    assert walsh_distance(Line(-3), Line(5)) == 8
    assert walsh_distance(Frame(2, 1), Line(0)) == 3
    assert walsh_distance(Frame(2, 1), Frame(3, Fraction(1, 2))) == Fraction(5, 2)
    assert walsh_distance(Frame(2, 0), Line(-2)) == 0


@pytest.mark.parametrize('n', (1, 5, 30))
def test_walsh_gromov(n):
    assert walsh_gromov(x1(n), x2(n)) == 0
    assert walsh_gromov(y1(n), y2(n)) == n
    assert walsh_gromov(b0(), y2(n)) == 0


@pytest.mark.parametrize('t', (Fraction(-5, 2), 0, 3))
def test_horofunction_on_the_line(t):
    n = 6

    assert horofunction(x1(n), Line(t)) == t
    assert horofunction(y1(n), Line(t)) == t
    assert horofunction(y2(n), b0()) == 0


def test_horofunctions_agree_beyond_the_sample():
    sample = [Line(Fraction(-7, 2)), Line(4), Frame(1, 3), Frame(3, Fraction(11, 2)), Frame(5, 20)]
    for n in range(11, 20):
        for p in sample:
            assert horofunction(x1(n), p) == horofunction(y1(n), p)


def test_metric_graph():
    graph = MetricGraph()
    graph.add_edge('a', 'b', 5)
    graph.add_edge('b', 'c', 1)
    graph.add_edge('a', 'c', 3)
    graph.add_edge('a', 'b', 7)
    graph.add_node('d')

    assert graph.dijkstra('a') == {'a': 0, 'b': 4, 'c': 3}


def test_corner_graph_nodes():
    graph = corner_graph(Frame(2, 3), Line(5))

    assert ('line', -2) in graph.adjacency
    assert ('line', 2) in graph.adjacency
    assert ('line', 5) in graph.adjacency
    assert ('frame', 2, 3) in graph.adjacency


@given(walsh_points(), walsh_points())
def test_closed_form_matches_oracle(p, q):
    assert walsh_distance(p, q) == walsh_distance_oracle(p, q)


@given(walsh_points(), walsh_points(), walsh_points())
def test_metric_axioms(p, q, r):
    assert walsh_distance(p, p) == 0
    assert walsh_distance(p, q) == walsh_distance(q, p)
    assert walsh_distance(p, r) <= walsh_distance(p, q) + walsh_distance(q, r)
