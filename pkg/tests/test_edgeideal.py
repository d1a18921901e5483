import networkx as nx
import pytest

from monocurve.algebra.exponents import format_binomial
from monocurve.analysis.edgeideal import (
    SimpleGraph,
    connected_graphs,
    edge_binomial,
    edge_ideal,
    graph_from_edges,
    lawrence_containment,
    lawrence_grading,
    parse_graph_text,
    verify_all_connected,
    verify_unique_generation,
)
from monocurve.utils.errors import ComputationRejected, ParseError


def test_simple_graph_normalizes_edges():
    G = SimpleGraph(3, ((1, 0), (2, 1)))
    assert G.edges == ((0, 1), (1, 2))
    assert G == SimpleGraph.path(3)
    assert str(G) == "graph 3: 1-2, 2-3"
    assert G.is_connected and not G.is_complete
    assert SimpleGraph.complete(4).is_complete
    assert graph_from_edges(3, [(1, 2), (2, 3)]) == G
    with pytest.raises(ValueError):
        SimpleGraph(3, ((0, 0),))
    with pytest.raises(ValueError):
        SimpleGraph(3, ((0, 1), (1, 0)))


def test_networkx_round_trip():
    G = SimpleGraph.from_networkx(nx.cycle_graph(4))
    assert len(G.edges) == 4
    assert nx.is_isomorphic(G.to_networkx(), nx.cycle_graph(4))


def test_parse_graph_text():
    G = parse_graph_text("# a path\ngraph 3\n1 2  # first edge\n2 3\n")
    assert G == SimpleGraph.path(3)


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("3\n1 2\n", 1, 0),
        ("graph 3\n1 4\n", 2, 2),
        ("graph 3\n2 2\n", 2, 0),
        ("graph 3\n1 2\n2 1\n", 3, 0),
        ("graph 3\n1 x\n", 2, 0),
        ("# only a comment\n", 1, 0),
    ],
)
def test_parse_graph_errors(text, line, column):
    with pytest.raises(ParseError) as err:
        parse_graph_text(text)
    assert err.value.line == line
    assert err.value.position == column


def test_edge_binomials_are_lawrence_homogeneous():
    f = edge_binomial(3, 0, 1)
    assert f.lhs == (1, 0, 0, 0, 1, 0)
    assert f.rhs == (0, 1, 0, 1, 0, 0)
    assert format_binomial(f, lawrence=True) == "x1*y2 - x2*y1"
    grading = lawrence_grading(3)
    assert grading.positive
    assert all(grading.homogeneous(g) for g in edge_ideal(SimpleGraph.complete(3)).generators)


def test_unique_generation_of_small_graphs():
    assert verify_unique_generation(SimpleGraph.path(3))
    assert verify_unique_generation(SimpleGraph.complete(4))
    with pytest.raises(ComputationRejected):
        verify_unique_generation(SimpleGraph(3, ((0, 1),)))


def test_lawrence_containment():
    assert lawrence_containment(SimpleGraph.path(3)) == (True, False)
    assert lawrence_containment(SimpleGraph.complete(3), exact=True) == (True, True)


def test_connected_graph_enumeration():
    graphs = list(connected_graphs(4))
    assert len(graphs) == 1 + 2 + 6
    assert all(G.is_connected for G in graphs)
    with pytest.raises(ComputationRejected):
        list(connected_graphs(8))


@pytest.mark.slow
def test_every_connected_graph_up_to_five_vertices():
    results = verify_all_connected(5, cross_check=True)
    assert len(results) == 30
    assert all(results.values())
