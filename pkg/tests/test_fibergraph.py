import pytest

from monocurve.algebra.exponents import parse_binomial, parse_ideal_text
from monocurve.algebra.grobner import BinomialIdeal
from monocurve.algebra.intlat import Grading, finest_grading
from monocurve.analysis.fibergraph import (
    Verdict,
    curve_ideal,
    fiber_graph,
    indispensable_binomial,
    indispensable_monomial,
    inherits_indispensability,
    inherits_indispensable_monomial,
    is_minimal_generator,
    m_j_vertices,
    minimal_generating_set,
    unique_generation_verdict,
    unique_minimal_system,
)
from monocurve.utils.errors import ComputationRejected, NotInIdealError

A = (6, 8, 17, 19)


@pytest.fixture
def demo_ideal(demo_ideal_file):
    n, gens = parse_ideal_text(demo_ideal_file.read_text())
    return BinomialIdeal(n, tuple(gens), finest_grading(gens, n))


def f4(text):
    return parse_binomial(text, 4)


def test_demo_ideal_degree_one_graph(demo_ideal):
    graph = fiber_graph(demo_ideal, 1)
    assert graph.t == 4
    assert all(len(c) == 1 for c in graph.components)
    assert len(graph.classes) == 2
    assert graph.generator_count == 2
    assert m_j_vertices(demo_ideal, (1,)) == sorted(graph.vertices)


def test_demo_ideal_minimal_generating_set(demo_ideal):
    table = minimal_generating_set(demo_ideal)
    assert table.mu == 3
    assert table.counts() == [((1,), 2), ((2,), 1)]
    assert unique_generation_verdict(demo_ideal, table) is Verdict.UNKNOWN
    with pytest.raises(ComputationRejected):
        unique_minimal_system(demo_ideal, table)


def test_fiber_graph_of_degree_36():
    J = curve_ideal(A)
    graph = fiber_graph(J, 36)
    assert graph.vertices == ((0, 0, 1, 1), (2, 3, 0, 0), (6, 0, 0, 0))
    assert graph.components == (((0, 0, 1, 1),), ((2, 3, 0, 0), (6, 0, 0, 0)))
    assert graph.generator_count == 1
    assert is_minimal_generator(J, f4("x3*x4 - x1^6"))
    assert not is_minimal_generator(J, f4("x1^6 - x1^2*x2^3"))


def test_indispensable_binomials_of_a_curve():
    J = curve_ideal(A)
    assert indispensable_binomial(J, f4("x1^4 - x2^3")) is Verdict.YES
    assert indispensable_binomial(J, f4("x4^2 - x1*x2^4")) is Verdict.NO
    assert indispensable_monomial(J, (0, 0, 0, 2))
    assert not indispensable_monomial(J, (1, 4, 0, 0))
    with pytest.raises(NotInIdealError):
        indispensable_binomial(J, f4("x1 - x2"))


def test_indispensability_transfers_to_a_subideal():
    twisted = (3, 4, 5)
    I = curve_ideal(twisted)
    f = parse_binomial("x2^2 - x1*x3", 3)
    J = BinomialIdeal(3, (f,), Grading.curve(twisted))
    assert inherits_indispensability(J, I, f) is Verdict.YES
    assert inherits_indispensable_monomial(J, I, (0, 2, 0))
    with pytest.raises(NotInIdealError):
        inherits_indispensability(J, I, parse_binomial("x1^3 - x2*x3", 3))


def test_twisted_cubic_has_a_unique_minimal_system():
    I = curve_ideal((3, 4, 5))
    table = minimal_generating_set(I)
    assert table.mu == 3
    assert unique_minimal_system(I, table)
    assert unique_generation_verdict(I, table) is Verdict.YES


@pytest.mark.slow
def test_three_component_fiber_breaks_uniqueness():
    I = curve_ideal((15, 16, 81, 82, 83, 84))
    graph = fiber_graph(I, 165)
    assert graph.t == 3
    assert graph.generator_count == 2
    assert not unique_minimal_system(I)
