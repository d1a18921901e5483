import pytest

from monocurve.algebra.exponents import parse_binomial
from monocurve.analysis.critical import (
    Applicability,
    CaseLabel,
    chain_implies_toric,
    circuit,
    circuit_in_reduced_gb,
    circuit_indispensable,
    circuits,
    classify_critical_case,
    critical_binomials,
    critical_set,
    critical_unique,
    distinct_choice_generates,
    indispensable_critical,
    mu_critical_ideal,
)
from monocurve.utils.errors import ComputationRejected, NotInIdealError

A = (6, 8, 17, 19)


def f4(text):
    return parse_binomial(text, 4)


def test_critical_binomials_and_tails():
    cs = critical_set(A)
    assert tuple(cs.c) == (4, 3, 2, 2)
    assert cs.pattern == ((0, 1), (2,), (3,))
    assert critical_binomials(A, 0) == [f4("x1^4 - x2^3")]
    assert critical_binomials(A, 3) == [f4("x4^2 - x1*x2^4"), f4("x4^2 - x1^5*x2")]
    assert cs.tails(2) == [(3, 2, 0, 0)]
    assert cs.tails(3) == [(1, 4, 0, 0), (5, 1, 0, 0)]
    assert not cs.has_tails(0)


def test_case_4b_with_two_tails_for_the_last_variable():
    case = classify_critical_case(A)
    assert case.label is CaseLabel.CASE_4B
    assert case.mu_CA == 3 == mu_critical_ideal(A)
    assert case.permutation == (0, 1, 2, 3)
    assert list(case.S) == [f4("x1^4 - x2^3"), f4("x3^2 - x1^3*x2^2"), f4("x4^2 - x1*x2^4")]
    assert case.tail_alternatives == {2: ((3, 2, 0, 0),), 3: ((1, 4, 0, 0), (5, 1, 0, 0))}
    assert not critical_unique(A, case)


def test_case_2c_pairs():
    case = classify_critical_case((14, 21, 10, 25))
    assert case.label is CaseLabel.CASE_2C
    assert case.critical.degrees == (42, 42, 50, 50)
    assert set(case.S) == {f4("x1^3 - x2^2"), f4("x3^5 - x4^2")}
    assert critical_unique((14, 21, 10, 25), case)


def test_case_1_for_distinct_critical_degrees():
    case = classify_critical_case((5, 6, 7, 8))
    assert case.label is CaseLabel.CASE_1
    assert case.critical.degrees == (15, 12, 14, 16)
    assert case.mu_CA == 4
    assert len(case.tails_in_S) == 4
    assert critical_unique((5, 6, 7, 8), case)
    assert distinct_choice_generates((5, 6, 7, 8)) is Applicability.APPLIES


@pytest.mark.parametrize("a", [1, 2, 3, 4, 5])
def test_family_without_unique_critical_system(a):
    assert not critical_unique((4, 6, 2 * a + 1, 2 * a + 3))


def test_classification_needs_four_relatively_prime_generators():
    with pytest.raises(ComputationRejected):
        classify_critical_case((3, 4, 5))
    with pytest.raises(ComputationRejected):
        classify_critical_case((2, 4, 6, 8))


def test_indispensable_critical():
    assert indispensable_critical(A, f4("x1^4 - x2^3"))
    assert indispensable_critical(A, f4("x2^3 - x1^4"))
    assert not indispensable_critical(A, f4("x4^2 - x1*x2^4"))
    with pytest.raises(NotInIdealError):
        indispensable_critical(A, f4("x1^6 - x3*x4"))


def test_circuits():
    assert circuit(A, 0, 1) == f4("x1^4 - x2^3")
    assert circuit(A, 2, 3) == f4("x3^19 - x4^17")
    assert len(circuits(A)) == 6
    assert circuit_indispensable(A, 0, 1)
    assert circuit_in_reduced_gb(A, 0, 1)
    with pytest.raises(ValueError):
        circuit(A, 1, 1)


def test_chain_hypothesis():
    assert chain_implies_toric((2, 3)) is Applicability.APPLIES
    assert chain_implies_toric((6, 10, 15)) is Applicability.APPLIES
    assert chain_implies_toric(A) is Applicability.NOT_APPLICABLE


def test_one_per_variable_choice_needs_distinct_binomials():
    assert distinct_choice_generates(A) is Applicability.NOT_APPLICABLE


@pytest.mark.parametrize("a", [1, 2, 3, 4, 5])
def test_family_has_two_critical_binomials_for_x4(a):
    A = (4, 6, 2 * a + 1, 2 * a + 3)
    group = critical_set(A).per_variable[3]
    assert f4(f"x4^2 - x1^{a}*x2") in group
    assert f4("x4^2 - x1*x3^2") in group
