from dataclasses import replace

import pytest

from monocurve.algebra.exponents import Binomial, parse_binomial
from monocurve.analysis.classify4 import (
    check_report,
    classify,
    decompose_minimal_system,
    glue_degree_check,
    verify_bresinsky_form,
)
from monocurve.analysis.critical import critical_set
from monocurve.analysis.fibergraph import Verdict, curve_ideal, indispensable_binomial
from monocurve.utils.errors import ComputationRejected, InvariantViolation


def f4(text):
    return parse_binomial(text, 4)


def test_case_4b_is_not_uniquely_generated():
    report = classify((6, 8, 17, 19), check_invariants=True)
    assert report.label == "4b"
    assert tuple(report.c) == (4, 3, 2, 2)
    assert report.minimally_generated
    assert Binomial((2, 3, 0, 0), (0, 0, 1, 1)) in report.R
    assert not report.unique
    assert not report.exact_unique
    assert report.mu_IA == len(report.S) + len(report.I) + len(report.R)
    assert report.tail_alternatives[3] == ((1, 4, 0, 0), (5, 1, 0, 0))
    assert report.bresinsky_form is None


def test_critical_generator_that_is_not_indispensable():
    A = (6, 8, 17, 19)
    report = classify(A, check_invariants=True)
    f = f4("x4^2 - x1*x2^4")
    assert f in report.S
    assert indispensable_binomial(curve_ideal(A), f) is Verdict.NO
    assert indispensable_binomial(curve_ideal(A), f4("x1^4 - x2^3")) is Verdict.YES


def test_complete_intersection_in_case_2c():
    A = (14, 21, 10, 25)
    report = classify(A, check_invariants=True)
    assert report.label == "2c"
    assert report.complete_intersection
    assert report.gorenstein
    assert report.mu_IA == 3
    assert report.I == [f4("x1*x2 - x3*x4")]
    assert report.R == []
    assert report.unique and report.exact_unique and report.critical_unique
    assert report.betti == [(35, 1), (42, 1), (50, 1)]
    assert glue_degree_check(report) is True
    assert decompose_minimal_system(A).size == 3


def test_symmetric_non_complete_intersection():
    report = classify((5, 6, 7, 8), check_invariants=True)
    assert report.label == "1"
    assert report.gorenstein
    assert not report.complete_intersection
    assert report.mu_IA == 5
    assert len(report.S) == 4 and len(report.I) == 1 and report.R == []
    assert report.unique
    assert report.bresinsky_form == (0, 1, 3, 2)
    assert glue_degree_check(report) is None


@pytest.mark.slow
def test_case_2c_with_remaining_generators():
    A = (25, 30, 57, 76)
    report = classify(A, check_invariants=True)
    assert report.label == "2c"
    assert report.mu_IA == 8
    assert f4("x1^3*x2^7 - x3*x4^3") in report.R
    assert set(critical_set(A).all()) == {f4("x1^6 - x2^5"), f4("x3^4 - x4^3")}
    assert not report.unique


def test_check_report_catches_disagreement():
    report = classify((6, 8, 17, 19), check_invariants=False)
    check_report(report)
    with pytest.raises(InvariantViolation):
        check_report(replace(report, unique=True))
    with pytest.raises(InvariantViolation):
        check_report(replace(report, mu_IA=report.mu_IA + 1))


def test_bresinsky_form_absent_with_pure_power_tails():
    assert verify_bresinsky_form((6, 8, 17, 19)) is None
    assert verify_bresinsky_form((5, 6, 7, 8)) == (0, 1, 3, 2)


def test_classification_rejects_bad_input():
    with pytest.raises(ComputationRejected):
        classify((3, 4, 5))
    with pytest.raises(ComputationRejected):
        classify((4, 6, 8, 10))
    with pytest.raises(ComputationRejected):
        classify((0, 3, 4, 5))


@pytest.mark.slow
@pytest.mark.parametrize("A", [(57, 27, 51, 59), (25, 8, 23, 42), (43, 16, 38, 33)])
def test_cyclic_supports_with_large_tail_exponents_do_not_match(A):
    report = classify(A, check_invariants=True)
    assert verify_bresinsky_form(A) is None
    assert report.bresinsky_form is None
    assert not report.exact_unique


def test_cyclic_pattern_needs_tail_exponents_below_critical():
    A = (57, 27, 51, 59)
    cs = critical_set(A)
    assert f4("x4^6 - x1*x2^11") in cs.per_variable[3]
    assert cs.c[1] == 4
    assert verify_bresinsky_form(A) is None


@pytest.mark.parametrize("a", [1, 2, 3, 4, 5])
def test_family_is_not_uniquely_generated(a):
    report = classify((4, 6, 2 * a + 1, 2 * a + 3), check_invariants=True)
    assert not report.critical_unique
    assert not report.unique
    assert not report.exact_unique
