import pytest

from monocurve.algebra.exponents import parse_binomial
from monocurve.algebra.semigroup import critical_exponents
from monocurve.analysis.fibergraph import Verdict, curve_ideal
from monocurve.analysis.graver import (
    is_semi_primitive,
    match_pattern,
    min_graver_degree_indispensables,
    primitive_indispensables,
    restricted_unique_generation,
    semi_primitive_indispensables,
)
from monocurve.utils.errors import ComputationRejected

CI = (14, 21, 10, 25)


def f4(text):
    return parse_binomial(text, 4)


def test_match_pattern():
    pattern = match_pattern(f4("x1*x2 - x3*x4"), (3, 2, 5, 2))
    assert pattern.indices == (0, 1, 2, 3)
    assert pattern.exponents == (1, 1, 1, 1)
    assert pattern.strict

    loose = match_pattern(f4("x1^2*x2^3 - x3*x4"), (4, 3, 2, 2))
    assert loose.below == (True, False, True, True)
    assert not loose.strict

    assert match_pattern(f4("x1^4 - x2^3"), (4, 3, 2, 2)) is None
    assert match_pattern(f4("x1*x2 - x2*x3"), (4, 3, 2, 2)) is None


def test_primitive_indispensables_of_a_complete_intersection():
    assert f4("x1*x2 - x3*x4") in primitive_indispensables(CI)


def test_semi_primitive_shape():
    c = critical_exponents(CI)
    I = curve_ideal(CI)
    g = is_semi_primitive(I, f4("x3*x4 - x1*x2"), c)
    assert g is not None
    assert semi_primitive_indispensables(CI) == [f4("x1*x2 - x3*x4")]

    A = (6, 8, 17, 19)
    assert is_semi_primitive(curve_ideal(A), f4("x1^2*x2^3 - x3*x4"), critical_exponents(A)) is None
    assert is_semi_primitive(curve_ideal(A), f4("x1^4 - x2^3"), critical_exponents(A)) is None


def test_least_degree_graver_elements():
    assert min_graver_degree_indispensables(CI) == [f4("x1*x2 - x3*x4")]


def test_restricted_ideal_is_uniquely_generated():
    assert restricted_unique_generation(CI) is Verdict.YES


def test_four_variable_shapes_reject_other_sizes():
    with pytest.raises(ComputationRejected):
        primitive_indispensables((3, 4, 5))
    with pytest.raises(ComputationRejected):
        restricted_unique_generation(CI, (0, 1, 1, 2))
    with pytest.raises(ComputationRejected):
        min_graver_degree_indispensables((3, 4, 5))
