import math

import pytest
from sympy import Matrix

from monocurve.algebra.exponents import Binomial, parse_ideal_text
from monocurve.algebra.intlat import (
    Grading,
    _unimodular_pair,
    finest_grading,
    hermite_normal_form,
    invariant_factors,
    is_homogeneous,
    kernel_lattice,
    lattice_contains,
    positive_certificate,
    rank,
    saturate_lattice,
    smith_normal_form,
)
from monocurve.utils.errors import ComputationRejected


def test_hermite_normal_form_transform():
    M = Matrix([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    H, U = hermite_normal_form(M)
    assert U * M == H
    assert abs(U.det()) == 1
    assert rank(M) == 3


@pytest.mark.parametrize("a, b", [(4, 6), (-4, 6), (0, 5), (7, 0), (-9, -12), (17, 19)])
def test_unimodular_pair_clears_the_second_entry(a, b):
    p, q, s, t = _unimodular_pair(a, b)
    assert p * t - q * s == 1
    assert p * a + q * b == abs(math.gcd(a, b))
    assert s * a + t * b == 0


def test_smith_normal_form():
    M = Matrix([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    D, P, Q = smith_normal_form(M)
    assert P * M * Q == D
    assert abs(P.det()) == 1
    assert abs(Q.det()) == 1
    assert invariant_factors(M) == [2, 6, 12]
    assert invariant_factors([[2, 0], [0, 3]]) == [1, 6]


def test_kernel_of_a_curve_has_rank_n_minus_one():
    A = (6, 8, 17, 19)
    K = kernel_lattice([A])
    assert K.rows == 3
    for i in range(K.rows):
        assert sum(K[i, j] * A[j] for j in range(4)) == 0
    assert lattice_contains(K, (4, -3, 0, 0))
    assert not lattice_contains(K, (1, 0, 0, 0))


def test_saturation_adds_divided_vectors():
    L = [[2, -2, 0]]
    S = saturate_lattice(L, 3)
    assert lattice_contains(S, (1, -1, 0))
    assert not lattice_contains(L, (1, -1, 0))
    assert rank(S) == 1


def test_positive_certificate():
    assert positive_certificate([[1, 1, 1, 1]]) == (1, 1, 1, 1)
    assert positive_certificate([[1, -1]]) is None
    weight = positive_certificate([[1, 0, -1], [0, 1, 2]])
    assert weight is not None and all(w > 0 for w in weight)


def test_curve_grading_fiber():
    grading = Grading.curve((6, 8, 17, 19))
    assert grading.positive
    assert grading.is_curve
    assert grading.fiber((36,)) == [(0, 0, 1, 1), (2, 3, 0, 0), (6, 0, 0, 0)]
    assert grading.degree((1, 1, 0, 0)) == (14,)
    with pytest.raises(ComputationRejected):
        Grading.curve((3, 0, 5))


def test_finest_grading_of_demo_ideal(demo_ideal_file):
    n, gens = parse_ideal_text(demo_ideal_file.read_text())
    grading = finest_grading(gens, n)
    assert grading.d == 1
    assert grading.matrix == ((1, 1, 1, 1),)
    assert grading.weight == (1, 1, 1, 1)
    assert is_homogeneous(gens, grading)
    assert not is_homogeneous([Binomial((2, 0, 0, 0), (0, 1, 0, 0))], grading)


def test_finest_grading_rejects_trivial_grading():
    gens = [Binomial((1, 0), (0, 0)), Binomial((0, 1), (0, 0))]
    with pytest.raises(ComputationRejected):
        finest_grading(gens)
