import pytest

from monocurve.algebra.semigroup import (
    NumericalSemigroup,
    apery_set,
    critical_exponents,
    fiber,
    frobenius_number,
    is_symmetric,
    representable,
    weighted_compositions,
)
from monocurve.utils.errors import ComputationRejected


def naive_members(generators, limit):
    members = {0}
    for k in range(1, limit + 1):
        if any(k - a in members for a in generators if k >= a):
            members.add(k)
    return members


def test_weighted_compositions_are_sorted_and_complete():
    out = weighted_compositions((1, 2), 4)
    assert out == [(0, 2), (2, 1), (4, 0)]
    assert weighted_compositions((3, 5), 7) == []
    with pytest.raises(ComputationRejected):
        weighted_compositions((1, 1, 1), 10, limit=5)


def test_fiber_of_degree_165_has_three_monomials():
    monomials = fiber((15, 16, 81, 82, 83, 84), 165)
    assert monomials == [
        (0, 0, 0, 1, 1, 0),
        (0, 0, 1, 0, 0, 1),
        (11, 0, 0, 0, 0, 0),
    ]


def test_representable_matches_naive_membership():
    gens = (6, 8, 17, 19)
    reach = representable(gens, 80)
    members = naive_members(gens, 80)
    assert {k for k in range(81) if reach[k]} == members


def test_numerical_semigroup_invariants():
    S = NumericalSemigroup((5, 6, 7, 8))
    assert S.multiplicity == 5
    assert S.frobenius == 9
    assert frobenius_number(S) == 9
    assert list(S.gaps()) == [1, 2, 3, 4, 9]
    assert S.genus == 5
    assert is_symmetric(S)
    assert 10 in S and 9 not in S
    assert apery_set((5, 6, 7, 8), 5) == (0, 6, 7, 8, 14)


def test_symmetry_by_gap_scan():
    for gens in [(5, 6, 7, 8), (3, 4, 5), (15, 16, 81, 82, 83, 84), (6, 8, 17, 19), (4, 6, 9)]:
        S = NumericalSemigroup(gens)
        members = naive_members(gens, S.frobenius + 1)
        gap_symmetric = all((z in members) != (S.frobenius - z in members) for z in range(S.frobenius + 1))
        assert S.is_symmetric() == gap_symmetric
    assert not NumericalSemigroup((3, 4, 5)).is_symmetric()


def test_semigroup_rejects_common_divisor():
    with pytest.raises(ComputationRejected):
        NumericalSemigroup((4, 6, 10))


def test_critical_exponents():
    c = critical_exponents((6, 8, 17, 19))
    assert tuple(c) == (4, 3, 2, 2)
    assert c.degrees == (24, 24, 34, 38)
    assert tuple(critical_exponents((25, 30, 57, 76))) == (6, 5, 4, 3)
