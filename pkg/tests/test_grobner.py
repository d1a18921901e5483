import pytest

from monocurve.algebra.exponents import Binomial, TermOrder, parse_binomial, parse_ideal_text
from monocurve.algebra.grobner import (
    BinomialIdeal,
    LawrenceIdeal,
    buchberger,
    graver_basis,
    is_groebner_basis,
    membership,
    min_graver_degree_filter,
    saturate,
    spoly,
    toric_ideal,
)
from monocurve.algebra.intlat import Grading, finest_grading
from monocurve.utils.errors import ComputationRejected

TWISTED = (3, 4, 5)
TWISTED_GENERATORS = ["x1^3 - x2*x3", "x2^2 - x1*x3", "x3^2 - x1^2*x2"]


def b(text, n=3):
    return parse_binomial(text, n)


def test_spoly_and_groebner_criterion():
    lex = TermOrder.lex(3)
    f, g = b("x1^2 - x2"), b("x1*x2 - x3")
    assert spoly(f, g) == b("x2^2 - x1*x3")
    assert not is_groebner_basis([f, g], lex)

    basis = buchberger([f, g], lex)
    assert is_groebner_basis(basis, lex)
    for h in (f, g, b("x2^2 - x1*x3")):
        assert BinomialIdeal(3, tuple(basis)).normal_form(h, lex) is None


def test_linear_ideal_is_its_own_basis():
    order = TermOrder.grevlex(3)
    gens = [b("x1 - x2"), b("x2 - x3")]
    assert is_groebner_basis(gens, order)
    assert set(buchberger(gens, order)) == {b("x1 - x3"), b("x2 - x3")}


def test_saturation_of_demo_ideal(demo_ideal_file):
    n, gens = parse_ideal_text(demo_ideal_file.read_text())
    I = BinomialIdeal(n, tuple(gens), finest_grading(gens, n))
    assert not I.contains(parse_binomial("x2 - x4", 4))

    sat = saturate(I)
    expected = {parse_binomial(t, 4) for t in ("x1 - x4", "x2 - x4", "x3 - x4")}
    assert set(sat.groebner_basis()) == expected
    assert sat.contains(parse_binomial("x1 - x3", 4))


def test_toric_ideal_of_twisted_curve():
    J = toric_ideal(Grading.curve(TWISTED))
    assert J.toric
    for text in TWISTED_GENERATORS:
        assert J.normal_form(b(text)) is None
    assert membership(J, b("x1^4 - x2^3"))
    assert not membership(J, b("x1 - x2"))


def test_toric_membership_agrees_with_normal_form():
    J = toric_ideal(Grading.curve(TWISTED))
    plain = BinomialIdeal(3, J.generators, J.grading)
    for text in ("x1^5 - x3^3", "x1^4 - x2^3", "x1*x2 - x3", "x2^5 - x3^4"):
        assert membership(J, b(text)) == membership(plain, b(text))


def test_lawrence_lift_and_project():
    lawrence = LawrenceIdeal(Grading.curve(TWISTED))
    f = b("x2^2 - x1*x3")
    F = lawrence.lift(f)
    assert F.n == 6
    assert lawrence.project(F) == f
    assert lawrence.grading.homogeneous(F)


def test_graver_basis_contains_the_minimal_generators():
    A = Grading.curve(TWISTED)
    graver = graver_basis(A)
    for text in TWISTED_GENERATORS + ["x1^4 - x2^3", "x1^5 - x3^3", "x2^5 - x3^4"]:
        assert b(text) in graver
    assert all(A.homogeneous(f) for f in graver)
    assert min_graver_degree_filter(A, graver) == [b("x2^2 - x1*x3")]


def test_binomial_ideal_requires_homogeneous_generators():
    with pytest.raises(ComputationRejected):
        BinomialIdeal(3, (Binomial((1, 0, 0), (0, 1, 0)),), Grading.curve(TWISTED))
