import pytest

from monocurve.algebra.exponents import (
    Binomial,
    TermOrder,
    binomial_from_vector,
    canonical_sorted,
    divides,
    format_binomial,
    format_monomial,
    monomial_gcd,
    monomial_lcm,
    parse_binomial,
    parse_ideal_text,
    parse_monomial,
    support,
    unit,
)
from monocurve.utils.errors import ParseError


def test_monomial_helpers():
    u, v = (2, 0, 1), (1, 3, 0)
    assert monomial_gcd(u, v) == (1, 0, 0)
    assert monomial_lcm(u, v) == (2, 3, 1)
    assert support(u) == {0, 2}
    assert divides((1, 0, 0), u)
    assert not divides(v, u)
    assert unit(1, 3, 4) == (0, 4, 0)
    with pytest.raises(ValueError):
        monomial_gcd((1, 2), (1, 2, 3))


def test_binomial_equality_ignores_sign():
    f = Binomial((4, 0, 0, 0), (0, 3, 0, 0))
    assert f == f.reversed()
    assert hash(f) == hash(f.reversed())
    assert len({f, f.reversed()}) == 1
    assert f.vector == (4, -3, 0, 0)
    assert f.degree((6, 8, 17, 19)) == 24
    assert f.is_homogeneous([(6, 8, 17, 19)])


def test_zero_and_negative_binomials_rejected():
    with pytest.raises(ValueError):
        Binomial((1, 1), (1, 1))
    with pytest.raises(ValueError):
        Binomial((1, -1), (0, 0))


def test_canonical_orientation_puts_larger_term_first():
    f = Binomial((0, 3, 0, 0), (4, 0, 0, 0))
    g, sign = f.canonical()
    assert g.lhs == (4, 0, 0, 0)
    assert sign == -1
    assert len(canonical_sorted([f, g])) == 1


def test_binomial_from_vector():
    assert binomial_from_vector((2, -1, 0, -1)) == Binomial((2, 0, 0, 0), (0, 1, 0, 1))


def test_format_and_parse():
    f = parse_binomial("x1^4 - x2^3", 4)
    assert f.lhs == (4, 0, 0, 0)
    assert f.rhs == (0, 3, 0, 0)
    assert format_binomial(f) == "x1^4 - x2^3"
    assert str(parse_binomial("x4^2 - x1*x2^4", 4)) == "x4^2 - x1*x2^4"
    assert format_monomial((0, 0, 0)) == "1"
    assert format_monomial((2, 1, 0)) == "x1^2*x2"
    assert parse_monomial("x3 * x4", 4) == (0, 0, 1, 1)


def test_parse_lawrence_variables():
    f = parse_binomial("x1*y2 - x2*y1", 4, lawrence=True)
    assert f.lhs == (1, 0, 0, 1)
    assert f.rhs == (0, 1, 1, 0)
    assert format_binomial(f, lawrence=True) == "x1*y2 - x2*y1"


def test_parse_errors_report_position():
    with pytest.raises(ParseError) as err:
        parse_binomial("x1^4 + x2", 4)
    assert err.value.position == 5

    with pytest.raises(ParseError) as err:
        parse_binomial("x5 - x1", 4)
    assert err.value.position == 1

    with pytest.raises(ParseError):
        parse_binomial("x1 - y1", 2)
    with pytest.raises(ParseError):
        parse_binomial("x1 - x1", 2)
    with pytest.raises(ParseError):
        parse_binomial("x1 - x2 x3", 3)


def test_parse_ideal_text():
    n, gens = parse_ideal_text("# demo\nvars 4\nx1 - x2\n\nx3 - x4  # tail comment\n")
    assert n == 4
    assert gens == [Binomial((1, 0, 0, 0), (0, 1, 0, 0)), Binomial((0, 0, 1, 0), (0, 0, 0, 1))]

    n, _ = parse_ideal_text("x1 - x3\n")
    assert n == 3

    with pytest.raises(ParseError) as err:
        parse_ideal_text("x1 - x2\nx1 + x2\n")
    assert err.value.line == 2

    with pytest.raises(ParseError):
        parse_ideal_text("# nothing here\n")


def test_term_orders():
    grevlex = TermOrder.grevlex(3)
    assert grevlex.compare((1, 0, 0), (0, 1, 0)) == 1
    assert grevlex.compare((0, 2, 0), (1, 0, 1)) == 1
    assert grevlex.compare((1, 1, 0), (1, 1, 0)) == 0

    lex = TermOrder.lex(3)
    assert lex.compare((1, 0, 0), (0, 5, 5)) == 1

    weighted = TermOrder.grevlex(2, weight=(3, 2))
    assert weighted.compare((0, 2), (1, 0)) == 1

    f = Binomial((0, 1, 0), (1, 0, 0))
    assert grevlex.orient(f).lhs == (1, 0, 0)

    cheap = TermOrder.cheapest_last(3, 0)
    assert cheap.priority == (1, 2, 0)
    with pytest.raises(ValueError):
        TermOrder.grevlex(3, priority=(0, 0, 1))
