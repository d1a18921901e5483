"""Exact algebra on exponent vectors, lattices, numerical semigroups and binomial ideals."""

from monocurve.algebra.exponents import Binomial, TermOrder, format_binomial, parse_binomial
from monocurve.algebra.grobner import BinomialIdeal, graver_basis, saturate, toric_ideal
from monocurve.algebra.intlat import Grading, finest_grading
from monocurve.algebra.semigroup import NumericalSemigroup, critical_exponents

__all__ = [
    "Binomial",
    "TermOrder",
    "format_binomial",
    "parse_binomial",
    "BinomialIdeal",
    "graver_basis",
    "saturate",
    "toric_ideal",
    "Grading",
    "finest_grading",
    "NumericalSemigroup",
    "critical_exponents",
]
