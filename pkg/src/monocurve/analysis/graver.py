"""Indispensable primitive binomials of shape x_i^. x_j^. - x_k^. x_l^.."""

from dataclasses import dataclass
from typing import Optional, Sequence

from monocurve.algebra.exponents import Binomial, support
from monocurve.algebra.grobner import BinomialIdeal, graver_basis
from monocurve.algebra.intlat import Grading
from monocurve.algebra.semigroup import CriticalExponents, critical_exponents
from monocurve.analysis.fibergraph import (
    BettiTable,
    Verdict,
    curve_ideal,
    indispensable_binomial,
    indispensable_monomial,
    minimal_generating_set,
    unique_generation_verdict,
)
from monocurve.utils.errors import ComputationRejected, InvariantViolation
from monocurve.utils.logger import get_logger

logger = get_logger()

Quadruple = tuple[int, int, int, int]


@dataclass(frozen=True)
class PrimitivePattern:
    """f = x_i^{u_i} x_j^{u_j} - x_k^{u_k} x_l^{u_l} with i, j, k, l pairwise different.

    ``below`` holds u_i < c_i, u_j < c_j, u_k < c_k and u_l < c_l in that order.
    """

    binomial: Binomial
    indices: Quadruple
    below: tuple[bool, bool, bool, bool]

    @property
    def exponents(self) -> tuple[int, int, int, int]:
        i, j, k, l = self.indices
        f = self.binomial
        return (f.lhs[i], f.lhs[j], f.rhs[k], f.rhs[l])

    @property
    def strict(self) -> bool:
        return all(self.below)


def match_pattern(f: Binomial, c: Sequence[int]) -> Optional[PrimitivePattern]:
    """Read f as two-by-two with every exponent positive; None for other shapes."""
    left, right = sorted(support(f.lhs)), sorted(support(f.rhs))
    if len(left) != 2 or len(right) != 2 or set(left) & set(right):
        return None
    i, j = left
    k, l = right
    below = (f.lhs[i] < c[i], f.lhs[j] < c[j], f.rhs[k] < c[k], f.rhs[l] < c[l])
    return PrimitivePattern(f, (i, j, k, l), below)


def _orientations(f: Binomial) -> tuple[Binomial, Binomial]:
    return (f, f.reversed())


def _four(A: Sequence[int]) -> tuple[int, ...]:
    A = tuple(int(a) for a in A)
    if len(A) != 4:
        raise ComputationRejected(f"this computation is defined for four generators, got {len(A)}")
    return A


def _certify(I: BinomialIdeal, f: Binomial) -> None:
    if indispensable_binomial(I, f) is not Verdict.YES:
        raise InvariantViolation(f"{f} has the indispensable shape but G_b(I_A) is not two singletons")


def primitive_indispensables(A: Sequence[int], graver: Optional[Sequence[Binomial]] = None) -> list[Binomial]:
    """Graver elements with all four exponents below the critical exponents.

    Every element returned is checked against the exact two-singleton test.
    """
    A = _four(A)
    c = critical_exponents(A)
    graver = graver_basis(Grading.curve(A)) if graver is None else graver
    I = curve_ideal(A)
    out = []
    for f in graver:
        pattern = match_pattern(f, c)
        if pattern is not None and pattern.strict:
            _certify(I, f)
            out.append(f)
    return out


def is_semi_primitive(
    I: BinomialIdeal, f: Binomial, c: CriticalExponents | Sequence[int]
) -> Optional[Binomial]:
    """f oriented as x_i^{u_i} x_j^{u_j} - x_k^{u_k} x_l^{u_l} with 0 < u_i < c_i, 0 < u_j < c_j
    and x_k^{u_k} x_l^{u_l} indispensable, or None."""
    for g in _orientations(f):
        pattern = match_pattern(g, c)
        if pattern is None or not (pattern.below[0] and pattern.below[1]):
            continue
        if indispensable_monomial(I, g.rhs):
            return g
    return None


def semi_primitive_indispensables(A: Sequence[int], table: Optional[BettiTable] = None) -> list[Binomial]:
    """The binomials of I_A of semi-primitive shape, read off a minimal generating set.

    Indispensable binomials belong to every minimal system, so scanning one
    system finds all of them.
    """
    A = _four(A)
    c = critical_exponents(A)
    I = curve_ideal(A)
    table = table or minimal_generating_set(I)
    out = []
    for f in table.generators():
        g = is_semi_primitive(I, f, c)
        if g is not None:
            _certify(I, g)
            out.append(g)
    return out


def _restrict(A: Sequence[int], indices: Sequence[int]) -> tuple[int, ...]:
    if len(set(indices)) != 4 or any(not 0 <= k < len(A) for k in indices):
        raise ComputationRejected(f"need four different variable indices, got {tuple(indices)}")
    return tuple(A[k] for k in indices)


def _project(f: Binomial, indices: Sequence[int]) -> Binomial:
    return Binomial(tuple(f.lhs[k] for k in indices), tuple(f.rhs[k] for k in indices))


def restricted_unique_generation(A: Sequence[int], indices: Sequence[int] = (0, 1, 2, 3)) -> Verdict:
    """The ideal of k[x_i, x_j, x_k, x_l] generated by the strict-pattern Graver binomials.

    Critical exponents are those of the full A; an empty ideal is trivially
    uniquely generated.
    """
    A = tuple(int(a) for a in A)
    sub = _restrict(A, indices)
    c = critical_exponents(A)
    c_sub = [c[k] for k in indices]
    gens = []
    for f in graver_basis(Grading.curve(sub)):
        pattern = match_pattern(f, c_sub)
        if pattern is not None and pattern.strict:
            gens.append(f)
    if not gens:
        return Verdict.YES
    J = BinomialIdeal(4, tuple(gens), Grading.curve(sub))
    verdict = unique_generation_verdict(J)
    if verdict is not Verdict.YES:
        raise InvariantViolation(f"strict Graver binomials of {sub} are not uniquely generated")
    logger.debug(f"restricted ideal on {tuple(indices)}: {len(gens)} indispensable generators")
    return verdict


def min_graver_degree_indispensables(A: Sequence[int], graver: Optional[Sequence[Binomial]] = None) -> list[Binomial]:
    """Graver elements of least A-degree with 0 < u_i < c_i on one side and 0 < u_k < c_k on the other.

    Each is certified indispensable in the toric ideal of the four variables it
    involves.
    """
    A = tuple(int(a) for a in A)
    if len(A) < 4:
        raise ComputationRejected("the two-by-two shape needs at least four generators")
    c = critical_exponents(A)
    graver = graver_basis(Grading.curve(A)) if graver is None else graver
    if not graver:
        return []
    least = min(f.degree(A) for f in graver)
    out = []
    for f in graver:
        if f.degree(A) != least:
            continue
        left, right = support(f.lhs), support(f.rhs)
        if len(left) > 2 or len(right) > 2:
            continue
        if not any(0 < f.lhs[i] < c[i] for i in left) or not any(0 < f.rhs[k] < c[k] for k in right):
            continue
        indices = sorted(left | right)
        if len(indices) < 4:
            continue
        sub = _restrict(A, indices)
        g = _project(f, indices)
        if indispensable_binomial(curve_ideal(sub), g) is not Verdict.YES:
            raise InvariantViolation(f"{f} has least Graver degree but is not indispensable")
        out.append(f)
    return out

