"""Critical binomials, the critical ideal C_A and circuits of monomial curves.

A binomial x_i^{c_i} - x^v of I_A with v_i = 0 is critical with respect to x_i.
For four generators the critical ideal has one of eight minimal-system shapes,
told apart by which critical degrees c_i * a_i coincide and by mu(C_A).
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache, reduce
from itertools import combinations, permutations, product
from math import gcd, lcm
from typing import Optional, Sequence

from monocurve.algebra.exponents import Binomial, Exponents, TermOrder, support, unit
from monocurve.algebra.grobner import BinomialIdeal, buchberger, reduce as reduce_binomial
from monocurve.algebra.intlat import Grading
from monocurve.algebra.semigroup import CriticalExponents, critical_exponents, fiber, representable
from monocurve.analysis.fibergraph import (
    Verdict,
    curve_ideal,
    fiber_graph,
    indispensable_binomial,
    minimal_generating_set,
)
from monocurve.utils.config import get_settings
from monocurve.utils.errors import ComputationRejected, InvariantViolation, NotInIdealError
from monocurve.utils.logger import get_logger

logger = get_logger()

Permutation = tuple[int, ...]


class CaseLabel(str, Enum):
    CASE_1 = "1"
    CASE_2A = "2a"
    CASE_2B = "2b"
    CASE_2C = "2c"
    CASE_2D = "2d"
    CASE_3 = "3"
    CASE_4A = "4a"
    CASE_4B = "4b"


UNIQUE_CAPABLE = frozenset({CaseLabel.CASE_1, CaseLabel.CASE_2C, CaseLabel.CASE_4B})


class Applicability(str, Enum):
    APPLIES = "applies-and-verified"
    NOT_APPLICABLE = "not-applicable"


def _curve(A: Sequence[int]) -> tuple[int, ...]:
    A = tuple(int(a) for a in A)
    if len(A) < 2:
        raise ComputationRejected("at least two generators are needed")
    if any(a <= 0 for a in A):
        raise ComputationRejected(f"curve generators must be positive: {A}")
    return A


def _curve4(A: Sequence[int]) -> tuple[int, ...]:
    A = _curve(A)
    if len(A) != 4:
        raise ComputationRejected(f"this computation is defined for four generators, got {len(A)}")
    if reduce(gcd, A) != 1:
        raise ComputationRejected(f"gcd{A} != 1")
    return A


def _variable_of(f: Binomial) -> int:
    """The variable of the pure power on the left of f."""
    return min(support(f.lhs))


@dataclass(frozen=True)
class CriticalSet:
    """All critical binomials of A, grouped by variable."""

    c: CriticalExponents
    per_variable: tuple[tuple[Binomial, ...], ...]

    @property
    def degrees(self) -> tuple[int, ...]:
        return self.c.degrees

    @property
    def pattern(self) -> tuple[tuple[int, ...], ...]:
        """Classes of variables with equal critical degree, sorted."""
        groups: dict[int, list[int]] = {}
        for i, d in enumerate(self.degrees):
            groups.setdefault(d, []).append(i)
        return tuple(sorted(tuple(g) for g in groups.values()))

    def tails(self, i: int) -> list[Exponents]:
        """Tails x^v of x_i with at least two variables, lexicographically."""
        return [f.rhs for f in self.per_variable[i] if len(support(f.rhs)) >= 2]

    def has_tails(self, i: int) -> bool:
        return bool(self.tails(i))

    def all(self) -> list[Binomial]:
        return [f for group in self.per_variable for f in group]


def critical_binomials(A: Sequence[int], i: int) -> list[Binomial]:
    """x_i^{c_i} - x^v for every v of degree c_i * a_i with v_i == 0."""
    A = _curve(A)
    c = critical_exponents(A)[i]
    power = unit(i, len(A), c)
    limit = get_settings().compute.max_fiber_size
    tails = [v for v in fiber(A, c * A[i], limit) if v[i] == 0]
    return [Binomial(power, v) for v in tails]


@lru_cache(maxsize=64)
def _critical_set(A: tuple[int, ...]) -> CriticalSet:
    c = critical_exponents(A)
    groups = tuple(tuple(critical_binomials(A, i)) for i in range(len(A)))
    return CriticalSet(c, groups)


def critical_set(A: Sequence[int]) -> CriticalSet:
    return _critical_set(_curve(A))


@lru_cache(maxsize=64)
def _critical_ideal(A: tuple[int, ...]) -> BinomialIdeal:
    gens = _critical_set(A).all()
    return BinomialIdeal(len(A), tuple(gens), Grading.curve(A))


def critical_ideal(A: Sequence[int]) -> BinomialIdeal:
    """C_A: the ideal generated by every critical binomial."""
    return _critical_ideal(_curve(A))


@dataclass(frozen=True)
class CriticalCase:
    """A minimal system S of C_A in one of the eight normal forms.

    ``permutation[p]`` is the variable sitting at position p of the normal form.
    """

    label: CaseLabel
    S: tuple[Binomial, ...]
    mu_CA: int
    permutation: Permutation
    critical: CriticalSet
    tail_alternatives: dict[int, tuple[Exponents, ...]] = field(default_factory=dict)

    @property
    def tails_in_S(self) -> list[tuple[int, Exponents]]:
        """(variable, tail) for the members of S whose tail has two or more variables."""
        return [(_variable_of(f), f.rhs) for f in self.S if len(support(f.rhs)) >= 2]


def mu_critical_ideal(A: Sequence[int]) -> int:
    """mu(C_A) from the fiber graphs of C_A in its generator degrees."""
    return minimal_generating_set(critical_ideal(A)).mu


def _equal(D: Sequence[int], *positions: int) -> bool:
    return len({D[p] for p in positions}) == 1


def _distinct(D: Sequence[int], *positions: int) -> bool:
    return len({D[p] for p in positions}) == len(positions)


def _realizes(label: CaseLabel, sigma: Permutation, cs: CriticalSet) -> bool:
    """Whether reading the variables in the order sigma puts C_A in the normal form of label."""
    D = [cs.degrees[v] for v in sigma]

    def pair_tails(p: int) -> bool:
        return cs.has_tails(sigma[p])

    if label is CaseLabel.CASE_1:
        return _distinct(D, 0, 1, 2, 3)
    if label is CaseLabel.CASE_2D:
        return _equal(D, 0, 1, 2, 3)
    if label is CaseLabel.CASE_3:
        return _equal(D, 0, 1, 2) and D[3] != D[0]
    if label in (CaseLabel.CASE_2A, CaseLabel.CASE_2B, CaseLabel.CASE_2C):
        if not (_equal(D, 0, 1) and _equal(D, 2, 3) and D[1] != D[2]):
            return False
        if label is CaseLabel.CASE_2A:
            return pair_tails(0) and pair_tails(2)
        if label is CaseLabel.CASE_2B:
            return not pair_tails(0) and pair_tails(2)
        return not pair_tails(0) and not pair_tails(2)
    # 4a / 4b
    if not (_equal(D, 0, 1) and _distinct(D, 1, 2, 3)):
        return False
    return pair_tails(0) if label is CaseLabel.CASE_4A else not pair_tails(0)


def _label_for(pattern_sizes: list[int], mu: int) -> CaseLabel:
    if pattern_sizes == [1, 1, 1, 1]:
        return CaseLabel.CASE_1
    if pattern_sizes == [4]:
        return CaseLabel.CASE_2D
    if pattern_sizes == [1, 3]:
        return CaseLabel.CASE_3
    if pattern_sizes == [2, 2]:
        labels = {4: CaseLabel.CASE_2A, 3: CaseLabel.CASE_2B, 2: CaseLabel.CASE_2C}
    else:
        labels = {4: CaseLabel.CASE_4A, 3: CaseLabel.CASE_4B}
    if mu not in labels:
        raise InvariantViolation(f"mu(C_A) = {mu} fits no case for the pattern {pattern_sizes}")
    return labels[mu]


def _system(label: CaseLabel, sigma: Permutation, cs: CriticalSet) -> list[Binomial]:
    n = len(sigma)
    c = cs.c

    def power(p: int) -> Exponents:
        return unit(sigma[p], n, c[sigma[p]])

    def link(p: int, q: int) -> Binomial:
        return Binomial(power(p), power(q))

    def tail(p: int) -> Binomial:
        return Binomial(power(p), cs.tails(sigma[p])[0])

    if label is CaseLabel.CASE_1:
        return [tail(p) for p in range(4)]
    if label is CaseLabel.CASE_2A:
        return [link(0, 1), tail(1), link(2, 3), tail(3)]
    if label is CaseLabel.CASE_2B:
        return [link(0, 1), link(2, 3), tail(3)]
    if label is CaseLabel.CASE_2C:
        return [link(0, 1), link(2, 3)]
    if label is CaseLabel.CASE_2D:
        return [link(0, 1), link(1, 2), link(2, 3)]
    if label is CaseLabel.CASE_3:
        return [link(0, 1), link(1, 2), tail(3)]
    if label is CaseLabel.CASE_4A:
        return [link(0, 1), tail(1), tail(2), tail(3)]
    return [link(0, 1), tail(2), tail(3)]


def classify_critical_case(A: Sequence[int]) -> CriticalCase:
    """Find the normal form of C_A and its minimal system S.

    The label follows from the equality pattern of the critical degrees and
    mu(C_A); the permutation is the lexicographically least one realizing it.
    """
    A = _curve4(A)
    cs = critical_set(A)
    mu = mu_critical_ideal(A)
    label = _label_for(sorted(len(g) for g in cs.pattern), mu)
    sigma = next((s for s in permutations(range(4)) if _realizes(label, s, cs)), None)
    if sigma is None:
        raise InvariantViolation(f"no variable order puts C_A of {A} in case {label.value}")
    S = _system(label, sigma, cs)
    if len(S) != mu:
        raise InvariantViolation(f"case {label.value} lists {len(S)} binomials but mu(C_A) = {mu}")
    alternatives = {
        _variable_of(f): tuple(cs.tails(_variable_of(f))) for f in S if len(support(f.rhs)) >= 2
    }
    logger.debug(f"critical case of {A}: {label.value}, sigma={sigma}, mu(C_A)={mu}")
    return CriticalCase(label, tuple(S), mu, sigma, cs, alternatives)


def critical_unique(A: Sequence[int], case: Optional[CriticalCase] = None) -> bool:
    """C_A has a unique minimal system.

    Only cases 1, 2c and 4b qualify; the tails of S must then be indispensable
    monomials of I_A, each the only admissible tail of its variable.
    """
    case = case or classify_critical_case(A)
    if case.label not in UNIQUE_CAPABLE:
        return False
    I = curve_ideal(A)
    for variable, tail in case.tails_in_S:
        if len(case.tail_alternatives.get(variable, ())) != 1:
            return False
        graph = fiber_graph(I, I.degree(tail))
        if (tail,) not in graph.components:
            return False
    return True


def _is_critical(A: Sequence[int], f: Binomial) -> Optional[Binomial]:
    """f written as x_i^{c_i} - x^v when it is critical, else None."""
    c = critical_exponents(A)
    for g in (f, f.reversed()):
        lhs = support(g.lhs)
        if len(lhs) != 1:
            continue
        i = _variable_of(g)
        if g.lhs[i] == c[i] and g.rhs[i] == 0 and g.is_homogeneous((A,)):
            return g
    return None


def indispensable_critical(A: Sequence[int], f: Binomial) -> bool:
    """Exact toric indispensability of a critical binomial.

    When the two-singleton test also fires on G_b(C_A), both sides must agree.
    """
    A = _curve(A)
    g = _is_critical(A, f)
    if g is None:
        raise NotInIdealError(f"{f} is not a critical binomial of {A}")
    verdict = indispensable_binomial(curve_ideal(A), g) is Verdict.YES
    if fiber_graph(critical_ideal(A), (g.degree(A),)).is_two_singletons(g) and not verdict:
        raise InvariantViolation(f"{g} is two singletons in C_A but dispensable in I_A")
    return verdict


def circuit(A: Sequence[int], i: int, j: int) -> Binomial:
    """x_i^{a_j/g} - x_j^{a_i/g} with g = gcd(a_i, a_j)."""
    A = _curve(A)
    if i == j:
        raise ValueError("a circuit needs two different variables")
    g = gcd(A[i], A[j])
    n = len(A)
    return Binomial(unit(i, n, A[j] // g), unit(j, n, A[i] // g))


def circuits(A: Sequence[int]) -> list[Binomial]:
    """The circuits of I_A, one per pair i < j."""
    A = _curve(A)
    return [circuit(A, i, j) for i, j in combinations(range(len(A)), 2)]


def circuit_indispensable(A: Sequence[int], i: int, j: int) -> bool:
    """b - a_k lies outside NA for every k other than i, j, with b = lcm(a_i, a_j)."""
    A = _curve(A)
    b = lcm(A[i], A[j])
    reach = representable(A, b)
    return all(b < A[k] or not reach[b - A[k]] for k in range(len(A)) if k not in (i, j))


def circuit_order(A: Sequence[int], i: int, j: int) -> TermOrder:
    """A-graded reverse lexicographic order with every x_k, k != i, j, cheaper than x_i and x_j."""
    A = _curve(A)
    rest = [k for k in range(len(A)) if k not in (i, j)]
    return TermOrder.grevlex(len(A), A, (i, j, *rest))


def circuit_in_reduced_gb(A: Sequence[int], i: int, j: int) -> bool:
    """The circuit of (i, j) belongs to the reduced basis of I_A under circuit_order."""
    A = _curve(A)
    basis = curve_ideal(A).groebner_basis(circuit_order(A, i, j))
    return circuit(A, i, j) in basis


def chain_implies_toric(A: Sequence[int]) -> Applicability:
    """When C_A is generated by x_1^{c_1} - x_2^{c_2}, ..., x_{n-1}^{c_{n-1}} - x_n^{c_n}, check C_A = I_A.

    The hypothesis holds exactly when every critical degree is the same D and the
    fiber of D holds only the pure powers x_i^{c_i}.
    """
    A = _curve(A)
    n = len(A)
    cs = critical_set(A)
    degrees = set(cs.degrees)
    if len(degrees) != 1:
        return Applicability.NOT_APPLICABLE
    D = degrees.pop()
    powers = {unit(i, n, cs.c[i]) for i in range(n)}
    if set(fiber(A, D, get_settings().compute.max_fiber_size)) != powers:
        return Applicability.NOT_APPLICABLE
    chain = BinomialIdeal(
        n,
        tuple(Binomial(unit(i, n, cs.c[i]), unit(i + 1, n, cs.c[i + 1])) for i in range(n - 1)),
        Grading.curve(A),
    )
    table = minimal_generating_set(curve_ideal(A))
    if table.mu != n - 1:
        raise InvariantViolation(f"chain hypothesis holds for {A} but mu(I_A) = {table.mu}")
    missing = [f for f in table.generators() if not chain.contains(f)]
    if missing:
        raise InvariantViolation(f"chain of {A} does not generate {missing[0]}")
    return Applicability.APPLIES


def distinct_choice_generates(A: Sequence[int]) -> Applicability:
    """Four critical binomials f_i, one per variable, with f_i != -f_j generate C_A.

    Searches the choices in lexicographic order and verifies the first admissible
    one by reducing every critical binomial to zero.
    """
    A = _curve4(A)
    cs = critical_set(A)
    for choice in product(*cs.per_variable):
        if any(choice[p] == choice[q] for p, q in combinations(range(4), 2)):
            continue
        order = TermOrder.grevlex(4, A)
        basis = buchberger(choice, order)
        stray = [f for f in cs.all() if reduce_binomial(f, basis, order) is not None]
        if stray:
            raise InvariantViolation(f"{[str(f) for f in choice]} leaves {stray[0]} outside")
        return Applicability.APPLIES
    return Applicability.NOT_APPLICABLE
