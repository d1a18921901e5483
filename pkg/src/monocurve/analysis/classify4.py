"""Minimal systems S u I u R and the uniqueness verdict for curves in 4-space.

S is the minimal system of the critical ideal, I the indispensable binomials of
shape x_i^. x_j^. - x_k^. x_l^. with small exponents on one side, and R the
remaining full-support generators. The toric ideal is uniquely generated exactly
when C_A is and R is empty; the report computes that verdict and the exact
two-singleton criterion independently and requires them to agree.
"""

from dataclasses import dataclass, field
from itertools import permutations
from math import gcd, lcm
from typing import Optional, Sequence

from networkx.utils import UnionFind

from monocurve.algebra.exponents import Binomial, Exponents, sort_key, support
from monocurve.algebra.grobner import BinomialIdeal
from monocurve.algebra.semigroup import CriticalExponents, NumericalSemigroup, representable
from monocurve.analysis.critical import (
    CaseLabel,
    CriticalCase,
    Permutation,
    classify_critical_case,
    critical_set,
    critical_unique,
)
from monocurve.analysis.fibergraph import (
    BettiTable,
    FiberGraph,
    curve_ideal,
    fiber_graph,
    indispensable_monomial,
    minimal_generating_set,
    unique_minimal_system,
)
from monocurve.analysis.graver import is_semi_primitive, semi_primitive_indispensables
from monocurve.utils.config import get_settings
from monocurve.utils.errors import ComputationRejected, InvariantViolation
from monocurve.utils.logger import get_logger

logger = get_logger()

R_FREE_CASES = frozenset(
    {CaseLabel.CASE_1, CaseLabel.CASE_2A, CaseLabel.CASE_2D, CaseLabel.CASE_3, CaseLabel.CASE_4A}
)
CI_CASES = frozenset(
    {CaseLabel.CASE_2B, CaseLabel.CASE_2C, CaseLabel.CASE_2D, CaseLabel.CASE_3, CaseLabel.CASE_4B}
)

# Tail supports, by normal-form position, of the cyclic critical pattern
# x1 -> {x3, x4}, x2 -> {x1, x4}, x3 -> {x1, x2}, x4 -> {x2, x3}.
CYCLIC_TAILS = ((2, 3), (0, 3), (0, 1), (1, 2))


@dataclass
class Decomposition:
    S: list[Binomial]
    I: list[Binomial]
    R: list[Binomial]
    r_reading_sensitive: bool = False
    notes: list[str] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.S) + len(self.I) + len(self.R)


@dataclass
class ClassificationReport:
    """Everything classify() learns about one quadruple, in the caller's variable order."""

    A: tuple[int, ...]
    permutation: Permutation
    c: CriticalExponents
    case: CriticalCase
    S: list[Binomial]
    I: list[Binomial]
    R: list[Binomial]
    mu_IA: int
    mu_CA: int
    unique: bool
    critical_unique: bool
    exact_unique: bool
    gorenstein: bool
    complete_intersection: bool
    betti: list[tuple[int, int]]
    tail_alternatives: dict[int, tuple[Exponents, ...]] = field(default_factory=dict)
    bresinsky_form: Optional[Permutation] = None
    r_reading_sensitive: bool = False
    notes: list[str] = field(default_factory=list)

    @property
    def label(self) -> str:
        return self.case.label.value

    @property
    def minimally_generated(self) -> bool:
        """No a_i lies in the semigroup generated by the others."""
        return min(self.c) > 1


def _quadruple(A: Sequence[int]) -> tuple[int, ...]:
    A = tuple(int(a) for a in A)
    if len(A) != 4:
        raise ComputationRejected(f"the classification covers four generators, got {len(A)}")
    if any(a <= 0 for a in A):
        raise ComputationRejected(f"curve generators must be positive: {A}")
    if gcd(*A) != 1:
        raise ComputationRejected(f"gcd{A} != 1")
    return A


def _oriented(u: Exponents, v: Exponents, first: int) -> Binomial:
    """x^u - x^v written with the monomial containing x_first on the left."""
    return Binomial(u, v) if u[first] else Binomial(v, u)


def _is_two_by_two(u: Exponents, v: Exponents) -> bool:
    su, sv = support(u), support(v)
    return len(su) == 2 and len(sv) == 2 and not su & sv


class _Ranker:
    """Orders candidate full-support edges: I-shape, then R-normal, then the rest."""

    def __init__(self, I: BinomialIdeal, case: CriticalCase):
        self.I = I
        self.case = case
        self.c = case.critical.c
        self.sigma = case.permutation

    def split_ok(self, f: Binomial) -> bool:
        return support(f.lhs) == {self.sigma[0], self.sigma[1]}

    def r_normal(self, f: Binomial) -> bool:
        s0, s2 = self.sigma[0], self.sigma[2]
        if not self.split_ok(f):
            return False
        if 0 < f.lhs[s0] <= self.c[s0]:
            return True
        return self.case.label is CaseLabel.CASE_2C and 0 < f.rhs[s2] <= self.c[s2]

    def rank(self, f: Binomial) -> int:
        if is_semi_primitive(self.I, f, self.c) is not None:
            return 0
        if self.r_normal(f):
            return 1
        return 2 if self.split_ok(f) else 3


def _join(graph: FiberGraph, forest: UnionFind, candidates: list[Binomial]) -> list[Binomial]:
    chosen = []
    for f in candidates:
        p, q = graph.component_of(f.lhs), graph.component_of(f.rhs)
        if forest[p] != forest[q]:
            forest.union(p, q)
            chosen.append(f)
    return chosen


def _connected(graph: FiberGraph, forest: UnionFind) -> bool:
    return len({forest[k] for k in range(graph.t)}) <= 1


def _complete_degree(
    graph: FiberGraph, S_here: list[Binomial], ranker: _Ranker, notes: list[str]
) -> list[Binomial]:
    """Binomials joining the components of G_b left apart by S, smallest rank first."""
    forest = UnionFind(range(graph.t))
    for f in S_here:
        p, q = graph.component_of(f.lhs), graph.component_of(f.rhs)
        if forest[p] == forest[q]:
            raise InvariantViolation(f"{f} of S does not join two components of G_{graph.degree}")
        forest.union(p, q)
    if _connected(graph, forest):
        return []
    first = ranker.sigma[0]
    pairs = [
        (u, v)
        for k, comp in enumerate(graph.components)
        for l, other in enumerate(graph.components)
        if k < l
        for u in comp
        for v in other
    ]
    full = [_oriented(u, v, first) for u, v in pairs if _is_two_by_two(u, v)]
    full.sort(key=lambda f: (ranker.rank(f), sort_key(f)))
    chosen = _join(graph, forest, full)
    if not _connected(graph, forest):
        rest = sorted((Binomial(u, v).canonical()[0] for u, v in pairs), key=sort_key)
        extra = _join(graph, forest, rest)
        notes.append(f"degree {graph.degree[0]}: no two-by-two binomial joins {len(extra)} component(s)")
        chosen += extra
    return chosen


def _alpha_shift(f: Binomial, c: CriticalExponents, sigma: Permutation) -> Binomial:
    """x1^{u1} x2^{u2} -> x1^{u1 - alpha c1} x2^{u2 + alpha c2} with 0 < u1 - alpha c1 <= c1."""
    s0, s1 = sigma[0], sigma[1]
    u0 = f.lhs[s0]
    if u0 <= c[s0]:
        return f
    alpha = (u0 - 1) // c[s0]
    lhs = list(f.lhs)
    lhs[s0] -= alpha * c[s0]
    lhs[s1] += alpha * c[s1]
    return Binomial(tuple(lhs), f.rhs)


def _has_full_support_divisor(
    M: tuple[int, int], side: tuple[int, int], other: tuple[int, int], A: Sequence[int]
) -> bool:
    """Some x^v properly dividing x_p^{M0} x_q^{M1}, both exponents positive, is the left
    monomial of a full-support binomial of I_A."""
    (p, q), (k, l) = side, other
    if M[0] <= 0 or M[1] <= 0:
        return False
    top = M[0] * A[p] + M[1] * A[q]
    reach = representable((A[k], A[l]), top)
    for v0 in range(1, M[0] + 1):
        for v1 in range(1, M[1] + 1):
            if (v0, v1) == M:
                continue
            rest = v0 * A[p] + v1 * A[q] - A[k] - A[l]
            if rest >= 0 and reach[rest]:
                return True
    return False


def _divisor_blocked(
    f: Binomial, A: Sequence[int], c: CriticalExponents, sigma: Permutation, literal: bool
) -> bool:
    """The case-2c exclusion condition for f = x1^. x2^. - x3^. x4^.

    ``literal`` shifts the x3 x4 side by its own exponents instead of by c3, c4.
    """
    s0, s1, s2, s3 = sigma
    u = (f.lhs[s0], f.lhs[s1])
    w = (f.rhs[s2], f.rhs[s3])
    for alpha in range(u[1] // c[s1] + 1):
        M = (u[0] + alpha * c[s0], u[1] - alpha * c[s1])
        if _has_full_support_divisor(M, (s0, s1), (s2, s3), A):
            return True
    if literal:
        shifts = [(w[0] * (1 + alpha), w[1] * (1 - alpha)) for alpha in (0, 1)]
    else:
        shifts = [(w[0] + alpha * c[s2], w[1] - alpha * c[s3]) for alpha in range(w[1] // c[s3] + 1)]
    return any(_has_full_support_divisor(M, (s2, s3), (s0, s1), A) for M in shifts)


def decompose_minimal_system(
    A: Sequence[int], case: Optional[CriticalCase] = None, table: Optional[BettiTable] = None
) -> Decomposition:
    """Extend the critical system S to a minimal system S u I u R of I_A."""
    A = _quadruple(A)
    case = case or classify_critical_case(A)
    I = curve_ideal(A)
    table = table or minimal_generating_set(I)
    ranker = _Ranker(I, case)
    c, sigma = case.critical.c, case.permutation
    notes: list[str] = []

    degrees = sorted(set(table.degrees()) | {I.degree(f.lhs) for f in case.S})
    extension: list[Binomial] = []
    for b in degrees:
        graph = fiber_graph(I, b)
        S_here = [f for f in case.S if I.degree(f.lhs) == b]
        extension += _complete_degree(graph, S_here, ranker, notes)

    inds, rest = [], []
    for f in extension:
        g = is_semi_primitive(I, f, c)
        if g is not None:
            inds.append(g)
        else:
            rest.append(f)

    R, sensitive = [], False
    for f in rest:
        if not ranker.split_ok(f):
            notes.append(f"{f} is not of the form x1^. x2^. - x3^. x4^. in the normal order")
            R.append(f)
            continue
        g = _alpha_shift(f, c, sigma)
        if case.label in (CaseLabel.CASE_2B, CaseLabel.CASE_4B) and not indispensable_monomial(I, g.rhs):
            notes.append(f"{g}: right monomial is not indispensable")
        if case.label is CaseLabel.CASE_2C:
            by_c = _divisor_blocked(g, A, c, sigma, literal=False)
            by_u = _divisor_blocked(g, A, c, sigma, literal=True)
            if by_c:
                notes.append(f"{g}: a full-support binomial divides a shifted monomial")
            sensitive = sensitive or by_c != by_u
        R.append(g)

    logger.debug(f"decomposition of {A}: |S|={len(case.S)} |I|={len(inds)} |R|={len(R)}")
    return Decomposition(list(case.S), inds, R, sensitive, notes)


def verify_bresinsky_form(A: Sequence[int]) -> Optional[Permutation]:
    """Variable order in which the critical binomials follow the cyclic pattern.

    The pattern asks for x_1^{c_1} - x_3^. x_4^., x_2^{c_2} - x_1^. x_4^.,
    x_3^{c_3} - x_1^. x_2^. and x_4^{c_4} - x_2^. x_3^., every tail exponent
    positive and strictly below the critical exponent of its variable.
    Returns the first matching permutation (lexicographically), or None when
    no order matches.
    """
    A = _quadruple(A)
    cs = critical_set(A)
    for sigma in permutations(range(4)):
        tails = [{sigma[q] for q in CYCLIC_TAILS[p]} for p in range(4)]
        if all(
            any(_cyclic_tail(f, tails[p], cs.c) for f in cs.per_variable[sigma[p]]) for p in range(4)
        ):
            return sigma
    return None


def _cyclic_tail(f: Binomial, expected: set[int], c: CriticalExponents) -> bool:
    return support(f.rhs) == expected and all(f.rhs[j] < c[j] for j in expected)


def glue_degree_check(report: ClassificationReport) -> Optional[bool]:
    """For complete intersections in case 2c, the glue binomial has degree
    lcm(gcd(a_1, a_2), gcd(a_3, a_4)) in the normal order. None when not applicable."""
    if not report.complete_intersection or report.case.label is not CaseLabel.CASE_2C:
        return None
    glue = report.I + report.R
    s0, s1, s2, s3 = report.permutation
    A = report.A
    expected = lcm(gcd(A[s0], A[s1]), gcd(A[s2], A[s3]))
    if len(glue) != 1 or glue[0].degree(A) != expected:
        raise InvariantViolation(f"complete intersection {A} in case 2c has no glue of degree {expected}")
    return True


def check_report(report: ClassificationReport) -> None:
    """Raise InvariantViolation when the report breaks a known fact about curves in 4-space."""
    A = report.A
    size = len(report.S) + len(report.I) + len(report.R)
    if size != report.mu_IA:
        raise InvariantViolation(f"|S|+|I|+|R| = {size} but mu(I_A) = {report.mu_IA} for {A}")
    if report.mu_CA > 4:
        raise InvariantViolation(f"mu(C_A) = {report.mu_CA} exceeds four for {A}")
    if report.unique != report.exact_unique:
        raise InvariantViolation(
            f"uniqueness criteria disagree for {A}: critical side {report.unique}, "
            f"fiber graphs {report.exact_unique}"
        )
    if report.exact_unique and not report.critical_unique:
        raise InvariantViolation(f"I_A of {A} is uniquely generated but C_A is not")
    if report.case.label in R_FREE_CASES and report.R:
        raise InvariantViolation(f"case {report.label} of {A} has R = {[str(f) for f in report.R]}")
    if not report.minimally_generated:
        return
    if report.complete_intersection:
        if report.case.label not in CI_CASES:
            raise InvariantViolation(f"complete intersection {A} falls in case {report.label}")
        if report.case.label is not CaseLabel.CASE_2C and (report.I or report.R):
            raise InvariantViolation(f"complete intersection {A} needs generators outside C_A")
        glue_degree_check(report)
    if report.gorenstein and not report.complete_intersection:
        if report.mu_IA != 5 or not report.unique:
            raise InvariantViolation(
                f"symmetric {A} is not a complete intersection but mu={report.mu_IA}, unique={report.unique}"
            )
    if report.bresinsky_form is not None and not report.unique:
        raise InvariantViolation(f"{A} has cyclic critical binomials but is not uniquely generated")


def classify(A: Sequence[int], check_invariants: Optional[bool] = None) -> ClassificationReport:
    """Classify a quadruple: critical case, S u I u R, both uniqueness criteria and flags."""
    A = _quadruple(A)
    if check_invariants is None:
        check_invariants = get_settings().compute.check_invariants
    logger.debug(f"classifying {A}")
    I = curve_ideal(A)
    table = minimal_generating_set(I)
    case = classify_critical_case(A)
    parts = decompose_minimal_system(A, case, table)
    crit_unique = critical_unique(A, case)
    exact = unique_minimal_system(I, table)
    if check_invariants:
        expected_I = set(semi_primitive_indispensables(A, table))
        if set(parts.I) != expected_I:
            raise InvariantViolation(f"I of {A} differs from its semi-primitive indispensables")
    report = ClassificationReport(
        A=A,
        permutation=case.permutation,
        c=case.critical.c,
        case=case,
        S=parts.S,
        I=parts.I,
        R=parts.R,
        mu_IA=table.mu,
        mu_CA=case.mu_CA,
        unique=crit_unique and not parts.R,
        critical_unique=crit_unique,
        exact_unique=exact,
        gorenstein=NumericalSemigroup(A).is_symmetric(),
        complete_intersection=table.mu == 3,
        betti=[(b[0], count) for b, count in table.counts()],
        tail_alternatives=dict(case.tail_alternatives),
        bresinsky_form=verify_bresinsky_form(A),
        r_reading_sensitive=parts.r_reading_sensitive,
        notes=parts.notes,
    )
    for note in report.notes:
        logger.warning(f"{A}: {note}")
    if check_invariants:
        check_report(report)
    return report
