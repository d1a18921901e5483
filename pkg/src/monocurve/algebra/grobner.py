"""Buchberger's algorithm for pure-difference binomial ideals.

Every polynomial handled here is x^a - x^b, so S-polynomials and remainders stay
pure-difference binomials (or vanish). Basis elements are stored oriented: the
leading term under the active order is ``lhs``.
"""

import threading
from dataclasses import dataclass, field
from typing import Any, Iterable, Optional, Sequence

from monocurve.algebra.exponents import (
    Binomial,
    Exponents,
    TermOrder,
    add,
    binomial_from_vector,
    canonical_sorted,
    divides,
    monomial_lcm,
    sort_key,
    subtract,
)
from monocurve.algebra.intlat import Grading, is_homogeneous, kernel_lattice, lattice_rows
from monocurve.utils.config import get_settings
from monocurve.utils.errors import ComputationRejected
from monocurve.utils.logger import get_logger

logger = get_logger()

Pair = tuple[int, int]


def reduce_monomial(u: Exponents, G: Sequence[Binomial]) -> Exponents:
    """Normal form of x^u: rewrite lead terms of G until none divides."""
    found = True
    while found:
        found = False
        for g in G:
            if divides(g.lhs, u):
                u = add(subtract(u, g.lhs), g.rhs)
                found = True
                break
    return u


def reduce(f: Binomial, G: Sequence[Binomial], order: TermOrder) -> Optional[Binomial]:
    """Normal form of f modulo the oriented basis G; None stands for zero."""
    lhs = reduce_monomial(f.lhs, G)
    rhs = reduce_monomial(f.rhs, G)
    if lhs == rhs:
        return None
    return order.orient(Binomial(lhs, rhs))


def spoly(f: Binomial, g: Binomial) -> Optional[Binomial]:
    """S-binomial of two oriented binomials."""
    m = monomial_lcm(f.lhs, g.lhs)
    a = add(subtract(m, f.lhs), f.rhs)
    b = add(subtract(m, g.lhs), g.rhs)
    if a == b:
        return None
    return Binomial(a, b)


def _coprime(u: Exponents, v: Exponents) -> bool:
    return not any(a and b for a, b in zip(u, v))


def update(
    G: list[Binomial], P: set[Pair], f: Binomial, order: TermOrder
) -> tuple[list[Binomial], set[Pair]]:
    """Add f to the basis, pruning pairs by the Gebauer-Moeller criteria."""
    lmf = f.lhs
    lmG = [g.lhs for g in G]
    k = len(G)

    def lcm_of(i: int, j: int) -> Exponents:
        return monomial_lcm(lmG[i], lmG[j])

    P = {
        (i, j)
        for i, j in P
        if not divides(lmf, lcm_of(i, j))
        or lcm_of(i, j) == monomial_lcm(lmG[i], lmf)
        or lcm_of(i, j) == monomial_lcm(lmG[j], lmf)
    }
    by_lcm: dict[Exponents, list[int]] = {}
    for i in range(k):
        by_lcm.setdefault(monomial_lcm(lmG[i], lmf), []).append(i)
    minimal: list[Exponents] = []
    for L in sorted(by_lcm, key=order.key):
        if not any(divides(M, L) for M in minimal):
            minimal.append(L)
    new_pairs = {
        (min(by_lcm[L]), k)
        for L in minimal
        if not any(_coprime(lmG[i], lmf) for i in by_lcm[L])
    }
    return G + [f], P | new_pairs


def minimalize(G: Sequence[Binomial]) -> list[Binomial]:
    """Drop elements whose lead term is divisible by another lead term."""
    kept: list[Binomial] = []
    for f in G:
        if all(not divides(g.lhs, f.lhs) for g in kept):
            kept = [g for g in kept if not divides(f.lhs, g.lhs)]
            kept.append(f)
    return kept


def interreduce(G: Sequence[Binomial], order: TermOrder) -> list[Binomial]:
    """Reduce every tail against the other elements of a minimal basis."""
    reduced = []
    for i, g in enumerate(G):
        others = [h for j, h in enumerate(G) if j != i]
        tail = reduce_monomial(g.rhs, others)
        reduced.append(order.orient(Binomial(g.lhs, tail)))
    return reduced


def buchberger(
    gens: Iterable[Binomial], order: TermOrder, max_size: Optional[int] = None
) -> list[Binomial]:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pairs are processed by increasing lcm under ``order`` (degree first), so runs
    are reproducible. The result is sorted canonically, each element written with
    its leading term first.
    """
    if max_size is None:
        max_size = get_settings().compute.max_gb_size
    G: list[Binomial] = []
    P: set[Pair] = set()
    for f in canonical_sorted(gens):
        G, P = update(G, P, order.orient(f), order)
    processed = 0
    while P:
        i, j = min(P, key=lambda p: (order.key(monomial_lcm(G[p[0]].lhs, G[p[1]].lhs)), p))
        P.remove((i, j))
        processed += 1
        s = spoly(G[i], G[j])
        if s is None:
            continue
        r = reduce(s, G, order)
        if r is None:
            continue
        G, P = update(G, P, r, order)
        if len(G) > max_size:
            raise ComputationRejected(f"Groebner basis exceeds {max_size} elements")
    basis = interreduce(minimalize(G), order)
    logger.debug(f"buchberger: {processed} pairs, {len(G)} intermediate, {len(basis)} reduced")
    return sorted(basis, key=sort_key)


def is_groebner_basis(G: Sequence[Binomial], order: TermOrder) -> bool:
    """Every S-binomial of the oriented set G reduces to zero."""
    oriented = [order.orient(g) for g in G]
    for i in range(len(oriented)):
        for j in range(i + 1, len(oriented)):
            s = spoly(oriented[i], oriented[j])
            if s is not None and reduce(s, oriented, order) is not None:
                return False
    return True


@dataclass(eq=False)
class BinomialIdeal:
    """An ideal generated by pure-difference binomials.

    ``toric`` marks ideals known to be the full toric ideal of ``grading``;
    membership then reduces to degree equality.
    """

    n: int
    generators: tuple[Binomial, ...]
    grading: Optional[Grading] = None
    toric: bool = False
    gb_cache: dict[TermOrder, tuple[Binomial, ...]] = field(default_factory=dict, repr=False)
    graph_cache: dict[tuple[int, ...], Any] = field(default_factory=dict, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def __post_init__(self) -> None:
        self.generators = tuple(canonical_sorted(self.generators))
        if any(f.n != self.n for f in self.generators):
            raise ValueError(f"generators must live in {self.n} variables")
        if self.grading is not None:
            if self.grading.n != self.n:
                raise ValueError("grading has the wrong number of columns")
            if not is_homogeneous(self.generators, self.grading):
                raise ComputationRejected("generators are not homogeneous for the given grading")

    @classmethod
    def from_generators(
        cls, gens: Iterable[Binomial], n: Optional[int] = None, grading: Optional[Grading] = None
    ) -> "BinomialIdeal":
        gens = list(gens)
        if n is None:
            if not gens:
                raise ValueError("the variable count of an empty ideal must be given")
            n = gens[0].n
        return cls(n, tuple(gens), grading)

    def default_order(self) -> TermOrder:
        """Grevlex weighted by the positive grading when there is one."""
        weight = self.grading.weight if self.grading is not None else None
        return TermOrder.grevlex(self.n, weight)

    def groebner_basis(self, order: Optional[TermOrder] = None) -> tuple[Binomial, ...]:
        order = order or self.default_order()
        cached = self.gb_cache.get(order)
        if cached is not None:
            return cached
        basis = tuple(buchberger(self.generators, order))
        with self._lock:
            return self.gb_cache.setdefault(order, basis)

    def normal_form(self, f: Binomial, order: Optional[TermOrder] = None) -> Optional[Binomial]:
        order = order or self.default_order()
        return reduce(f, self.groebner_basis(order), order)

    def contains(self, f: Binomial) -> bool:
        return membership(self, f)

    def degree(self, u: Sequence[int]) -> tuple[int, ...]:
        if self.grading is None:
            raise ComputationRejected("the ideal carries no grading")
        return self.grading.degree(u)


def membership(J: BinomialIdeal, f: Binomial) -> bool:
    """Whether f lies in J: degree equality for toric ideals, else a zero normal form."""
    if f.n != J.n:
        raise ValueError(f"binomial in {f.n} variables tested against an ideal in {J.n}")
    if J.toric and J.grading is not None:
        return J.grading.homogeneous(f)
    return J.normal_form(f) is None


def _saturation_weight(I: BinomialIdeal) -> tuple[int, ...]:
    if I.grading is not None and I.grading.weight is not None:
        return I.grading.weight
    raise ComputationRejected("saturation needs a positive grading making the ideal homogeneous")


def saturate_by_variable(I: BinomialIdeal, i: int) -> BinomialIdeal:
    """(I : x_i^inf) by the grevlex trick with x_i the cheapest variable."""
    order = TermOrder.cheapest_last(I.n, i, _saturation_weight(I))
    gens = []
    for g in I.groebner_basis(order):
        power = min(g.lhs[i], g.rhs[i])
        if power:
            strip = tuple(power if k == i else 0 for k in range(I.n))
            g = Binomial(subtract(g.lhs, strip), subtract(g.rhs, strip))
        gens.append(g)
    return BinomialIdeal(I.n, tuple(gens), I.grading)


def saturate(I: BinomialIdeal) -> BinomialIdeal:
    """(I : (x_1 ... x_n)^inf), one variable at a time."""
    for i in range(I.n):
        I = saturate_by_variable(I, i)
        logger.debug(f"saturated by x{i + 1}: {len(I.generators)} generators")
    return I


def lattice_basis_ideal(grading: Grading) -> BinomialIdeal:
    """The ideal of the binomials of a kernel basis of the grading."""
    basis = kernel_lattice(grading.as_matrix(), grading.n)
    gens = [binomial_from_vector(row) for row in lattice_rows(basis)]
    return BinomialIdeal(grading.n, tuple(gens), grading)


def toric_ideal(A: Grading) -> BinomialIdeal:
    """Generators of I_A: a kernel basis saturated by every variable."""
    if not A.positive:
        raise ComputationRejected("toric ideals are computed for positive gradings only")
    I = lattice_basis_ideal(A)
    if not I.generators:
        return BinomialIdeal(A.n, (), A, toric=True)
    saturated = saturate(I)
    return BinomialIdeal(A.n, saturated.generators, A, toric=True)


@dataclass(frozen=True)
class LawrenceIdeal:
    """The Lawrence lifting of a one-row grading, in variables x_1..x_n, y_1..y_n."""

    base: Grading

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def grading(self) -> Grading:
        """Rows (A | 0) over (I | I); the certificate is their sum."""
        n = self.n
        rows = [tuple(self.base.matrix[0]) + (0,) * n]
        rows += [tuple(int(k == i) for k in range(n)) * 2 for i in range(n)]
        weight = tuple(sum(col) for col in zip(*rows))
        return Grading(tuple(rows), weight)

    def lift(self, f: Binomial) -> Binomial:
        """x^u - x^v  ->  x^u y^v - x^v y^u."""
        return Binomial(f.lhs + f.rhs, f.rhs + f.lhs)

    def project(self, F: Binomial) -> Binomial:
        """x^u y^v - x^v y^u  ->  x^u - x^v."""
        n = self.n
        return Binomial(F.lhs[:n], F.lhs[n:])

    def toric_ideal(self) -> BinomialIdeal:
        grading = self.grading
        lattice = kernel_lattice(self.base.as_matrix(), self.n)
        gens = [self.lift(binomial_from_vector(row)) for row in lattice_rows(lattice)]
        I = BinomialIdeal(2 * self.n, tuple(gens), grading)
        return BinomialIdeal(2 * self.n, saturate(I).generators, grading, toric=True)


def graver_basis(A: Grading) -> list[Binomial]:
    """Primitive binomials of I_A, read off a reduced basis of the Lawrence ideal."""
    if not A.is_curve:
        raise ComputationRejected("Graver bases are computed for monomial curves")
    lawrence = LawrenceIdeal(A)
    ideal = lawrence.toric_ideal()
    basis = ideal.groebner_basis()
    graver = canonical_sorted(lawrence.project(F) for F in basis)
    logger.debug(f"Graver basis of {A.matrix[0]}: {len(graver)} elements")
    return graver


def min_graver_degree_filter(A: Grading, graver: Optional[Sequence[Binomial]] = None) -> list[Binomial]:
    """Graver elements whose A-degree is least among all Graver degrees."""
    graver = graver_basis(A) if graver is None else graver
    if not graver:
        return []
    weights = A.matrix[0]
    least = min(f.degree(weights) for f in graver)
    return [f for f in graver if f.degree(weights) == least]
