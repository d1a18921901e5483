"""Fiber graphs G_b(J), indispensability tests and minimal generating sets.

The vertices of G_b(J) are the monomials of degree b that occur in some nonzero
binomial of J. Two vertices are joined when they share a variable x_k such that
removing x_k from both leaves a binomial of J. Testing single variables suffices:
if the condition holds for a divisor x^w, multiplying back by x^(w - e_k) keeps
the binomial in J.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional, Sequence, Union

import networkx as nx

from monocurve.algebra.exponents import Binomial, Exponents, monomial_gcd, subtract, support, unit
from monocurve.algebra.grobner import BinomialIdeal, membership, reduce_monomial, toric_ideal
from monocurve.algebra.intlat import Grading
from monocurve.utils.config import get_settings
from monocurve.utils.errors import ComputationRejected, InvariantViolation, NotInIdealError
from monocurve.utils.logger import get_logger

logger = get_logger()

Degree = tuple[int, ...]
DegreeLike = Union[int, Sequence[int]]


class Verdict(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


def as_degree(b: DegreeLike) -> Degree:
    if isinstance(b, int):
        return (b,)
    return tuple(int(e) for e in b)


@dataclass(frozen=True)
class FiberGraph:
    """G_b(J) with its connected components and membership classes.

    ``classes`` partitions the vertices by congruence modulo J; for a toric ideal
    there is a single class.
    """

    degree: Degree
    vertices: tuple[Exponents, ...]
    edges: tuple[tuple[int, int], ...]
    components: tuple[tuple[Exponents, ...], ...]
    classes: tuple[tuple[Exponents, ...], ...]

    @classmethod
    def build(
        cls,
        degree: Degree,
        vertices: Sequence[Exponents],
        edges: Iterable[tuple[int, int]],
        classes: Iterable[Iterable[Exponents]],
    ) -> "FiberGraph":
        vertices = tuple(sorted(vertices))
        edges = tuple(sorted(edges))
        graph = nx.Graph()
        graph.add_nodes_from(range(len(vertices)))
        graph.add_edges_from(edges)
        components = sorted(
            tuple(vertices[i] for i in sorted(component))
            for component in nx.connected_components(graph)
        )
        return cls(
            degree,
            vertices,
            edges,
            tuple(components),
            tuple(sorted(tuple(sorted(c)) for c in classes)),
        )

    @property
    def t(self) -> int:
        """Number of connected components."""
        return len(self.components)

    @property
    def generator_count(self) -> int:
        """Binomials of this degree in any minimal generating set."""
        return len(self.components) - len(self.classes)

    def component_of(self, u: Exponents) -> int:
        for index, component in enumerate(self.components):
            if u in component:
                return index
        raise NotInIdealError(f"{u} is not a vertex of G_{self.degree}")

    def is_two_singletons(self, f: Optional[Binomial] = None) -> bool:
        """G_b == {{x^u}, {x^v}}, optionally for the two monomials of f."""
        if len(self.components) != 2 or any(len(c) != 1 for c in self.components):
            return False
        if f is None:
            return True
        return {c[0] for c in self.components} == {f.lhs, f.rhs}

    def spanning_binomials(self) -> list[Binomial]:
        """One spanning tree over the components inside each class.

        The least vertex of every component is joined to the least vertex of the
        least component of its class.
        """
        out = []
        for members in self.classes:
            inside = [c for c in self.components if c[0] in members]
            root = inside[0][0]
            out.extend(Binomial(c[0], root).canonical()[0] for c in inside[1:])
        return out


def _require_positive(J: BinomialIdeal) -> Grading:
    if J.grading is None or not J.grading.positive:
        raise ComputationRejected("fiber graphs need an ideal graded by a positive grading")
    return J.grading


def _fiber(J: BinomialIdeal, b: Degree) -> list[Exponents]:
    grading = _require_positive(J)
    return grading.fiber(b, get_settings().compute.max_fiber_size)


def _normal_form(J: BinomialIdeal, u: Exponents) -> Exponents:
    return reduce_monomial(u, J.groebner_basis())


def _fiber_classes(J: BinomialIdeal, fiber: Sequence[Exponents]) -> list[list[Exponents]]:
    """Partition of the fiber by congruence modulo J."""
    if J.toric:
        return [list(fiber)]
    groups: dict[Exponents, list[Exponents]] = {}
    for u in fiber:
        groups.setdefault(_normal_form(J, u), []).append(u)
    return list(groups.values())


def m_j_vertices(J: BinomialIdeal, b: DegreeLike) -> list[Exponents]:
    """Monomials of M_J of degree b (lexicographic order)."""
    degree = as_degree(b)
    fiber = _fiber(J, degree)
    return sorted(u for group in _fiber_classes(J, fiber) if len(group) > 1 for u in group)


def _edge(J: BinomialIdeal, u: Exponents, v: Exponents) -> bool:
    common = monomial_gcd(u, v)
    if not any(common):
        return False
    if J.toric:
        return True
    n = len(u)
    for k in sorted(support(common)):
        e = unit(k, n)
        if _normal_form(J, subtract(u, e)) == _normal_form(J, subtract(v, e)):
            return True
    return False


def fiber_graph(J: BinomialIdeal, b: DegreeLike) -> FiberGraph:
    """Build G_b(J); graphs are memoized on the ideal."""
    degree = as_degree(b)
    cached = J.graph_cache.get(degree)
    if cached is not None:
        return cached
    fiber = _fiber(J, degree)
    classes = [group for group in _fiber_classes(J, fiber) if len(group) > 1]
    vertices = sorted(u for group in classes for u in group)
    edges = [
        (i, j)
        for i, j in combinations(range(len(vertices)), 2)
        if _edge(J, vertices[i], vertices[j])
    ]
    graph = FiberGraph.build(degree, vertices, edges, classes)
    logger.debug(f"G_{degree}: {len(vertices)} vertices, {graph.t} components")
    return J.graph_cache.setdefault(degree, graph)


def _degree_of(J: BinomialIdeal, f: Binomial) -> Degree:
    grading = _require_positive(J)
    if not grading.homogeneous(f):
        raise NotInIdealError(f"{f} is not homogeneous, so it is not in the ideal")
    return grading.degree(f.lhs)


def is_minimal_generator(I: BinomialIdeal, f: Binomial) -> bool:
    """The monomials of f lie in different components of G_deg(f)."""
    if not membership(I, f):
        raise NotInIdealError(f"{f} is not in the ideal")
    graph = fiber_graph(I, _degree_of(I, f))
    return graph.component_of(f.lhs) != graph.component_of(f.rhs)


def indispensable_monomial(J: BinomialIdeal, u: Sequence[int]) -> bool:
    """{x^u} is a connected component of its fiber graph."""
    u = tuple(u)
    graph = fiber_graph(J, _require_positive(J).degree(u))
    if u not in graph.vertices:
        raise NotInIdealError(f"x^{u} is not a monomial of M_J")
    return (u,) in graph.components


def indispensable_binomial(J: BinomialIdeal, f: Binomial) -> Verdict:
    """Two-singleton test: exact for toric ideals, sufficient otherwise."""
    if not membership(J, f):
        raise NotInIdealError(f"{f} is not in the ideal")
    graph = fiber_graph(J, _degree_of(J, f))
    if graph.is_two_singletons(f):
        return Verdict.YES
    return Verdict.NO if J.toric else Verdict.UNKNOWN


@dataclass(frozen=True)
class BettiEntry:
    degree: Degree
    components: int
    classes: int
    generators: tuple[Binomial, ...]

    @property
    def count(self) -> int:
        return len(self.generators)


@dataclass
class BettiTable:
    """Minimal generators grouped by degree."""

    entries: dict[Degree, BettiEntry] = field(default_factory=dict)

    @property
    def mu(self) -> int:
        return sum(e.count for e in self.entries.values())

    def degrees(self) -> list[Degree]:
        return sorted(self.entries)

    def generators(self) -> list[Binomial]:
        return [f for b in self.degrees() for f in self.entries[b].generators]

    def counts(self) -> list[tuple[Degree, int]]:
        return [(b, self.entries[b].count) for b in self.degrees()]


def candidate_degrees(J: BinomialIdeal, generators: Optional[Sequence[Binomial]] = None) -> list[Degree]:
    grading = _require_positive(J)
    gens = J.generators if generators is None else generators
    return sorted({grading.degree(f.lhs) for f in gens})


def minimal_generating_set(J: BinomialIdeal) -> BettiTable:
    """A minimal generating set read off the fiber graphs of the candidate degrees.

    Candidates are the degrees of the generators of J; for toric ideals these are
    the saturated generators.
    """
    table = BettiTable()
    for b in candidate_degrees(J):
        graph = fiber_graph(J, b)
        gens = graph.spanning_binomials()
        if gens:
            table.entries[b] = BettiEntry(b, graph.t, len(graph.classes), tuple(gens))
    logger.debug(f"minimal generating set: mu={table.mu} over {len(table.entries)} degrees")
    return table


def unique_minimal_system(I: BinomialIdeal, table: Optional[BettiTable] = None) -> bool:
    """Every Betti degree graph of the toric ideal is exactly two singletons."""
    if not I.toric:
        raise ComputationRejected("the exact uniqueness criterion applies to toric ideals")
    table = table or minimal_generating_set(I)
    return all(fiber_graph(I, b).is_two_singletons() for b in table.degrees())


def unique_generation_verdict(J: BinomialIdeal, table: Optional[BettiTable] = None) -> Verdict:
    """yes when every Betti degree graph is two singletons; toric ideals get an exact no."""
    table = table or minimal_generating_set(J)
    if all(fiber_graph(J, b).is_two_singletons() for b in table.degrees()):
        return Verdict.YES
    return Verdict.NO if J.toric else Verdict.UNKNOWN


def inherits_indispensability(J: BinomialIdeal, I: BinomialIdeal, f: Binomial) -> Verdict:
    """Transfer an indispensable binomial of the toric ideal I to J inside it.

    Returns yes when f is indispensable in I; the graph G_b(J) must then be the
    same two singletons, which is asserted.
    """
    if not membership(J, f):
        raise NotInIdealError(f"{f} is not in the smaller ideal")
    if indispensable_binomial(I, f) is not Verdict.YES:
        return Verdict.UNKNOWN
    if not fiber_graph(J, _degree_of(J, f)).is_two_singletons(f):
        raise InvariantViolation(f"{f} is indispensable in the toric ideal but G_b(J) differs")
    return Verdict.YES


def inherits_indispensable_monomial(J: BinomialIdeal, I: BinomialIdeal, u: Sequence[int]) -> bool:
    """A monomial of M_J indispensable in I is indispensable in J."""
    u = tuple(u)
    if not indispensable_monomial(I, u):
        return False
    if not indispensable_monomial(J, u):
        raise InvariantViolation(f"x^{u} is indispensable in the toric ideal but not in J")
    return True


@lru_cache(maxsize=64)
def _curve_ideal(A: tuple[int, ...]) -> BinomialIdeal:
    return toric_ideal(Grading.curve(A))


def curve_ideal(A: Sequence[int]) -> BinomialIdeal:
    """The toric ideal of the monomial curve with generators A (memoized per A)."""
    return _curve_ideal(tuple(int(a) for a in A))
