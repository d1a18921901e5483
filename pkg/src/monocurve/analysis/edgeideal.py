"""Binomial edge ideals J_G = <x_i y_j - x_j y_i : {i, j} in E(G)>.

Variables are ordered x_1..x_n, y_1..y_n. J_G is homogeneous for the Lawrence
lifting of (1, ..., 1): x_i has degree (1, e_i) and y_i has degree (0, e_i).
"""

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

import networkx as nx

from monocurve.algebra.exponents import Binomial, Exponents, add, unit
from monocurve.algebra.grobner import BinomialIdeal, LawrenceIdeal, membership
from monocurve.algebra.intlat import Grading
from monocurve.analysis.fibergraph import fiber_graph, minimal_generating_set
from monocurve.utils.config import get_settings
from monocurve.utils.errors import ComputationRejected, InvariantViolation, ParseError
from monocurve.utils.logger import get_logger

logger = get_logger()

CROSS_CHECK_MAX_VERTICES = 5


@dataclass(frozen=True)
class SimpleGraph:
    """Vertices 0..n-1 and edges (i, j) with i < j."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        edges = []
        for i, j in self.edges:
            i, j = min(i, j), max(i, j)
            if i == j:
                raise ValueError(f"loop at vertex {i + 1}")
            if not 0 <= i < j < self.n:
                raise ValueError(f"edge {{{i + 1}, {j + 1}}} leaves the vertex set 1..{self.n}")
            edges.append((i, j))
        if len(set(edges)) != len(edges):
            raise ValueError("duplicate edge")
        object.__setattr__(self, "edges", tuple(sorted(edges)))

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        return cls(n, tuple(combinations(range(n), 2)))

    @classmethod
    def path(cls, n: int) -> "SimpleGraph":
        return cls(n, tuple((i, i + 1) for i in range(n - 1)))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "SimpleGraph":
        index = {v: k for k, v in enumerate(sorted(graph.nodes))}
        return cls(len(index), tuple((index[u], index[v]) for u, v in graph.edges))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    @property
    def is_connected(self) -> bool:
        return nx.is_connected(self.to_networkx())

    @property
    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2

    def __str__(self) -> str:
        body = ", ".join(f"{i + 1}-{j + 1}" for i, j in self.edges)
        return f"graph {self.n}: {body or 'no edges'}"


def parse_graph_text(text: str) -> SimpleGraph:
    """Read "graph n" followed by one 1-based "i j" edge per line; "#" starts a comment."""
    n = None
    edges: list[tuple[int, int]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = list(re.finditer(r"\S+", raw.split("#", 1)[0]))
        fields = [t.group() for t in tokens]
        if n is None:
            if len(fields) != 2 or fields[0] != "graph" or not fields[1].isdigit():
                raise ParseError('expected header "graph n"', 0, number)
            n = int(fields[1])
            if n < 1:
                raise ParseError("a graph needs at least one vertex", tokens[1].start(), number)
            continue
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise ParseError('expected an edge "i j"', tokens[0].start(), number)
        i, j = int(fields[0]), int(fields[1])
        if i == j:
            raise ParseError(f"loop at vertex {i}", tokens[0].start(), number)
        for token, v in zip(tokens, (i, j)):
            if not 1 <= v <= n:
                raise ParseError(f"vertex {v} outside 1..{n}", token.start(), number)
        edge = (min(i, j) - 1, max(i, j) - 1)
        if edge in edges:
            raise ParseError(f"duplicate edge {{{i}, {j}}}", tokens[0].start(), number)
        edges.append(edge)
    if n is None:
        raise ParseError('missing header "graph n"', 0, 1)
    return SimpleGraph(n, tuple(edges))


def lawrence_grading(n: int) -> Grading:
    return LawrenceIdeal(Grading.curve((1,) * n)).grading


def edge_binomial(n: int, i: int, j: int) -> Binomial:
    """x_i y_j - x_j y_i in 2n variables (0-based vertices)."""
    return Binomial(add(unit(i, 2 * n), unit(n + j, 2 * n)), add(unit(j, 2 * n), unit(n + i, 2 * n)))


def edge_ideal(G: SimpleGraph) -> BinomialIdeal:
    gens = tuple(edge_binomial(G.n, i, j) for i, j in G.edges)
    return BinomialIdeal(2 * G.n, gens, lawrence_grading(G.n))


def _edge_fiber(G: SimpleGraph, f: Binomial, grading: Grading) -> list[Exponents]:
    return grading.fiber(grading.degree(f.lhs), get_settings().compute.max_fiber_size)


def verify_unique_generation(G: SimpleGraph, cross_check: bool = True) -> bool:
    """Every f_ij spans a two-singleton fiber graph of J_G.

    The fiber of deg(f_ij) is enumerated directly; for small graphs the fiber
    graphs of J_G are also built and must agree.
    """
    if not G.is_connected:
        raise ComputationRejected(f"{G} is not connected")
    grading = lawrence_grading(G.n)
    J = edge_ideal(G)
    check_graphs = cross_check and G.n <= CROSS_CHECK_MAX_VERTICES
    for f in J.generators:
        fiber = _edge_fiber(G, f, grading)
        if set(fiber) != {f.lhs, f.rhs}:
            logger.debug(f"{f}: fiber has {len(fiber)} monomials")
            return False
        if check_graphs and not fiber_graph(J, grading.degree(f.lhs)).is_two_singletons(f):
            raise InvariantViolation(f"{f}: direct fiber is two monomials but G_b(J_G) is not two singletons")
    return True


def lawrence_containment(G: SimpleGraph, exact: bool = False) -> tuple[bool, bool]:
    """(J_G is inside the Lawrence ideal of (1, ..., 1), J_G equals it).

    The 2x2 minors are the indispensable generators of the Lawrence ideal, so
    equality holds exactly for the complete graph. With ``exact`` the number of
    minimal generators of the Lawrence ideal is computed and compared.
    """
    lawrence = LawrenceIdeal(Grading.curve((1,) * G.n))
    toric = BinomialIdeal(2 * G.n, (), lawrence.grading, toric=True)
    contained = all(membership(toric, f) for f in edge_ideal(G).generators)
    minors = G.n * (G.n - 1) // 2
    if exact:
        mu = minimal_generating_set(lawrence.toric_ideal()).mu
        if mu != minors:
            raise InvariantViolation(f"Lawrence ideal on {G.n} vertices has {mu} minimal generators, not {minors}")
    return contained, contained and len(G.edges) == minors


def connected_graphs(max_vertices: int, min_vertices: int = 2) -> Iterator[SimpleGraph]:
    """Every connected simple graph up to isomorphism, from the networkx graph atlas."""
    if max_vertices > 7:
        raise ComputationRejected("the graph atlas stops at seven vertices")
    for graph in nx.graph_atlas_g():
        if min_vertices <= graph.number_of_nodes() <= max_vertices and nx.is_connected(graph):
            yield SimpleGraph.from_networkx(graph)


def verify_all_connected(max_vertices: int, cross_check: bool = False) -> dict[SimpleGraph, bool]:
    results = {G: verify_unique_generation(G, cross_check) for G in connected_graphs(max_vertices)}
    logger.info(f"checked {len(results)} connected graphs on at most {max_vertices} vertices")
    return results


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
    """1-based edge list to a SimpleGraph."""
    return SimpleGraph(n, tuple((i - 1, j - 1) for i, j in edges))
