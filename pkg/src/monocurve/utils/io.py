"""Readers for ideal and graph files."""

from pathlib import Path

from monocurve.algebra.exponents import Binomial, parse_ideal_text
from monocurve.algebra.grobner import BinomialIdeal
from monocurve.algebra.intlat import finest_grading
from monocurve.analysis.edgeideal import SimpleGraph, parse_graph_text
from monocurve.utils.logger import get_logger

logger = get_logger()


def _read_text(path: Path) -> str:
    if not path.exists():
        raise FileNotFoundError(f"File not found: {path}")
    return path.read_text(encoding="utf-8")


def read_ideal_file(path: Path) -> tuple[int, list[Binomial]]:
    """Variable count and generators of an ideal file.

    Lines hold one binomial each (``x1^2 - x2*x3``); ``#`` starts a comment and
    an optional first line ``vars n`` fixes the number of variables.
    """
    n, gens = parse_ideal_text(_read_text(path))
    logger.debug(f"read {len(gens)} binomials in {n} variables from {path}")
    return n, gens


def load_ideal(path: Path) -> BinomialIdeal:
    """The ideal of a file, graded by the finest grading making it homogeneous."""
    n, gens = read_ideal_file(path)
    return BinomialIdeal(n, tuple(gens), finest_grading(gens, n))


def read_graph_file(path: Path) -> SimpleGraph:
    """A graph file: ``graph n`` then one 1-based ``i j`` edge per line."""
    graph = parse_graph_text(_read_text(path))
    logger.debug(f"read {graph} from {path}")
    return graph
