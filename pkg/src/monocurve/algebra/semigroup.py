"""Numerical semigroups, critical exponents and fibers of monomial curves."""

import heapq
from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Iterator, Optional, Sequence

from monocurve.algebra.exponents import Exponents
from monocurve.utils.errors import ComputationRejected


def weighted_compositions(
    weights: Sequence[int], total: int, limit: Optional[int] = None
) -> list[Exponents]:
    """All u in N^n with sum(u_i * w_i) == total, in lexicographic order.

    Args:
        weights: Positive integer weights
        total: Target weighted degree
        limit: Reject (ComputationRejected) when more solutions than this exist
    """
    n = len(weights)
    if total < 0:
        return []
    if n == 0:
        return [()] if total == 0 else []
    suffix_gcd = [0] * (n + 1)
    for i in reversed(range(n)):
        suffix_gcd[i] = gcd(weights[i], suffix_gcd[i + 1])
    out: list[Exponents] = []
    u = [0] * n

    def walk(i: int, rest: int) -> None:
        if rest % suffix_gcd[i]:
            return
        w = weights[i]
        if i == n - 1:
            u[i] = rest // w
            out.append(tuple(u))
            if limit is not None and len(out) > limit:
                raise ComputationRejected(f"fiber of degree {total} exceeds {limit} monomials")
            return
        for e in range(rest // w + 1):
            u[i] = e
            walk(i + 1, rest - e * w)
        u[i] = 0

    walk(0, total)
    return out


def fiber(A: Sequence[int], b: int, limit: Optional[int] = None) -> list[Exponents]:
    """deg_A^{-1}(b) for a monomial curve, lexicographically sorted."""
    if any(a <= 0 for a in A):
        raise ComputationRejected(f"curve generators must be positive: {tuple(A)}")
    return weighted_compositions(A, b, limit)


def representable(generators: Sequence[int], limit: int) -> bytearray:
    """reach[k] == 1 iff k is a non-negative combination of the generators, for k <= limit."""
    reach = bytearray(limit + 1)
    reach[0] = 1
    for a in generators:
        for k in range(a, limit + 1):
            if reach[k - a]:
                reach[k] = 1
    return reach


def apery_set(generators: Sequence[int], m: int) -> tuple[int, ...]:
    """Least semigroup element in each residue class modulo m (Dijkstra over residues)."""
    if m not in generators:
        raise ValueError(f"{m} is not a generator")
    dist: list[Optional[int]] = [None] * m
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        value, r = heapq.heappop(heap)
        if value != dist[r]:
            continue
        for a in generators:
            nr, nv = (r + a) % m, value + a
            current = dist[nr]
            if current is None or nv < current:
                dist[nr] = nv
                heapq.heappush(heap, (nv, nr))
    if any(v is None for v in dist):
        raise ComputationRejected(f"generators {tuple(generators)} do not have gcd 1")
    return tuple(v for v in dist if v is not None)


@dataclass(frozen=True)
class NumericalSemigroup:
    """The monoid generated by relatively prime positive integers."""

    generators: tuple[int, ...]
    apery: tuple[int, ...] = field(init=False)
    frobenius: int = field(init=False)

    def __post_init__(self) -> None:
        gens = tuple(sorted(int(a) for a in self.generators))
        if not gens or gens[0] <= 0:
            raise ComputationRejected("a numerical semigroup needs positive generators")
        if reduce(gcd, gens) != 1:
            raise ComputationRejected(f"gcd{gens} != 1")
        object.__setattr__(self, "generators", gens)
        apery = apery_set(gens, gens[0])
        object.__setattr__(self, "apery", apery)
        object.__setattr__(self, "frobenius", max(apery) - gens[0])

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    def contains(self, b: int) -> bool:
        return b >= 0 and b >= self.apery[b % self.multiplicity]

    def __contains__(self, b: int) -> bool:
        return self.contains(b)

    def gaps(self) -> Iterator[int]:
        return (z for z in range(self.frobenius + 1) if not self.contains(z))

    @property
    def genus(self) -> int:
        return sum(w // self.multiplicity for w in self.apery)

    def is_symmetric(self) -> bool:
        F = self.frobenius
        return all(self.contains(z) != self.contains(F - z) for z in range(F + 1))


def contains(S: NumericalSemigroup, b: int) -> bool:
    return S.contains(b)


def frobenius_number(S: NumericalSemigroup) -> int:
    return S.frobenius


def is_symmetric(S: NumericalSemigroup) -> bool:
    return S.is_symmetric()


@dataclass(frozen=True)
class CriticalExponents:
    """c_i for every variable, with the critical degrees c_i * a_i."""

    generators: tuple[int, ...]
    c: tuple[int, ...]

    def __iter__(self) -> Iterator[int]:
        return iter(self.c)

    def __getitem__(self, i: int) -> int:
        return self.c[i]

    def __len__(self) -> int:
        return len(self.c)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(c * a for c, a in zip(self.c, self.generators))


def critical_exponents(A: Sequence[int]) -> CriticalExponents:
    """c_i = least k >= 1 with k*a_i in the semigroup generated by the other a_j.

    The other generators may have gcd > 1, so membership is decided by a bounded
    DP on them; c_i <= a_j / gcd(a_i, a_j) for any j != i bounds the search.
    """
    if len(A) < 2:
        raise ComputationRejected("critical exponents need at least two generators")
    if any(a <= 0 for a in A):
        raise ComputationRejected(f"curve generators must be positive: {tuple(A)}")
    result = []
    for i, a in enumerate(A):
        others = [A[j] for j in range(len(A)) if j != i]
        bound = min(b // gcd(a, b) for b in others)
        reach = representable(others, bound * a)
        result.append(next(k for k in range(1, bound + 1) if reach[k * a]))
    return CriticalExponents(tuple(A), tuple(result))
