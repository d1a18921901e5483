"""Exact integer linear algebra: normal forms, kernels, saturation and gradings.

Matrices cross the public boundary as ``sympy.Matrix`` objects with integer
entries; the eliminations themselves run on lists of Python integers.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterator, Optional, Sequence, Union

from sympy import Matrix

from monocurve.algebra.exponents import Binomial, Exponents, degree
from monocurve.algebra.semigroup import weighted_compositions
from monocurve.utils.errors import ComputationRejected
from monocurve.utils.logger import get_logger

try:
    from sympy.core.intfunc import igcdex
except ImportError:  # sympy < 1.13
    from sympy.core.numbers import igcdex

logger = get_logger()

IntRows = list[list[int]]
MatrixLike = Union[Matrix, Sequence[Sequence[int]]]


def _to_rows(M: MatrixLike) -> IntRows:
    if isinstance(M, Matrix):
        return [[int(M[i, j]) for j in range(M.cols)] for i in range(M.rows)]
    return [[int(e) for e in row] for row in M]


def _to_matrix(rows: IntRows, cols: int) -> Matrix:
    if not rows:
        return Matrix.zeros(0, cols)
    return Matrix(rows)


def _identity(n: int) -> IntRows:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _combine_rows(rows: IntRows, i: int, j: int, p: int, q: int, s: int, t: int) -> None:
    """rows[i], rows[j] <- p*rows[i] + q*rows[j], s*rows[i] + t*rows[j]."""
    ri, rj = rows[i], rows[j]
    rows[i] = [p * a + q * b for a, b in zip(ri, rj)]
    rows[j] = [s * a + t * b for a, b in zip(ri, rj)]


def _unimodular_pair(a: int, b: int) -> tuple[int, int, int, int]:
    """Determinant-one (p, q, s, t) sending (a, b) to (gcd(a, b), 0)."""
    x, y, g = (int(v) for v in igcdex(a, b))
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, -b // g, a // g


def _hnf_rows(M: IntRows, cols: int) -> tuple[IntRows, IntRows, int]:
    H = [row[:] for row in M]
    m = len(H)
    U = _identity(m)
    r = 0
    for col in range(cols):
        if r == m:
            break
        for i in range(r + 1, m):
            if H[i][col] != 0:
                p, q, s, t = _unimodular_pair(H[r][col], H[i][col])
                _combine_rows(H, r, i, p, q, s, t)
                _combine_rows(U, r, i, p, q, s, t)
        pivot = H[r][col]
        if pivot == 0:
            continue
        if pivot < 0:
            H[r] = [-e for e in H[r]]
            U[r] = [-e for e in U[r]]
            pivot = -pivot
        for i in range(r):
            factor = H[i][col] // pivot
            if factor:
                H[i] = [a - factor * b for a, b in zip(H[i], H[r])]
                U[i] = [a - factor * b for a, b in zip(U[i], U[r])]
        r += 1
    return H, U, r


def hermite_normal_form(M: MatrixLike) -> tuple[Matrix, Matrix]:
    """Row Hermite normal form.

    Returns:
        (H, U) with U unimodular and U*M = H; the first rank(M) rows of H are the
        nonzero ones, pivots positive, entries above a pivot reduced modulo it.
    """
    rows = _to_rows(M)
    cols = M.cols if isinstance(M, Matrix) else (len(rows[0]) if rows else 0)
    H, U, _ = _hnf_rows(rows, cols)
    return _to_matrix(H, cols), _to_matrix(U, len(rows))


def rank(M: MatrixLike) -> int:
    rows = _to_rows(M)
    cols = M.cols if isinstance(M, Matrix) else (len(rows[0]) if rows else 0)
    return _hnf_rows(rows, cols)[2]


def smith_normal_form(M: MatrixLike) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form with transforms.

    Returns:
        (D, P, Q) with P*M*Q = D diagonal, d_1 | d_2 | ..., d_i >= 0, P and Q unimodular.
    """
    D = _to_rows(M)
    m = len(D)
    n = M.cols if isinstance(M, Matrix) else (len(D[0]) if D else 0)
    P = _identity(m)
    Q = _identity(n)

    def swap_cols(a: int, b: int) -> None:
        for row in D:
            row[a], row[b] = row[b], row[a]
        for row in Q:
            row[a], row[b] = row[b], row[a]

    def add_col(target: int, source: int, factor: int) -> None:
        for row in D:
            row[target] += factor * row[source]
        for row in Q:
            row[target] += factor * row[source]

    for t in range(min(m, n)):
        while True:
            entries = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
            if not entries:
                break
            _, i0, j0 = min(entries)
            D[t], D[i0] = D[i0], D[t]
            P[t], P[i0] = P[i0], P[t]
            swap_cols(t, j0)
            pivot = D[t][t]
            clean = True
            for i in range(t + 1, m):
                factor = D[i][t] // pivot
                if factor:
                    D[i] = [a - factor * b for a, b in zip(D[i], D[t])]
                    P[i] = [a - factor * b for a, b in zip(P[i], P[t])]
                clean = clean and D[i][t] == 0
            for j in range(t + 1, n):
                factor = D[t][j] // pivot
                if factor:
                    add_col(j, t, -factor)
                clean = clean and D[t][j] == 0
            if not clean:
                continue
            stray = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % pivot),
                None,
            )
            if stray is None:
                break
            D[t] = [a + b for a, b in zip(D[t], D[stray])]
            P[t] = [a + b for a, b in zip(P[t], P[stray])]
        if t < m and t < n and D[t][t] < 0:
            D[t] = [-e for e in D[t]]
            P[t] = [-e for e in P[t]]
    return _to_matrix(D, n), _to_matrix(P, m), _to_matrix(Q, n)


def invariant_factors(M: MatrixLike) -> list[int]:
    """Nonzero diagonal entries of the Smith form."""
    D, _, _ = smith_normal_form(M)
    return [int(D[i, i]) for i in range(min(D.rows, D.cols)) if D[i, i] != 0]


def _kernel_rows(rows: IntRows, n: int) -> IntRows:
    if not rows:
        return _identity(n)
    transposed = [[rows[i][j] for i in range(len(rows))] for j in range(n)]
    _, U, r = _hnf_rows(transposed, len(rows))
    basis = U[r:]
    if not basis:
        return []
    H, _, k = _hnf_rows(basis, n)
    return H[:k]


def kernel_lattice(A: MatrixLike, n: Optional[int] = None) -> Matrix:
    """Basis (rows, in Hermite form) of {x in Z^n : A x = 0}."""
    rows = _to_rows(A)
    if n is None:
        n = A.cols if isinstance(A, Matrix) else len(rows[0])
    return _to_matrix(_kernel_rows(rows, n), n)


def saturate_lattice(L: MatrixLike, n: int) -> Matrix:
    """Basis of Sat(L) = {u : z*u in L for some nonzero z}, the double orthogonal of L."""
    rows = [row for row in _to_rows(L) if any(row)]
    return _to_matrix(_kernel_rows(_kernel_rows(rows, n), n), n)


def lattice_contains(basis: MatrixLike, u: Sequence[int]) -> bool:
    """Membership of an integer vector in the lattice spanned by the rows of ``basis``."""
    rows = _to_rows(basis)
    n = len(u)
    if not rows:
        return not any(u)
    H, _, r = _hnf_rows(rows, n)
    residue = list(u)
    for row in H[:r]:
        col = next(j for j, e in enumerate(row) if e)
        if residue[col] % row[col]:
            return False
        factor = residue[col] // row[col]
        residue = [a - factor * b for a, b in zip(residue, row)]
    return not any(residue)


def positive_certificate(matrix: MatrixLike) -> Optional[tuple[int, ...]]:
    """A strictly positive integer vector in the rational row space, or None.

    Solves c * column_i >= 1 for all columns by Fourier-Motzkin elimination over
    Fractions and returns c * matrix scaled to integers.
    """
    rows = _to_rows(matrix)
    if not rows:
        return None
    d, n = len(rows), len(rows[0])
    for row in rows:
        if all(e > 0 for e in row):
            return tuple(row)
    # constraint: sum_k coeff[k] * c_k >= rhs
    system: list[tuple[list[Fraction], Fraction]] = [
        ([Fraction(rows[k][i]) for k in range(d)], Fraction(1)) for i in range(n)
    ]
    stages: list[list[tuple[list[Fraction], Fraction]]] = []
    for var in reversed(range(d)):
        stages.append(system)
        lower = [c for c in system if c[0][var] > 0]
        upper = [c for c in system if c[0][var] < 0]
        rest = [c for c in system if c[0][var] == 0]
        for lo_coeffs, lo_rhs in lower:
            for up_coeffs, up_rhs in upper:
                a, b = lo_coeffs[var], -up_coeffs[var]
                coeffs = [b * x + a * y for x, y in zip(lo_coeffs, up_coeffs)]
                rest.append((coeffs, b * lo_rhs + a * up_rhs))
        system = rest
    if any(rhs > 0 for _, rhs in system):
        return None
    c = [Fraction(0)] * d
    for var, constraints in zip(range(d), reversed(stages)):
        lo: Optional[Fraction] = None
        hi: Optional[Fraction] = None
        for coeffs, rhs in constraints:
            a = coeffs[var]
            if a == 0:
                continue
            bound = (rhs - sum(coeffs[k] * c[k] for k in range(var))) / a
            if a > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        c[var] = lo if lo is not None else (hi if hi is not None else Fraction(0))
    weight = [sum(c[k] * rows[k][i] for k in range(d)) for i in range(n)]
    scale = reduce(lcm, (w.denominator for w in weight), 1)
    result = tuple(int(w * scale) for w in weight)
    content = reduce(gcd, result, 0)
    return tuple(w // content for w in result)


@dataclass(frozen=True)
class Grading:
    """A d x n integer grading matrix with its positivity certificate.

    ``weight`` is a strictly positive integer vector in the row space when the
    grading is positive; it bounds fibers and serves as the grevlex weight.
    """

    matrix: tuple[tuple[int, ...], ...]
    weight: Optional[tuple[int, ...]]

    @classmethod
    def from_rows(cls, rows: MatrixLike) -> "Grading":
        matrix = tuple(tuple(row) for row in _to_rows(rows))
        return cls(matrix, positive_certificate(matrix))

    @classmethod
    def curve(cls, generators: Sequence[int]) -> "Grading":
        """The one-row grading of a monomial curve."""
        if any(a <= 0 for a in generators):
            raise ComputationRejected(f"curve generators must be positive: {tuple(generators)}")
        row = tuple(int(a) for a in generators)
        return cls((row,), row)

    @property
    def d(self) -> int:
        return len(self.matrix)

    @property
    def n(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    @property
    def positive(self) -> bool:
        return self.weight is not None

    @property
    def is_curve(self) -> bool:
        return self.d == 1 and all(a > 0 for a in self.matrix[0])

    def degree(self, u: Sequence[int]) -> tuple[int, ...]:
        return tuple(degree(u, row) for row in self.matrix)

    def homogeneous(self, f: Binomial) -> bool:
        return f.is_homogeneous(self.matrix)

    def as_matrix(self) -> Matrix:
        return Matrix([list(row) for row in self.matrix])

    def fiber(self, b: Sequence[int], limit: Optional[int] = None) -> list[Exponents]:
        """All u in N^n with A u = b, lexicographically sorted."""
        if self.weight is None:
            raise ComputationRejected("fibers of a non-positive grading are infinite")
        target = tuple(b)
        total = _weight_of_degree(self, target)
        if total is None:
            return []
        return [u for u in weighted_compositions(self.weight, total, limit) if self.degree(u) == target]


def _weight_of_degree(grading: Grading, b: tuple[int, ...]) -> Optional[int]:
    """weight . u for any u of degree b (weight lies in the row space)."""
    assert grading.weight is not None
    rows = [list(r) for r in grading.matrix]
    # Solve c * rows = weight over Q via the Hermite form of the stacked system.
    d, n = len(rows), len(rows[0])
    augmented = [[Fraction(rows[k][i]) for k in range(d)] + [Fraction(grading.weight[i])] for i in range(n)]
    pivots: list[int] = []
    r = 0
    for col in range(d):
        pivot = next((i for i in range(r, n) if augmented[i][col] != 0), None)
        if pivot is None:
            continue
        augmented[r], augmented[pivot] = augmented[pivot], augmented[r]
        lead = augmented[r][col]
        augmented[r] = [e / lead for e in augmented[r]]
        for i in range(n):
            if i != r and augmented[i][col] != 0:
                factor = augmented[i][col]
                augmented[i] = [a - factor * c for a, c in zip(augmented[i], augmented[r])]
        pivots.append(col)
        r += 1
    c = [Fraction(0)] * d
    for i, col in enumerate(pivots):
        c[col] = augmented[i][d]
    total = sum(ci * bi for ci, bi in zip(c, b))
    if total.denominator != 1 or total < 0:
        return None
    return int(total)


def is_homogeneous(gens: Sequence[Binomial], grading: Grading) -> bool:
    return all(grading.homogeneous(f) for f in gens)


def difference_lattice(gens: Sequence[Binomial]) -> Matrix:
    """L = span_Z{u - v} of the generators, as Hermite rows."""
    if not gens:
        raise ValueError("at least one generator is required")
    n = gens[0].n
    rows = [list(f.vector) for f in gens]
    H, _, r = _hnf_rows(rows, n)
    return _to_matrix(H[:r], n)


def finest_grading(gens: Sequence[Binomial], n: Optional[int] = None) -> Grading:
    """The finest grading making every generator homogeneous.

    Its kernel is Sat(L) for L the difference lattice, so d = n - rank(L); the
    rows are the Hermite basis of the orthogonal lattice of L.
    """
    if not gens:
        raise ValueError("at least one generator is required")
    n = n if n is not None else gens[0].n
    lattice = _to_rows(difference_lattice(gens))
    orthogonal = _kernel_rows(lattice, n)
    logger.debug(f"finest grading: rank(L)={len(lattice)}, d={len(orthogonal)}")
    if not orthogonal:
        raise ComputationRejected("the generators identify every monomial; no nontrivial grading")
    return Grading.from_rows(orthogonal)


def lattice_rows(M: Matrix) -> Iterator[tuple[int, ...]]:
    for i in range(M.rows):
        yield tuple(int(M[i, j]) for j in range(M.cols))
