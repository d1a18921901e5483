"""Monomials, pure-difference binomials, term orders and their text grammar."""

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, Sequence

from monocurve.utils.errors import ParseError

Exponents = tuple[int, ...]


def _check_lengths(u: Sequence[int], v: Sequence[int]) -> None:
    if len(u) != len(v):
        raise ValueError(f"exponent vectors of different lengths: {len(u)} != {len(v)}")


def exponents(entries: Iterable[int]) -> Exponents:
    """Build an exponent vector, rejecting negative entries."""
    u = tuple(int(e) for e in entries)
    if any(e < 0 for e in u):
        raise ValueError(f"negative exponent in {u}")
    return u


def unit(i: int, n: int, power: int = 1) -> Exponents:
    """x_i^power as an exponent vector (0-based index)."""
    return tuple(power if k == i else 0 for k in range(n))


def support(u: Sequence[int]) -> frozenset[int]:
    """Indices (0-based) of the variables occurring in x^u."""
    return frozenset(i for i, e in enumerate(u) if e != 0)


def monomial_gcd(u: Sequence[int], v: Sequence[int]) -> Exponents:
    _check_lengths(u, v)
    return tuple(min(a, b) for a, b in zip(u, v))


def monomial_lcm(u: Sequence[int], v: Sequence[int]) -> Exponents:
    _check_lengths(u, v)
    return tuple(max(a, b) for a, b in zip(u, v))


def divides(u: Sequence[int], v: Sequence[int]) -> bool:
    """True iff x^u divides x^v."""
    return all(a <= b for a, b in zip(u, v))


def add(u: Sequence[int], v: Sequence[int]) -> Exponents:
    return tuple(a + b for a, b in zip(u, v))


def subtract(u: Sequence[int], v: Sequence[int]) -> Exponents:
    """x^u / x^v; the caller guarantees divisibility."""
    return tuple(a - b for a, b in zip(u, v))


def is_one(u: Sequence[int]) -> bool:
    return not any(u)


def degree(u: Sequence[int], weights: Sequence[int]) -> int:
    """Weighted degree sum(u_i * w_i)."""
    return sum(a * w for a, w in zip(u, weights))


def total_degree(u: Sequence[int]) -> int:
    return sum(u)


def _canonical_key(u: Exponents) -> tuple[int, Exponents]:
    return (sum(u), u)


@dataclass(frozen=True, eq=False)
class Binomial:
    """The pure-difference binomial x^lhs - x^rhs.

    The written orientation is kept for display; equality and hashing ignore the
    sign, so f and -f are the same generator.
    """

    lhs: Exponents
    rhs: Exponents

    def __post_init__(self) -> None:
        _check_lengths(self.lhs, self.rhs)
        object.__setattr__(self, "lhs", exponents(self.lhs))
        object.__setattr__(self, "rhs", exponents(self.rhs))
        if self.lhs == self.rhs:
            raise ValueError("x^u - x^u is the zero binomial; represent it by None")

    @property
    def n(self) -> int:
        return len(self.lhs)

    @property
    def key(self) -> tuple[Exponents, Exponents]:
        """Orientation-free canonical pair (greater term first)."""
        if _canonical_key(self.lhs) >= _canonical_key(self.rhs):
            return (self.lhs, self.rhs)
        return (self.rhs, self.lhs)

    def canonical(self) -> tuple["Binomial", int]:
        """Canonically oriented copy and the sign relating it to self."""
        lhs, rhs = self.key
        if lhs == self.lhs:
            return self, 1
        return Binomial(lhs, rhs), -1

    def reversed(self) -> "Binomial":
        return Binomial(self.rhs, self.lhs)

    @property
    def support(self) -> frozenset[int]:
        return support(self.lhs) | support(self.rhs)

    @property
    def vector(self) -> tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.lhs, self.rhs))

    def degree(self, weights: Sequence[int]) -> int:
        return degree(self.lhs, weights)

    def is_homogeneous(self, grading: Sequence[Sequence[int]]) -> bool:
        return all(degree(self.lhs, row) == degree(self.rhs, row) for row in grading)

    def monomials(self) -> tuple[Exponents, Exponents]:
        return (self.lhs, self.rhs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Binomial):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __lt__(self, other: "Binomial") -> bool:
        return sort_key(self) < sort_key(other)

    def __str__(self) -> str:
        return format_binomial(self)

    def __repr__(self) -> str:
        return f"Binomial({format_binomial(self)!r})"


def sort_key(f: Binomial) -> tuple[tuple[int, Exponents], tuple[int, Exponents]]:
    lhs, rhs = f.key
    return (_canonical_key(lhs), _canonical_key(rhs))


def canonical_sorted(binomials: Iterable[Binomial]) -> list[Binomial]:
    """Deduplicate up to sign and sort by the canonical order."""
    return sorted(set(binomials), key=sort_key)


def binomial_from_vector(w: Sequence[int]) -> Binomial:
    """x^{w+} - x^{w-} for a nonzero integer vector w."""
    return Binomial(tuple(max(e, 0) for e in w), tuple(max(-e, 0) for e in w))


class OrderKind(str, Enum):
    GREVLEX = "grevlex"
    LEX = "lex"


@dataclass(frozen=True)
class TermOrder:
    """A monomial order.

    Variables later in ``priority`` are cheaper. For grevlex the weighted degree
    is compared first (total degree when no weight is given); ties go to the
    reverse-lexicographic scan along ``priority``.
    """

    kind: OrderKind
    n: int
    weight: Optional[tuple[int, ...]] = None
    priority: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if not self.priority:
            object.__setattr__(self, "priority", tuple(range(self.n)))
        if sorted(self.priority) != list(range(self.n)):
            raise ValueError(f"priority {self.priority} is not a permutation of {self.n} variables")
        if self.weight is not None:
            if len(self.weight) != self.n:
                raise ValueError("weight length differs from the variable count")
            object.__setattr__(self, "weight", tuple(self.weight))

    @classmethod
    def grevlex(
        cls, n: int, weight: Optional[Sequence[int]] = None, priority: Sequence[int] = ()
    ) -> "TermOrder":
        return cls(OrderKind.GREVLEX, n, tuple(weight) if weight is not None else None, tuple(priority))

    @classmethod
    def lex(cls, n: int, priority: Sequence[int] = ()) -> "TermOrder":
        return cls(OrderKind.LEX, n, None, tuple(priority))

    @classmethod
    def cheapest_last(cls, n: int, cheap: int, weight: Optional[Sequence[int]] = None) -> "TermOrder":
        """Grevlex with x_cheap the cheapest variable."""
        priority = [k for k in range(n) if k != cheap] + [cheap]
        return cls.grevlex(n, weight, priority)

    def key(self, u: Sequence[int]) -> tuple[int, ...]:
        """Sort key: key(u) < key(v) iff x^u < x^v."""
        if self.kind is OrderKind.LEX:
            head = (degree(u, self.weight),) if self.weight is not None else ()
            return head + tuple(u[p] for p in self.priority)
        weight = self.weight if self.weight is not None else (1,) * self.n
        return (degree(u, weight),) + tuple(-u[p] for p in reversed(self.priority))

    def compare(self, u: Sequence[int], v: Sequence[int]) -> int:
        """-1, 0 or 1 as x^u is less than, equal to or greater than x^v."""
        _check_lengths(u, v)
        ku, kv = self.key(u), self.key(v)
        return (ku > kv) - (ku < kv)

    def orient(self, f: Binomial) -> Binomial:
        """Copy of f written with its leading term first."""
        if self.key(f.lhs) > self.key(f.rhs):
            return f
        return f.reversed()


def compare(order: TermOrder, u: Sequence[int], v: Sequence[int]) -> int:
    return order.compare(u, v)


# Text grammar
# term "-" term; term := factor ("*" factor)* | "1"; factor := ("x"|"y") index ("^" int)?


def format_monomial(u: Sequence[int], lawrence: bool = False) -> str:
    """Render x^u in the 1-based grammar (x1^2*x2); y-variables for Lawrence rings."""
    half = len(u) // 2 if lawrence else len(u)
    factors = []
    for i, e in enumerate(u):
        if e == 0:
            continue
        name = f"x{i + 1}" if i < half else f"y{i - half + 1}"
        factors.append(name if e == 1 else f"{name}^{e}")
    return "*".join(factors) if factors else "1"


def format_binomial(f: Binomial, lawrence: bool = False) -> str:
    return f"{format_monomial(f.lhs, lawrence)} - {format_monomial(f.rhs, lawrence)}"


_TOKEN = re.compile(r"\s*(?:(?P<var>[xy])(?P<idx>\d+)|(?P<op>[-*^])|(?P<num>\d+))")


class _Scanner:
    def __init__(self, text: str, line: Optional[int]):
        self.text = text
        self.pos = 0
        self.line = line

    def error(self, message: str, position: Optional[int] = None) -> ParseError:
        return ParseError(message, self.pos if position is None else position, self.line)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected '{ch}'")
        self.pos += 1

    def number(self) -> tuple[int, int]:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start : self.pos]), start


def _parse_term(scan: _Scanner, n: int, lawrence: bool) -> Exponents:
    u = [0] * n
    half = n // 2 if lawrence else n
    if scan.peek() == "1":
        value, start = scan.number()
        if value != 1:
            raise scan.error("a constant term must be 1", start)
        return tuple(u)
    while True:
        ch = scan.peek()
        start = scan.pos
        if ch not in ("x", "y"):
            raise scan.error("expected a variable x<i> or y<i>")
        if ch == "y" and not lawrence:
            raise scan.error("y-variables are only allowed in a Lawrence ring", start)
        scan.pos += 1
        index, idx_start = scan.number()
        if index < 1 or index > half:
            raise scan.error(f"variable index {index} out of range 1..{half}", idx_start)
        k = index - 1 if ch == "x" else half + index - 1
        power = 1
        if scan.peek() == "^":
            scan.pos += 1
            power, p_start = scan.number()
            if power <= 0:
                raise scan.error("exponent must be positive", p_start)
        u[k] += power
        if scan.peek() != "*":
            return tuple(u)
        scan.pos += 1


def parse_binomial(
    text: str, n: int, lawrence: bool = False, line: Optional[int] = None
) -> Binomial:
    """Parse ``term - term`` into a Binomial over n variables.

    With ``lawrence`` the ring has n = 2m variables x1..xm, y1..ym and y_i maps
    to index m + i.
    """
    if lawrence and n % 2:
        raise ValueError("a Lawrence ring has an even number of variables")
    scan = _Scanner(text, line)
    lhs = _parse_term(scan, n, lawrence)
    scan.expect("-")
    rhs = _parse_term(scan, n, lawrence)
    if scan.peek():
        raise scan.error("unexpected trailing input")
    if lhs == rhs:
        raise scan.error("both terms are equal (zero binomial)", 0)
    return Binomial(lhs, rhs)


def parse_monomial(text: str, n: int, lawrence: bool = False) -> Exponents:
    scan = _Scanner(text, None)
    u = _parse_term(scan, n, lawrence)
    if scan.peek():
        raise scan.error("unexpected trailing input")
    return u


_MAX_INDEX = re.compile(r"[xy](\d+)")


def parse_ideal_text(text: str) -> tuple[int, list[Binomial]]:
    """Parse an ideal file: one binomial per line, '#' comments, optional 'vars n' header.

    Without a header the variable count is the largest index mentioned.
    """
    rows: list[tuple[int, str]] = []
    n: Optional[int] = None
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        if content.startswith("vars"):
            if n is not None or rows:
                raise ParseError("'vars' must be the first non-comment line", 0, number)
            parts = content.split()
            if len(parts) != 2 or not parts[1].isdigit() or int(parts[1]) < 1:
                raise ParseError("expected 'vars <positive integer>'", 0, number)
            n = int(parts[1])
            continue
        rows.append((number, content))
    if n is None:
        indices = [int(m) for _, content in rows for m in _MAX_INDEX.findall(content)]
        n = max(indices, default=0)
    if not rows:
        raise ParseError("ideal file contains no binomials", 0, None)
    return n, [parse_binomial(content, n, line=number) for number, content in rows]
