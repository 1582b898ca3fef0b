"""Exponent-vector monomials and canonical monomial ideals.

Variables are labelled ``x1 .. xn``; variable indices are 1-based wherever
they are exposed (``max_index``, ``Monomial.variable``, text format) and
exponent tuples are plain 0-based Python sequences.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_VARS = 16


class AmbientMismatch(ValueError):
    """Two monomials live in polynomial rings with different variable counts."""


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class RedundantGeneratorWarning(UserWarning):
    """A listed generator was dropped by minimalization."""


@dataclass(frozen=True, slots=True)
class Monomial:
    exponents: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.exponents, tuple):
            object.__setattr__(self, "exponents", tuple(self.exponents))
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")

    @classmethod
    def unit(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @classmethod
    def variable(cls, n: int, k: int) -> Monomial:
        """The monomial ``x<k>`` (1-based ``k``) in ``n`` variables."""
        if not 1 <= k <= n:
            raise ValueError(f"variable index {k} outside 1..{n}")
        exps = [0] * n
        exps[k - 1] = 1
        return cls(tuple(exps))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(k + 1 for k, e in enumerate(self.exponents) if e)

    def is_unit(self) -> bool:
        return not any(self.exponents)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def is_variable(self) -> bool:
        return self.degree == 1

    def exponent(self, k: int) -> int:
        """Exponent of ``x<k>``, 1-based."""
        return self.exponents[k - 1]

    def _check(self, other: Monomial):
        if len(self.exponents) != len(other.exponents):
            raise AmbientMismatch(
                f"monomials in {self.n} and {other.n} variables")

    def divides(self, other: Monomial) -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(tuple(map(max, self.exponents, other.exponents)))

    def gcd(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(tuple(map(min, self.exponents, other.exponents)))

    def __mul__(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __truediv__(self, other: Monomial) -> Monomial:
        """Exact quotient; raises if ``other`` does not divide ``self``."""
        self._check(other)
        exps = tuple(a - b for a, b in zip(self.exponents, other.exponents))
        if any(e < 0 for e in exps):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(exps)

    def revlex_key(self) -> tuple[int, ...]:
        # Ascending order on this key is revlex-descending order on monomials.
        return self.exponents[::-1]

    def sort_key(self) -> tuple:
        return (self.degree, self.revlex_key())

    def __str__(self) -> str:
        return format_monomial(self)


def degree(u: Monomial) -> int:
    return u.degree


def divides(u: Monomial, v: Monomial) -> bool:
    return u.divides(v)


def lcm(u: Monomial, v: Monomial) -> Monomial:
    return u.lcm(v)


def gcd(u: Monomial, v: Monomial) -> Monomial:
    return u.gcd(v)


def lcm_all(monomials: Iterable[Monomial], n: int) -> Monomial:
    out = Monomial.unit(n)
    for u in monomials:
        out = out.lcm(u)
    return out


def gcd_all(monomials: Sequence[Monomial]) -> Monomial:
    out = monomials[0]
    for u in monomials[1:]:
        out = out.gcd(u)
    return out


def colon_monomial(u: Monomial, v: Monomial) -> Monomial:
    """Generator of the principal colon ideal ``(u) : v``, i.e. ``u / gcd(u, v)``."""
    return u / u.gcd(v)


def max_index(u: Monomial) -> int | None:
    """Largest 1-based ``k`` with ``x<k>`` dividing ``u``; ``None`` for the unit."""
    for k in range(len(u.exponents), 0, -1):
        if u.exponents[k - 1]:
            return k
    return None


def revlex_greater(u: Monomial, v: Monomial) -> bool:
    """``u > v`` in revlex: the last nonzero entry of ``u - v`` is negative."""
    u._check(v)
    for a, b in zip(reversed(u.exponents), reversed(v.exponents)):
        if a != b:
            return a < b
    return False


@dataclass(frozen=True, slots=True)
class MonomialIdeal:
    """Ideal given by its minimal generators in canonical order.

    Canonical order is degree ascending, then revlex descending. An empty
    generator tuple stands for the zero ideal.
    """

    n: int
    generators: tuple[Monomial, ...]

    @classmethod
    def zero(cls, n: int) -> MonomialIdeal:
        return cls(n, ())

    @property
    def r(self) -> int:
        return len(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __contains__(self, w: Monomial) -> bool:
        return contains(self, w)

    def is_zero(self) -> bool:
        return not self.generators

    def is_squarefree(self) -> bool:
        return all(u.is_squarefree() for u in self.generators)

    def degrees(self) -> tuple[int, ...]:
        return tuple(u.degree for u in self.generators)

    def common_degree(self) -> int | None:
        """The shared generator degree, or ``None`` if not equigenerated."""
        degs = set(self.degrees())
        return degs.pop() if len(degs) == 1 else None

    def __str__(self) -> str:
        return format_ideal(self)


def _is_antichain(gens: Sequence[Monomial]) -> bool:
    for i, u in enumerate(gens):
        for j, v in enumerate(gens):
            if i != j and u.divides(v):
                return False
    return True


def minimalize(gens: Iterable[Monomial]) -> MonomialIdeal:
    gens = list(gens)
    if not gens:
        raise ValueError("cannot minimalize an empty generator list")
    n = gens[0].n
    for u in gens:
        if u.n != n:
            raise AmbientMismatch(f"monomials in {n} and {u.n} variables")
        if u.is_unit():
            raise ValueError("the unit monomial generates the whole ring")
    # After sorting by degree, a divisor always precedes its multiples.
    kept: list[Monomial] = []
    for u in sorted(set(gens), key=Monomial.sort_key):
        if not any(g.divides(u) for g in kept):
            kept.append(u)
    return MonomialIdeal(n, tuple(kept))


def canonical_ideal(n: int, gens: Iterable[Monomial]) -> MonomialIdeal:
    """Wrap an already-minimal generator set, only sorting it."""
    gens = tuple(sorted(gens, key=Monomial.sort_key))
    if not _is_antichain(gens):
        raise ValueError("generators are not a minimal generating set")
    return MonomialIdeal(n, gens)


def contains(ideal: MonomialIdeal, w: Monomial) -> bool:
    return any(g.divides(w) for g in ideal.generators)


# --- text format -----------------------------------------------------------

_FACTOR = re.compile(r"x(\d+)(?:\^(\d+))?")


def format_monomial(u: Monomial) -> str:
    if u.is_unit():
        return "1"
    parts = []
    for k, e in enumerate(u.exponents, start=1):
        if e == 1:
            parts.append(f"x{k}")
        elif e > 1:
            parts.append(f"x{k}^{e}")
    return "*".join(parts)


def format_ideal(ideal: MonomialIdeal) -> str:
    if ideal.is_zero():
        return "0"
    return ", ".join(format_monomial(u) for u in ideal.generators)


def _strip(text: str) -> tuple[str, list[int]]:
    # Keep a map back to the original offsets for error positions.
    chars, offsets = [], []
    for i, c in enumerate(text):
        if not c.isspace():
            chars.append(c)
            offsets.append(i)
    return "".join(chars), offsets


def _parse_monomial_at(s: str, start: int, end: int, n: int, offsets: list[int]) -> Monomial:
    def pos(i):
        return offsets[i] if i < len(offsets) else (offsets[-1] + 1 if offsets else 0)

    if start == end:
        raise ParseError("empty monomial", pos(start))
    if s[start:end] == "1":
        return Monomial.unit(n)
    exps = [0] * n
    i = start
    while True:
        m = _FACTOR.match(s, i, end)
        if m is None:
            raise ParseError(f"expected x<k>[^<e>], got {s[i:end]!r}", pos(i))
        k = int(m.group(1))
        if not 1 <= k <= n:
            raise ParseError(f"variable index x{k} out of range 1..{n}", pos(i))
        exps[k - 1] += int(m.group(2)) if m.group(2) is not None else 1
        i = m.end()
        if i == end:
            break
        if s[i] != "*":
            raise ParseError(f"expected '*' or ',', got {s[i]!r}", pos(i))
        i += 1
    return Monomial(tuple(exps))


def parse_monomial(text: str, n: int) -> Monomial:
    s, offsets = _strip(text)
    return _parse_monomial_at(s, 0, len(s), n, offsets)


def parse_generators(text: str, n: int) -> list[Monomial]:
    """Parse the comma-separated list as written, without minimalizing."""
    if not 1 <= n <= MAX_VARS:
        raise ValueError(f"variable count {n} outside 1..{MAX_VARS}")
    s, offsets = _strip(text)
    gens, start = [], 0
    for end in [i for i, c in enumerate(s) if c == ","] + [len(s)]:
        gens.append(_parse_monomial_at(s, start, end, n, offsets))
        start = end + 1
    return gens


def parse_ideal(text: str, n: int) -> MonomialIdeal:
    """Parse ``x1^2*x2, x1*x3``-style text into a canonical minimal ideal.

    Generators made redundant by minimalization are reported through a
    :class:`RedundantGeneratorWarning`.
    """
    gens = parse_generators(text, n)
    for i, u in enumerate(gens):
        if u.is_unit():
            s, offsets = _strip(text)
            raise ParseError("the unit monomial is not allowed as a generator",
                             offsets[_nth_comma(s, i)] if offsets else 0)
    ideal = minimalize(gens)
    dropped = [u for u in dict.fromkeys(gens) if u not in ideal.generators]
    if dropped or len(gens) != len(set(gens)):
        names = ", ".join(format_monomial(u) for u in dropped) or "duplicates"
        warnings.warn(f"dropped redundant generators: {names}",
                      RedundantGeneratorWarning, stacklevel=2)
    return ideal


def _nth_comma(s: str, i: int) -> int:
    if i == 0:
        return 0
    commas = [k for k, c in enumerate(s) if c == ","]
    return min(commas[i - 1] + 1, len(s) - 1)
