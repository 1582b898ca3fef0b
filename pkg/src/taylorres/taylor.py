"""The Taylor complex of an ordered list of monomial generators.

Basis elements of homological degree ``q`` are the ``(q+1)``-subsets of the
generator positions, encoded as bitmasks (bit ``i`` is generator ``i``,
0-based) and ordered by integer value.  The differential sends a subset
``sigma = {i_0 < ... < i_q}`` to

    sum_s (-1)^s * lcm(sigma) / lcm(sigma - i_s) * (sigma - i_s)

with ``s`` running over every position ``0..q``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from math import comb
from typing import Iterator, NamedTuple, Sequence

from .errors import EnvelopeError, PreconditionError
from .monomial import Monomial, MonomialIdeal

MAX_TAYLOR_GENS = 20


class Entry(NamedTuple):
    row: int
    col: int
    sign: int
    coefficient: Monomial


@dataclass(frozen=True)
class SubsetBasisElement:
    members: frozenset[int]
    multidegree: Monomial

    @property
    def homological_degree(self) -> int:
        return len(self.members) - 1


def members(mask: int) -> list[int]:
    """0-based generator positions in ``mask``, ascending."""
    out, i = [], 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def format_subset(mask: int) -> str:
    return "{" + ",".join(str(i + 1) for i in members(mask)) + "}"


def _as_generators(gens) -> tuple[Monomial, ...]:
    if isinstance(gens, MonomialIdeal):
        return gens.generators
    return tuple(gens)


def _check_envelope(gens: Sequence[Monomial]):
    if not 1 <= len(gens) <= MAX_TAYLOR_GENS:
        raise EnvelopeError(
            f"Taylor complex needs 1..{MAX_TAYLOR_GENS} generators, got {len(gens)}")


def _check_minimal(gens: Sequence[Monomial]):
    for i, u in enumerate(gens):
        if u.is_unit():
            raise PreconditionError("the unit monomial cannot be a generator")
        for j, v in enumerate(gens):
            if i != j and u.divides(v):
                raise PreconditionError(
                    f"generator {i + 1} ({u}) divides generator {j + 1} ({v}); "
                    "minimalize the generators first")


def lcm_table(gens: Sequence[Monomial]) -> list[tuple[int, ...]]:
    """Exponent tuple of ``lcm`` for every subset bitmask (empty set -> unit)."""
    n = gens[0].n
    table: list[tuple[int, ...]] = [(0,) * n] * (1 << len(gens))
    for mask in range(1, 1 << len(gens)):
        low = mask & -mask
        g = gens[low.bit_length() - 1].exponents
        table[mask] = tuple(map(max, table[mask ^ low], g))
    return table


class TaylorComplex:
    """Taylor complex with lazily built, cached sparse differentials.

    ``differential(q)`` maps strand ``q`` to strand ``q - 1`` for
    ``1 <= q <= r - 1``; its entries are listed column by column in bitmask
    order and, within a column, by the dropped position ``s``.
    """

    def __init__(self, gens: Sequence[Monomial], *, _overrides=None):
        self.gens = tuple(gens)
        self.n = self.gens[0].n
        self.r = len(self.gens)
        self._lcm = lcm_table(self.gens)
        self._by_size: list[list[int]] = [[] for _ in range(self.r + 1)]
        for mask in range(1, 1 << self.r):
            self._by_size[mask.bit_count()].append(mask)
        self._cache: dict[int, tuple[Entry, ...]] = dict(_overrides or {})

    def multidegree(self, mask: int) -> Monomial:
        return Monomial(self._lcm[mask])

    def multidegree_exponents(self, mask: int) -> tuple[int, ...]:
        return self._lcm[mask]

    def element(self, mask: int) -> SubsetBasisElement:
        return SubsetBasisElement(frozenset(members(mask)), self.multidegree(mask))

    def basis(self, q: int) -> list[int]:
        if not 0 <= q < self.r:
            return []
        return self._by_size[q + 1]

    def rank(self, q: int) -> int:
        return len(self.basis(q))

    def ranks(self) -> tuple[int, ...]:
        return tuple(self.rank(q) for q in range(self.r))

    def differential(self, q: int) -> tuple[Entry, ...]:
        if not 1 <= q < self.r:
            raise IndexError(f"no differential d_{q} for r = {self.r}")
        if q not in self._cache:
            self._cache[q] = tuple(self._build(q))
        return self._cache[q]

    def _build(self, q: int) -> Iterator[Entry]:
        lcms = self._lcm
        for col in self._by_size[q + 1]:
            top = lcms[col]
            for s, i in enumerate(members(col)):
                row = col ^ (1 << i)
                coeff = Monomial(tuple(a - b for a, b in zip(top, lcms[row])))
                yield Entry(row, col, -1 if s % 2 else 1, coeff)

    def entries(self) -> Iterator[Entry]:
        for q in range(1, self.r):
            yield from self.differential(q)

    def replace_differential(self, q: int, entries: Sequence[Entry]) -> TaylorComplex:
        """A copy of this complex with ``d_q`` swapped out (for mutation tests)."""
        overrides = dict(self._cache)
        overrides[q] = tuple(entries)
        return TaylorComplex(self.gens, _overrides=overrides)


def build_taylor(gens) -> TaylorComplex:
    gens = _as_generators(gens)
    _check_envelope(gens)
    _check_minimal(gens)
    return TaylorComplex(gens)


def _compose_vanishes(upper: Sequence[Entry], lower: Sequence[Entry]) -> bool:
    by_col: dict[int, list[Entry]] = defaultdict(list)
    for e in lower:
        by_col[e.col].append(e)
    acc: dict[tuple[int, int, tuple[int, ...]], int] = defaultdict(int)
    for a in upper:
        for b in by_col.get(a.row, ()):
            mono = tuple(x + y for x, y in zip(a.coefficient.exponents, b.coefficient.exponents))
            acc[(a.col, b.row, mono)] += a.sign * b.sign
    return not any(acc.values())


def _augmentation_vanishes(T: TaylorComplex) -> bool:
    if T.r < 2:
        return True
    acc: dict[tuple[int, tuple[int, ...]], int] = defaultdict(int)
    for e in T.differential(1):
        u = T.gens[e.row.bit_length() - 1]
        mono = tuple(x + y for x, y in zip(e.coefficient.exponents, u.exponents))
        acc[(e.col, mono)] += e.sign
    return not any(acc.values())


def verify_complex(T: TaylorComplex) -> bool:
    """Check ``d_{q-1} d_q = 0`` for every ``q`` and ``eps d_1 = 0`` as polynomials."""
    if not _augmentation_vanishes(T):
        return False
    return all(_compose_vanishes(T.differential(q), T.differential(q - 1))
               for q in range(2, T.r))


def is_minimal(T: TaylorComplex) -> bool:
    """True iff no differential entry is a unit (sign times the monomial 1)."""
    return not any(e.sign and e.coefficient.is_unit() for e in T.entries())


def is_minimal_subset_test(gens) -> bool:
    """Matrix-free minimality: ``lcm(sigma) != lcm(sigma - s)`` for all ``sigma``, ``s``."""
    gens = _as_generators(gens)
    _check_envelope(gens)
    _check_minimal(gens)
    lcms = lcm_table(gens)
    for mask in range(3, 1 << len(gens)):
        if mask & (mask - 1) == 0:
            continue
        top = lcms[mask]
        bits = mask
        while bits:
            low = bits & -bits
            if lcms[mask ^ low] == top:
                return False
            bits ^= low

    return True


def is_minimal_fast(gens) -> bool:
    """Minimality via ``u_s`` not dividing the lcm of the other generators.

    Equivalent to the subset test: once ``lcm(sigma) = lcm(sigma - s)`` holds
    it persists for every superset of ``sigma``, so the full generator set is
    the only subset that needs checking.  No envelope on ``r``.
    """
    gens = _as_generators(gens)
    r = len(gens)
    if r == 1:
        return True
    n = gens[0].n
    # prefix/suffix lcms give lcm of all-but-one in O(r n).
    prefix = [(0,) * n]
    for u in gens:
        prefix.append(tuple(map(max, prefix[-1], u.exponents)))
    suffix = [(0,) * n]
    for u in reversed(gens):
        suffix.append(tuple(map(max, suffix[-1], u.exponents)))
    suffix.reverse()
    for s, u in enumerate(gens):
        others = tuple(map(max, prefix[s], suffix[s + 1]))
        if all(a <= b for a, b in zip(u.exponents, others)):
            return False
    return True


def expected_ranks(r: int) -> tuple[int, ...]:
    return tuple(comb(r, q + 1) for q in range(r))
