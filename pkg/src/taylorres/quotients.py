"""Linear-quotient orders, colon sets, and the stable / squarefree stable /
matroidal predicates.

Generator positions in an order are 0-based indices into
``ideal.generators``; variable indices inside colon sets are 1-based.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import EnvelopeError, PreconditionError
from .monomial import (Monomial, MonomialIdeal, colon_monomial, contains,
                       max_index, minimalize)

MAX_SEARCH_GENS = 12


@dataclass(frozen=True)
class OrderedIdeal:
    ideal: MonomialIdeal
    order: tuple[int, ...]
    sets: tuple[frozenset[int], ...]

    @property
    def ordered_generators(self) -> tuple[Monomial, ...]:
        return tuple(self.ideal.generators[i] for i in self.order)

    @property
    def set_sizes(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.sets)

    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True)
class OrderFailure:
    """``check_order`` result when some prefix colon is not variable-generated.

    ``position`` is 0-based within the order; ``witness`` is a minimal colon
    generator of degree at least 2.
    """

    ideal: MonomialIdeal
    order: tuple[int, ...]
    position: int
    witness: Monomial

    def __bool__(self) -> bool:
        return False


def prefix_colon_gens(prefix: Sequence[Monomial], u: Monomial) -> MonomialIdeal:
    """Minimal generators of ``(prefix) : u``; the zero ideal for an empty prefix."""
    if not prefix:
        return MonomialIdeal.zero(u.n)
    if any(p.divides(u) for p in prefix):
        raise PreconditionError(f"{u} is already in the prefix ideal")
    return minimalize(colon_monomial(p, u) for p in prefix)


def _colon_variables(colon: MonomialIdeal) -> frozenset[int] | Monomial:
    """Variable set if ``colon`` is generated by variables, else a bad generator."""
    out = set()
    for g in colon.generators:
        if not g.is_variable():
            return g
        out |= g.support
    return frozenset(out)


def check_order(ideal: MonomialIdeal, order: Sequence[int]) -> OrderedIdeal | OrderFailure:
    order = tuple(order)
    if sorted(order) != list(range(ideal.r)):
        raise ValueError(f"{order} is not a permutation of 0..{ideal.r - 1}")
    gens = ideal.generators
    sets = []
    for j, idx in enumerate(order):
        colon = prefix_colon_gens([gens[i] for i in order[:j]], gens[idx])
        got = _colon_variables(colon)
        if isinstance(got, Monomial):
            return OrderFailure(ideal, order, j, got)
        sets.append(got)
    return OrderedIdeal(ideal, order, tuple(sets))


def _search(ideal: MonomialIdeal, first_only: bool) -> Iterator[OrderedIdeal]:
    gens = ideal.generators
    r = ideal.r
    # The colon at each step depends only on the prefix *set*, so colon
    # results and dead prefix sets are memoized by bitmask.
    colons: dict[tuple[int, int], frozenset[int] | Monomial] = {}
    dead: set[int] = set()

    def colon(prefix_mask: int, idx: int) -> frozenset[int] | Monomial:
        key = (prefix_mask, idx)
        if key not in colons:
            prefix = [gens[i] for i in range(r) if prefix_mask >> i & 1]
            colons[key] = _colon_variables(prefix_colon_gens(prefix, gens[idx]))
        return colons[key]

    def dfs(prefix: list[int], sets: list[frozenset[int]], mask: int) -> Iterator[OrderedIdeal]:
        if len(prefix) == r:
            yield OrderedIdeal(ideal, tuple(prefix), tuple(sets))
            return
        if mask in dead:
            return
        found = False
        for idx in range(r):
            if mask >> idx & 1:
                continue
            got = colon(mask, idx)
            if isinstance(got, Monomial):
                continue
            prefix.append(idx)
            sets.append(got)
            for result in dfs(prefix, sets, mask | 1 << idx):
                found = True
                yield result
                if first_only:
                    break
            prefix.pop()
            sets.pop()
            if found and first_only:
                return
        if not found:
            dead.add(mask)

    yield from dfs([], [], 0)


def find_order(ideal: MonomialIdeal) -> OrderedIdeal | None:
    """First linear-quotients order in canonical candidate order, or ``None``.

    The search is exhaustive: ``None`` means no order exists.
    """
    if ideal.r > MAX_SEARCH_GENS:
        raise EnvelopeError(f"order search supports at most {MAX_SEARCH_GENS} generators")
    return next(_search(ideal, first_only=True), None)


def all_orders(ideal: MonomialIdeal) -> Iterator[OrderedIdeal]:
    """Every linear-quotients order, in lexicographic order of the permutation."""
    if ideal.r > MAX_SEARCH_GENS:
        raise EnvelopeError(f"order search supports at most {MAX_SEARCH_GENS} generators")
    yield from _search(ideal, first_only=False)


def deepest_failure(ideal: MonomialIdeal) -> OrderFailure:
    """Explain a missing order: the longest greedy valid prefix and what blocks it."""
    gens = ideal.generators
    prefix: list[int] = []
    while True:
        remaining = [i for i in range(ideal.r) if i not in prefix]
        nxt = None
        for idx in remaining:
            colon = prefix_colon_gens([gens[i] for i in prefix], gens[idx])
            if not isinstance(_colon_variables(colon), Monomial):
                nxt = idx
                break
        if nxt is None or len(prefix) + 1 == ideal.r:
            break
        prefix.append(nxt)
    result = check_order(ideal, prefix + [i for i in range(ideal.r) if i not in prefix])
    if isinstance(result, OrderFailure):
        return result
    raise ValueError(f"{ideal} has linear quotients")


def is_stable(ideal: MonomialIdeal) -> bool:
    """Stable exchange ``x_i * u / x_m(u)`` checked on the minimal generators."""
    n = ideal.n
    for u in ideal.generators:
        m = max_index(u)
        base = u / Monomial.variable(n, m)
        for i in range(1, m):
            if not contains(ideal, base * Monomial.variable(n, i)):
                return False
    return True


def is_squarefree_stable(ideal: MonomialIdeal) -> bool:
    if not ideal.is_squarefree():
        raise PreconditionError("squarefree stability needs squarefree generators")
    n = ideal.n
    for u in ideal.generators:
        m = max_index(u)
        base = u / Monomial.variable(n, m)
        for i in range(1, m):
            if u.exponent(i) == 0 and not contains(ideal, base * Monomial.variable(n, i)):
                return False
    return True


def is_matroidal(ideal: MonomialIdeal) -> bool:
    if not ideal.is_squarefree() or ideal.common_degree() is None:
        raise PreconditionError("matroidal needs squarefree equigenerated generators")
    n = ideal.n
    gens = set(ideal.generators)
    for u in ideal.generators:
        for v in ideal.generators:
            for i in range(1, n + 1):
                if u.exponent(i) <= v.exponent(i):
                    continue
                base = u / Monomial.variable(n, i)
                if not any(u.exponent(j) < v.exponent(j)
                           and base * Monomial.variable(n, j) in gens
                           for j in range(1, n + 1)):
                    return False
    return True


def stable_canonical_sets(ideal: MonomialIdeal) -> OrderedIdeal:
    """Colon sets ``{1..m(u)-1}`` under the canonical order of a stable ideal.

    Cross-checked against ``check_order``; an ``AssertionError`` would mean
    either a bug or a stable ideal violating the set formula.
    """
    if not is_stable(ideal):
        raise PreconditionError(f"({ideal}) is not stable")
    order = tuple(range(ideal.r))
    sets = tuple(frozenset(range(1, max_index(u))) for u in ideal.generators)
    checked = check_order(ideal, order)
    assert isinstance(checked, OrderedIdeal) and checked.sets == sets, (
        f"canonical order of stable ideal ({ideal}) gives {checked}")
    return OrderedIdeal(ideal, order, sets)


def m_stats(ideal: MonomialIdeal) -> dict[int, int]:
    """Number of minimal generators with each value of ``max_index``."""
    return dict(sorted(Counter(max_index(u) for u in ideal.generators).items()))
