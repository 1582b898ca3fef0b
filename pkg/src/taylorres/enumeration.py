"""Exhaustive, duplicate-free streams of small monomial ideals."""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

from .errors import EnvelopeError
from .monomial import Monomial, MonomialIdeal, max_index
from .quotients import is_matroidal, is_squarefree_stable

FAMILIES = ("all", "squarefree", "equigenerated", "stable", "matroidal",
            "squarefree_stable")
SQUAREFREE_FAMILIES = ("squarefree", "matroidal", "squarefree_stable")
MAX_VARS = 4
MAX_VARS_SQUAREFREE = 5
MAX_DEGREE = 5


def monomials_of_degree(n: int, d: int) -> list[Monomial]:
    """All degree-``d`` monomials in ``n`` variables, in canonical order."""
    def compositions(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    out = [Monomial(e) for e in compositions(d, n)]
    return sorted(out, key=Monomial.sort_key)


def _check_envelope(n: int, max_deg: int, family: str):
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    cap = MAX_VARS_SQUAREFREE if family in SQUAREFREE_FAMILIES else MAX_VARS
    if not 1 <= n <= cap:
        raise EnvelopeError(f"family {family!r} supports 1..{cap} variables, got {n}")
    if not 1 <= max_deg <= MAX_DEGREE:
        raise EnvelopeError(f"max degree must be in 1..{MAX_DEGREE}, got {max_deg}")


def _antichains(pool: list[Monomial], max_gens: int | None) -> Iterator[tuple[Monomial, ...]]:
    # pool is in canonical order, so only earlier picks can divide later ones.
    limit = len(pool) if max_gens is None else max_gens
    chosen: list[Monomial] = []

    def dfs(start: int):
        for i in range(start, len(pool)):
            u = pool[i]
            if any(c.divides(u) for c in chosen):
                continue
            chosen.append(u)
            yield tuple(chosen)
            if len(chosen) < limit:
                yield from dfs(i + 1)
            chosen.pop()

    yield from dfs(0)


def _stable_down_sets(level: list[Monomial], forced: frozenset[Monomial]) -> Iterator[frozenset[Monomial]]:
    """Subsets of one degree closed under ``w -> x_i w / x_m(w)`` containing ``forced``.

    Every move of ``w`` precedes ``w`` in canonical order, so deciding each
    monomial in that order needs only earlier decisions.
    """
    n = level[0].n
    moves = {}
    for w in level:
        m = max_index(w)
        base = w / Monomial.variable(n, m)
        moves[w] = [base * Monomial.variable(n, i) for i in range(1, m)]
    chosen: set[Monomial] = set()

    def dfs(i: int):
        if i == len(level):
            yield frozenset(chosen)
            return
        w = level[i]
        allowed = all(v in chosen for v in moves[w])
        if w not in forced:
            yield from dfs(i + 1)
        if allowed:
            chosen.add(w)
            yield from dfs(i + 1)
            chosen.discard(w)

    yield from dfs(0)


def _stable_ideals(n: int, max_deg: int) -> Iterator[tuple[Monomial, ...]]:
    levels = [monomials_of_degree(n, d) for d in range(1, max_deg + 1)]

    def dfs(d: int, prev: frozenset[Monomial], gens: tuple[Monomial, ...]):
        if d > max_deg:
            if gens:
                yield gens
            return
        forced = frozenset(u * Monomial.variable(n, k) for u in prev for k in range(1, n + 1))
        for part in _stable_down_sets(levels[d - 1], forced):
            new = tuple(u for u in levels[d - 1] if u in part and u not in forced)
            yield from dfs(d + 1, part, gens + new)

    yield from dfs(1, frozenset(), ())


def enumerate_ideals(n: int, max_deg: int, max_gens: int | None = None,
                     family: str = "all") -> Iterator[MonomialIdeal]:
    """Every minimal monomial ideal of the family with generators of degree
    ``1..max_deg`` and at most ``max_gens`` generators (unbounded if ``None``),
    each exactly once, in a fixed order."""
    _check_envelope(n, max_deg, family)
    if family == "stable":
        for gens in _stable_ideals(n, max_deg):
            if max_gens is None or len(gens) <= max_gens:
                yield MonomialIdeal(n, tuple(sorted(gens, key=Monomial.sort_key)))
        return

    if family in ("equigenerated", "matroidal"):
        for d in range(1, max_deg + 1):
            pool = monomials_of_degree(n, d)
            if family == "matroidal":
                pool = [u for u in pool if u.is_squarefree()]
            top = len(pool) if max_gens is None else min(max_gens, len(pool))
            for k in range(1, top + 1):
                for gens in combinations(pool, k):
                    ideal = MonomialIdeal(n, gens)
                    if family == "equigenerated" or is_matroidal(ideal):
                        yield ideal
        return

    pool = [u for d in range(1, max_deg + 1) for u in monomials_of_degree(n, d)]
    if family in SQUAREFREE_FAMILIES:
        pool = [u for u in pool if u.is_squarefree()]
    for gens in _antichains(pool, max_gens):
        ideal = MonomialIdeal(n, tuple(sorted(gens, key=Monomial.sort_key)))
        if family == "squarefree_stable" and not is_squarefree_stable(ideal):
            continue
        yield ideal
