"""Betti numbers of a monomial ideal, by closed formula and by homology.

``beta_q`` indexes the resolution of ``I`` itself (not ``S/I``): ``beta_0``
is the number of minimal generators.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field
from math import comb, gcd
from typing import Sequence

from .errors import EnvelopeError
from .monomial import MonomialIdeal, max_index
from .quotients import OrderedIdeal
from .taylor import build_taylor

MAX_ORACLE_GENS = 14


def binomial(a: int, q: int) -> int:
    if a < 0 or q < 0:
        raise ValueError("binomial arguments must be non-negative")
    return comb(a, q)


@dataclass(frozen=True)
class BettiTable:
    total: tuple[int, ...]
    graded: dict[tuple[int, int], int] | None = None
    multigraded: dict[tuple[int, tuple[int, ...]], int] | None = field(
        default=None, compare=False, repr=False)

    def __getitem__(self, q: int) -> int:
        return self.total[q] if 0 <= q < len(self.total) else 0

    def trimmed(self) -> tuple[int, ...]:
        """Totals without trailing zeros."""
        t = list(self.total)
        while t and t[-1] == 0:
            t.pop()
        return tuple(t)

    def graded_consistent(self) -> bool:
        if self.graded is None:
            return True
        sums = defaultdict(int)
        for (q, _), b in self.graded.items():
            sums[q] += b
        return all(sums[q] == b for q, b in enumerate(self.total)) and \
            all(q < len(self.total) for q in sums)


def exact_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals of a dense integer matrix."""
    return sparse_rank([{j: v for j, v in enumerate(row) if v} for row in matrix])


def sparse_rank(rows: Sequence[dict[int, int]]) -> int:
    """Rank over the rationals by fraction-free integer row reduction.

    Rows are ``{column: value}`` maps; the input is not modified.
    """
    rows = [r for r in rows if r]
    rank = 0
    while rows:
        # sparsest row as pivot keeps fill-in low
        k = min(range(len(rows)), key=lambda i: len(rows[i]))
        pivot_row = rows[k]
        rows[k] = rows[-1]
        rows.pop()
        col = min(pivot_row)
        p = pivot_row[col]
        rank += 1
        reduced = []
        for row in rows:
            a = row.get(col)
            if a:
                new = {j: v * p for j, v in row.items()}
                for j, v in pivot_row.items():
                    w = new.get(j, 0) - v * a
                    if w:
                        new[j] = w
                    else:
                        new.pop(j, None)
                g = 0
                for v in new.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
                row = {j: v // g for j, v in new.items()} if g > 1 else new
            if row:
                reduced.append(row)
        rows = reduced
    return rank


def betti_formula(ordered: OrderedIdeal) -> BettiTable:
    """Totals ``beta_q = sum_u C(|set(u)|, q)`` for a linear-quotients order."""
    r = ordered.ideal.r
    sizes = ordered.set_sizes
    return BettiTable(tuple(sum(binomial(a, q) for a in sizes) for q in range(r)))


def eliahou_kervaire(ideal: MonomialIdeal) -> BettiTable:
    """Totals ``beta_q = sum_u C(m(u) - 1, q)``; valid for stable ideals."""
    ms = [max_index(u) for u in ideal.generators]
    return BettiTable(tuple(sum(binomial(m - 1, q) for m in ms) for q in range(ideal.r)))


def betti_oracle(ideal: MonomialIdeal, rng: random.Random | None = None) -> BettiTable:
    """Betti numbers as homology of the Taylor complex tensored with the field.

    Unit entries of the differential survive (as their sign), all others
    vanish, and surviving entries only join subsets with equal lcm. Each
    multidegree is therefore an independent small complex; its homology is
    computed by exact ranks and summed into total-degree strands.  Passing
    ``rng`` shuffles rows and columns of every block before elimination.
    """
    if ideal.r > MAX_ORACLE_GENS:
        raise EnvelopeError(f"Betti oracle supports at most {MAX_ORACLE_GENS} generators")
    T = build_taylor(ideal)
    r = T.r
    lcms = [T.multidegree_exponents(mask) for mask in range(1 << r)]

    dims: dict[tuple[int, tuple[int, ...]], int] = defaultdict(int)
    for q in range(r):
        for mask in T.basis(q):
            dims[(q, lcms[mask])] += 1

    # Same entries as T.differential(q) restricted to unit coefficients,
    # read straight off the lcm table.
    blocks: dict[tuple[int, tuple[int, ...]], dict[int, dict[int, int]]] = {}
    for q in range(1, r):
        for col in T.basis(q):
            top = lcms[col]
            bits, s = col, 0
            while bits:
                low = bits & -bits
                row = col ^ low
                if lcms[row] == top:
                    block = blocks.setdefault((q, top), {})
                    block.setdefault(row, {})[col] = -1 if s % 2 else 1
                bits ^= low
                s += 1

    ranks: dict[tuple[int, tuple[int, ...]], int] = {}
    for key, rows in blocks.items():
        if rng is None:
            ranks[key] = sparse_rank(list(rows.values()))
        else:
            row_ids = sorted(rows)
            col_ids = sorted({c for row in rows.values() for c in row})
            rng.shuffle(row_ids)
            rng.shuffle(col_ids)
            relabel = {c: i for i, c in enumerate(col_ids)}
            ranks[key] = sparse_rank([{relabel[c]: v for c, v in rows[i].items()}
                                      for i in row_ids])

    multigraded = {}
    for (q, m), dim in dims.items():
        b = dim - ranks.get((q, m), 0) - ranks.get((q + 1, m), 0)
        if b:
            multigraded[(q, m)] = b
    graded: dict[tuple[int, int], int] = defaultdict(int)
    total = [0] * r
    for (q, m), b in multigraded.items():
        graded[(q, sum(m))] += b
        total[q] += b
    return BettiTable(tuple(total), dict(sorted(graded.items())),
                      dict(sorted(multigraded.items())))


def has_linear_resolution(ideal: MonomialIdeal) -> bool:
    """Equigenerated in degree ``d`` with every ``beta_{q,j}`` on ``j = q + d``."""
    d = ideal.common_degree()
    if d is None:
        return False
    table = betti_oracle(ideal)
    return all(j == q + d for (q, j) in table.graded)


def taylor_bound(r: int) -> tuple[int, ...]:
    return tuple(comb(r, q + 1) for q in range(r))
