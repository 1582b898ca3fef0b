"""Recognizers and verdicts for the minimal-Taylor classification results.

Every verdict computes both sides of a biconditional independently and
reports whether they agree; none of them assume the statement they check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .betti import MAX_ORACLE_GENS, BettiTable, betti_oracle, has_linear_resolution
from .errors import PreconditionError
from .monomial import (Monomial, MonomialIdeal, canonical_ideal, gcd_all,
                       max_index)
from .quotients import (MAX_SEARCH_GENS, OrderedIdeal, all_orders, find_order,
                        is_matroidal, is_squarefree_stable, is_stable, m_stats)
from .taylor import is_minimal_fast


def is_staircase(sizes: Sequence[int]) -> bool:
    """Colon set sizes are exactly ``0, 1, ..., r-1``."""
    return tuple(sizes) == tuple(range(len(sizes)))


class Thm13Verdict(NamedTuple):
    order: tuple[int, ...]
    set_sizes: tuple[int, ...]
    taylor_minimal: bool
    staircase: bool

    @property
    def holds(self) -> bool:
        return self.taylor_minimal == self.staircase


def thm13_verdict(ideal: MonomialIdeal, ordered: OrderedIdeal | None = None) -> Thm13Verdict:
    """Minimal Taylor resolution versus colon set sizes ``0..r-1`` for one order."""
    if ordered is None:
        ordered = find_order(ideal)
        if ordered is None:
            raise PreconditionError(f"({ideal}) has no linear-quotients order")
    sizes = ordered.set_sizes
    return Thm13Verdict(ordered.order, sizes, is_minimal_fast(ideal), is_staircase(sizes))


def thm13_all_orders(ideal: MonomialIdeal) -> list[Thm13Verdict]:
    minimal = is_minimal_fast(ideal)
    return [Thm13Verdict(o.order, o.set_sizes, minimal, is_staircase(o.set_sizes))
            for o in all_orders(ideal)]


class Prop21Verdict(NamedTuple):
    cond_i: bool
    cond_ii: bool
    cond_iii: bool

    @property
    def all_equivalent(self) -> bool:
        return self.cond_i == self.cond_ii == self.cond_iii


def prop21_verdict(ideal: MonomialIdeal) -> Prop21Verdict:
    if not is_stable(ideal):
        raise PreconditionError(f"({ideal}) is not stable")
    r = ideal.r
    stats = m_stats(ideal)
    cond_i = is_minimal_fast(ideal)
    cond_ii = max(stats) == r
    cond_iii = all(stats.get(i, 0) == 1 for i in range(1, r + 1)) and max(stats) <= r
    return Prop21Verdict(cond_i, cond_ii, cond_iii)


def make_thm22(n: int, a: Sequence[int]) -> MonomialIdeal:
    """Generators ``u_i = x_i * prod_{k <= i} x_k^{a_k}`` for ``i = 1..r``."""
    r = len(a)
    if not 1 <= r <= n:
        raise PreconditionError(f"need 1 <= r <= n, got r={r}, n={n}")
    if any(x < 0 for x in a):
        raise ValueError("exponents must be non-negative")
    gens = []
    for i in range(1, r + 1):
        exps = [0] * n
        exps[:i] = a[:i]
        exps[i - 1] += 1
        gens.append(Monomial(tuple(exps)))
    ideal = canonical_ideal(n, gens)
    assert ideal.generators == tuple(gens), "family is not in canonical order"
    assert is_stable(ideal), f"({ideal}) is not stable"
    assert is_minimal_fast(ideal), f"({ideal}) has a non-minimal Taylor resolution"
    return ideal


def is_thm22_form(ideal: MonomialIdeal) -> tuple[int, tuple[int, ...]] | None:
    """``(r, a)`` with ``ideal == make_thm22(n, a)``, or ``None``."""
    r, n = ideal.r, ideal.n
    if r == 0 or r > n:
        return None
    last = ideal.generators[-1]
    if max_index(last) != r:
        return None
    a = list(last.exponents[:r])
    a[r - 1] -= 1
    gens = []
    for i in range(1, r + 1):
        exps = [0] * n
        exps[:i] = a[:i]
        exps[i - 1] += 1
        gens.append(Monomial(tuple(exps)))
    if tuple(gens) != ideal.generators:
        return None
    return r, tuple(a)


def is_cor23_form(ideal: MonomialIdeal) -> int | None:
    """``r`` when the ideal is ``x1^(d-1) * (x1, ..., xr)``, else ``None``."""
    d = ideal.common_degree()
    if d is None or ideal.r > ideal.n:
        return None
    n = ideal.n
    expected = []
    for i in range(1, ideal.r + 1):
        exps = [0] * n
        exps[0] = d - 1
        exps[i - 1] += 1
        expected.append(Monomial(tuple(exps)))
    return ideal.r if tuple(expected) == ideal.generators else None


class AgreementVerdict(NamedTuple):
    taylor_minimal: bool
    form: object

    @property
    def holds(self) -> bool:
        return self.taylor_minimal == (self.form is not None)


def cor23_verdict(ideal: MonomialIdeal) -> AgreementVerdict:
    d = ideal.common_degree()
    if d is None or d <= 1 or not is_stable(ideal):
        raise PreconditionError(
            f"({ideal}) must be stable and equigenerated in degree > 1")
    return AgreementVerdict(is_minimal_fast(ideal), is_cor23_form(ideal))


def is_thm31_form(ideal: MonomialIdeal) -> tuple[Monomial, frozenset[int]] | None:
    """``(u, {i_1..i_k})`` with ``ideal == u * (x_i1, ..., x_ik)``, else ``None``.

    A single generator ``w`` is read as ``(w / x_m(w)) * (x_m(w))``.
    """
    gens = ideal.generators
    if not gens:
        return None
    n = ideal.n
    if len(gens) == 1:
        m = max_index(gens[0])
        return gens[0] / Monomial.variable(n, m), frozenset([m])
    g = gcd_all(gens)
    variables = set()
    for u in gens:
        q = u / g
        if not q.is_variable():
            return None
        variables |= q.support
    if len(variables) != len(gens):
        return None
    return g, frozenset(variables)


class Thm31Verdict(NamedTuple):
    taylor_minimal: bool
    form: tuple[Monomial, frozenset[int]] | None
    linear_quotients: bool | None

    @property
    def holds(self) -> bool:
        if self.taylor_minimal != (self.form is not None):
            return False
        return self.form is None or bool(self.linear_quotients)


def thm31_verdict(ideal: MonomialIdeal, assume_linear: bool = False) -> Thm31Verdict:
    """Minimal Taylor versus the ``u * (variables)`` form, for linear resolutions.

    ``assume_linear`` skips re-running the oracle when the caller already
    established the linear resolution.
    """
    if not assume_linear and not has_linear_resolution(ideal):
        raise PreconditionError(f"({ideal}) does not have a linear resolution")
    form = is_thm31_form(ideal)
    lq = find_order(ideal) is not None if form is not None else None
    return Thm31Verdict(is_minimal_fast(ideal), form, lq)


def matroidal_product_form(ideal: MonomialIdeal) -> tuple[frozenset[int], frozenset[int]] | None:
    """``(prefix vars, exchange vars)`` for ``x_I * (x_j : j in J)`` with disjoint ``I``, ``J``."""
    if not ideal.is_squarefree():
        return None
    form = is_thm31_form(ideal)
    if form is None:
        return None
    u, variables = form
    if not u.is_squarefree() or u.support & variables:
        return None
    return u.support, variables


def squarefree_stable_product_form(ideal: MonomialIdeal) -> tuple[int, int] | None:
    """``(p, q)`` for ``x1*...*xp * (x_{p+1}, ..., x_q)``, else ``None``.

    ``p = 0`` (empty prefix product) is accepted.
    """
    gens = ideal.generators
    if not gens or not ideal.is_squarefree():
        return None
    if len(gens) == 1:
        top = max_index(gens[0])
        if gens[0].support != frozenset(range(1, top + 1)):
            return None
        return top - 1, top
    form = is_thm31_form(ideal)
    if form is None:
        return None
    u, variables = form
    p = u.degree
    if not u.is_squarefree() or u.support != frozenset(range(1, p + 1)):
        return None
    q = p + len(variables)
    if variables != frozenset(range(p + 1, q + 1)):
        return None
    return p, q


@dataclass
class ClassificationReport:
    ideal: MonomialIdeal
    taylor_minimal: bool
    stable: bool
    m_stats: dict[int, int]
    linear_quotients: OrderedIdeal | None = None
    set_sizes: tuple[int, ...] | None = None
    thm22_form: tuple[int, tuple[int, ...]] | None = None
    thm31_form: tuple[Monomial, frozenset[int]] | None = None
    linear_resolution: bool | None = None
    betti: BettiTable | None = None
    matroidal: bool | None = None
    squarefree_stable: bool | None = None
    absent: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        from .report import format_order, format_set

        out: dict = {
            "ideal": str(self.ideal),
            "vars": self.ideal.n,
            "generators": self.ideal.r,
            "taylor_minimal": self.taylor_minimal,
            "stable": self.stable,
            "m_stats": {str(k): v for k, v in self.m_stats.items()},
        }
        if "linear_quotients" not in self.absent:
            lq = self.linear_quotients
            out["linear_quotients"] = None if lq is None else {
                "order": format_order(lq.order),
                "sets": [format_set(s) for s in lq.sets],
            }
            out["set_sizes"] = list(self.set_sizes) if self.set_sizes else None
        out["thm22_form"] = None if self.thm22_form is None else {
            "r": self.thm22_form[0], "a": list(self.thm22_form[1])}
        out["thm31_form"] = None if self.thm31_form is None else {
            "u": str(self.thm31_form[0]),
            "variables": sorted(self.thm31_form[1])}
        for name in ("linear_resolution", "matroidal", "squarefree_stable"):
            if name not in self.absent:
                out[name] = getattr(self, name)
        if self.betti is not None:
            out["betti"] = list(self.betti.total)
        return out


def classify(ideal: MonomialIdeal) -> ClassificationReport:
    """Every applicable verdict for one ideal; inapplicable fields are listed
    in ``absent`` rather than reported as false."""
    report = ClassificationReport(
        ideal=ideal,
        taylor_minimal=is_minimal_fast(ideal),
        stable=is_stable(ideal),
        m_stats=m_stats(ideal),
        thm22_form=is_thm22_form(ideal),
        thm31_form=is_thm31_form(ideal),
    )
    if ideal.r <= MAX_SEARCH_GENS:
        lq = find_order(ideal)
        report.linear_quotients = lq
        report.set_sizes = lq.set_sizes if lq is not None else None
    else:
        report.absent.append("linear_quotients")
    if ideal.r <= MAX_ORACLE_GENS:
        report.betti = betti_oracle(ideal)
        d = ideal.common_degree()
        report.linear_resolution = d is not None and all(
            j == q + d for (q, j) in report.betti.graded)
    else:
        report.absent.append("linear_resolution")
    if ideal.is_squarefree():
        report.squarefree_stable = is_squarefree_stable(ideal)
        if ideal.common_degree() is not None:
            report.matroidal = is_matroidal(ideal)
        else:
            report.absent.append("matroidal")
    else:
        report.absent += ["matroidal", "squarefree_stable"]
    return report
