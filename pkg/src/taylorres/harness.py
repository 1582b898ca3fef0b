"""Apply verification checks to streams of ideals and collect a :class:`RunReport`.

Each check returns ``(verdict, witness, detail, findings)``.  A check whose
hypotheses do not hold for an ideal returns ``skip``; it is never counted as
a pass.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from itertools import islice
from typing import Callable, Iterable, NamedTuple

from .betti import (MAX_ORACLE_GENS, betti_formula, betti_oracle,
                    eliahou_kervaire, taylor_bound)
from .classify import (cor23_verdict, is_thm22_form, make_thm22,
                       matroidal_product_form, squarefree_stable_product_form,
                       thm13_all_orders, thm13_verdict, thm31_verdict,
                       prop21_verdict)
from .monomial import MonomialIdeal
from .quotients import (MAX_SEARCH_GENS, find_order, is_matroidal,
                        is_squarefree_stable, is_stable, m_stats)
from .report import CheckRecord, RunReport
from .taylor import (MAX_TAYLOR_GENS, build_taylor, expected_ranks, is_minimal,
                     is_minimal_fast, is_minimal_subset_test, verify_complex)

ALL_ORDERS_MAX_GENS = 5
PERMUTATION_SEED = 20240917
PERMUTATION_RUNS = 3


class Outcome(NamedTuple):
    verdict: str
    witness: str = ""
    detail: dict | None = None
    findings: tuple[dict, ...] = ()


SKIP = Outcome("skip")


def _pass_fail(ok: bool, witness: str = "", detail=None, findings=()) -> Outcome:
    return Outcome("pass" if ok else "fail", "" if ok else witness, detail, tuple(findings))


def check_complex_dd0(ideal: MonomialIdeal) -> Outcome:
    if ideal.r > MAX_TAYLOR_GENS:
        return SKIP
    T = build_taylor(ideal)
    if not verify_complex(T):
        return _pass_fail(False, "d o d != 0")
    if T.ranks() != expected_ranks(ideal.r):
        return _pass_fail(False, f"ranks {T.ranks()}")
    by_matrix = is_minimal(T)
    by_subsets = is_minimal_subset_test(ideal)
    by_lcm = is_minimal_fast(ideal)
    return _pass_fail(by_matrix == by_subsets == by_lcm,
                      f"minimality: matrix={by_matrix} subsets={by_subsets} lcm={by_lcm}")


def check_betti_agree(ideal: MonomialIdeal) -> Outcome:
    if ideal.r > min(MAX_SEARCH_GENS, MAX_ORACLE_GENS):
        return SKIP
    ordered = find_order(ideal)
    if ordered is None:
        return SKIP
    formula = betti_formula(ordered).total
    table = betti_oracle(ideal)
    detail = {"formula": list(formula), "oracle": list(table.total)}
    ok = formula == table.total and table.graded_consistent()
    bound_ok = all(b <= t for b, t in zip(table.total, taylor_bound(ideal.r)))
    return _pass_fail(ok and bound_ok, f"formula={list(formula)} oracle={list(table.total)}", detail)


def check_thm13(ideal: MonomialIdeal) -> Outcome:
    if ideal.r > MAX_SEARCH_GENS:
        return SKIP
    ordered = find_order(ideal)
    if ordered is None:
        return SKIP
    v = thm13_verdict(ideal, ordered)
    if not v.holds:
        return _pass_fail(False, f"sizes={list(v.set_sizes)} minimal={v.taylor_minimal}")
    findings = []
    if ideal.r <= ALL_ORDERS_MAX_GENS:
        verdicts = thm13_all_orders(ideal)
        bad = [x for x in verdicts if not x.holds]
        if bad:
            return _pass_fail(False, f"order {[i + 1 for i in bad[0].order]} "
                                     f"sizes={list(bad[0].set_sizes)} minimal={bad[0].taylor_minimal}")
        if len({x.staircase for x in verdicts}) > 1:
            findings.append({"note": "staircase condition depends on the chosen order",
                             "orders": len(verdicts)})
    return _pass_fail(True, findings=findings)


def check_prop21(ideal: MonomialIdeal) -> Outcome:
    if not is_stable(ideal):
        return SKIP
    v = prop21_verdict(ideal)
    stats = m_stats(ideal)
    # proof step: every index up to max m(u) is hit by some generator
    gap_free = all(stats.get(i, 0) >= 1 for i in range(1, max(stats) + 1))
    return _pass_fail(v.all_equivalent and gap_free,
                      f"(i,ii,iii)={tuple(v[:3])} m_stats={stats}")


def check_thm22(ideal: MonomialIdeal) -> Outcome:
    if not is_stable(ideal):
        return SKIP
    minimal = is_minimal_fast(ideal)
    form = is_thm22_form(ideal)
    if minimal != (form is not None):
        return _pass_fail(False, f"minimal={minimal} form={form}")
    if form is not None:
        if make_thm22(ideal.n, form[1]) != ideal:
            return _pass_fail(False, f"round trip of a={form[1]}")
        # exponent of x_k in u_i (k < i) does not depend on i
        gens = ideal.generators
        for k in range(1, ideal.r):
            if len({u.exponent(k) for u in gens[k:]}) > 1:
                return _pass_fail(False, f"exponent of x{k} varies")
    return _pass_fail(True)


def check_cor23(ideal: MonomialIdeal) -> Outcome:
    d = ideal.common_degree()
    if d is None or d <= 1 or not is_stable(ideal):
        return SKIP
    v = cor23_verdict(ideal)
    if not v.holds:
        return _pass_fail(False, f"minimal={v.taylor_minimal} form={v.form}")
    if v.form is not None and ideal.r <= MAX_ORACLE_GENS:
        total = betti_oracle(ideal).total
        if total != taylor_bound(ideal.r):
            return _pass_fail(False, f"oracle betti {list(total)}")
    return _pass_fail(True)


def check_thm31(ideal: MonomialIdeal) -> Outcome:
    d = ideal.common_degree()
    if d is None or ideal.r > MAX_ORACLE_GENS:
        return SKIP
    table = betti_oracle(ideal)
    if not all(j == q + d for (q, j) in table.graded):
        return SKIP
    v = thm31_verdict(ideal, assume_linear=True)
    return _pass_fail(v.holds, f"minimal={v.taylor_minimal} form={v.form is not None} "
                               f"linear_quotients={v.linear_quotients}")


def check_ex33(ideal: MonomialIdeal) -> Outcome:
    if not ideal.is_squarefree() or ideal.common_degree() is None:
        return SKIP
    if not is_matroidal(ideal) or not is_minimal_fast(ideal):
        return SKIP
    form = matroidal_product_form(ideal)
    findings = []
    if form is not None and not form[0]:
        findings.append({"note": "product form with empty prefix (u = 1)"})
    return _pass_fail(form is not None, "no product form", findings=findings)


def check_ex34(ideal: MonomialIdeal) -> Outcome:
    if not ideal.is_squarefree() or ideal.common_degree() is None:
        return SKIP
    if not is_squarefree_stable(ideal) or not is_minimal_fast(ideal):
        return SKIP
    form = squarefree_stable_product_form(ideal)
    findings = []
    if form is not None and form[0] == 0:
        findings.append({"note": "product form with p = 0 (u = 1)"})
    return _pass_fail(form is not None, "not x1*...*xp*(x_{p+1},...,x_q)", findings=findings)


def check_ek(ideal: MonomialIdeal) -> Outcome:
    if ideal.r > MAX_ORACLE_GENS or not is_stable(ideal):
        return SKIP
    ek = eliahou_kervaire(ideal).total
    oracle = betti_oracle(ideal).total
    return _pass_fail(ek == oracle, f"ek={list(ek)} oracle={list(oracle)}")


def check_oracle_perm(ideal: MonomialIdeal) -> Outcome:
    if ideal.r > MAX_ORACLE_GENS:
        return SKIP
    base = betti_oracle(ideal)
    if not base.graded_consistent():
        return _pass_fail(False, "graded totals do not sum to totals")
    # seed depends only on the ideal text, so results do not depend on stream order
    rng = random.Random(f"{PERMUTATION_SEED}:{ideal}")
    for _ in range(PERMUTATION_RUNS):
        t = betti_oracle(ideal, rng=rng)
        if t.total != base.total or t.graded != base.graded or not t.graded_consistent():
            return _pass_fail(False, f"permuted run gave {list(t.total)}")
    return _pass_fail(True)


CHECKS: dict[str, Callable[[MonomialIdeal], Outcome]] = {
    "complex_dd0": check_complex_dd0,
    "betti_agree": check_betti_agree,
    "thm13": check_thm13,
    "prop21": check_prop21,
    "thm22": check_thm22,
    "cor23": check_cor23,
    "thm31": check_thm31,
    "ex33": check_ex33,
    "ex34": check_ex34,
    "ek": check_ek,
    "oracle_perm": check_oracle_perm,
}


def _run_one(args: tuple[MonomialIdeal, tuple[str, ...]]) -> list[tuple[str, Outcome]]:
    ideal, checks = args
    return [(name, CHECKS[name](ideal)) for name in checks]


def run_checks(stream: Iterable[MonomialIdeal], checks: Iterable[str],
               command: dict | None = None, limit: int | None = None,
               jobs: int = 1) -> RunReport:
    checks = tuple(checks)
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}")
    command = dict(command or {})
    command["checks"] = ",".join(checks)
    report = RunReport(command=command)
    if limit is not None:
        stream = iter(stream)
        items = list(islice(stream, limit))
        report.exhaustive = next(stream, None) is None
        command["limit"] = limit
    else:
        items = stream

    if jobs > 1:
        items = list(items)
        with ProcessPoolExecutor(jobs) as pool:
            pairs = list(zip(items, pool.map(_run_one, [(i, checks) for i in items],
                                             chunksize=64)))
    else:
        pairs = ((ideal, _run_one((ideal, checks))) for ideal in items)

    for ideal, outcomes in pairs:
        text = str(ideal)
        for name, out in outcomes:
            report.records.append(CheckRecord(text, name, out.verdict, out.witness, out.detail))
            for f in out.findings:
                report.findings.append({"ideal": text, "check": name, **f})
    return report
