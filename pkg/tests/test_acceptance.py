"""Exit criteria over the exhaustive enumeration streams.

Each test prints a single ``ACCEPT <n> PASS|FAIL ...`` line; the lines are
also repeated in the pytest terminal summary.  Tolerances are exact: every
criterion demands zero failures.  Criterion 1 additionally pins a wall-clock
budget of 60 s.

Run standalone with ``python -m tests.test_acceptance``.
"""

from __future__ import annotations

import time
from itertools import chain, product

import pytest

from taylorres.betti import betti_formula, betti_oracle, taylor_bound
from taylorres.classify import is_cor23_form, make_thm22
from taylorres.enumeration import enumerate_ideals
from taylorres.harness import PERMUTATION_RUNS, PERMUTATION_SEED, run_checks
from taylorres.monomial import Monomial, canonical_ideal
from taylorres.quotients import find_order, is_stable
from taylorres.taylor import build_taylor, is_minimal, is_minimal_fast

pytestmark = pytest.mark.acceptance

RUNTIME_BUDGET_S = 60.0
LINES: list[str] = []


def general_and_squarefree():
    """n <= 3, degree <= 2, at most 4 generators; then squarefree n <= 5, at most 5."""
    general = (enumerate_ideals(n, 2, 4) for n in range(1, 4))
    squarefree = (enumerate_ideals(n, n, 5, "squarefree") for n in range(1, 6))
    return chain(chain.from_iterable(general), chain.from_iterable(squarefree))


def stable_stream():
    return chain.from_iterable(enumerate_ideals(n, 3, family="stable") for n in range(1, 5))


def equigenerated_stream():
    return chain.from_iterable(enumerate_ideals(n, 3, 5, "equigenerated") for n in range(1, 5))


def record(number: int, ok: bool, text: str) -> bool:
    line = f"ACCEPT {number} {'PASS' if ok else 'FAIL'} {text}"
    LINES.append(line)
    print(line)
    return ok


def describe(report) -> str:
    s = report.summary
    worst = "; ".join(f"{r.ideal}: {r.check} {r.witness}" for r in report.failures()[:3])
    return (f"checked={s['checked']} failed={s['failed']} skipped={s['skipped']}"
            + (f" first failures: {worst}" if worst else ""))


def test_criterion_1_complex_validity():
    start = time.perf_counter()
    report = run_checks(general_and_squarefree(), ["complex_dd0"])
    elapsed = time.perf_counter() - start
    ok = report.ok and report.summary["checked"] > 0 and elapsed <= RUNTIME_BUDGET_S
    assert record(1, ok, f"d o d = 0 and ranks C(r, q+1): {describe(report)} "
                         f"time={elapsed:.1f}s budget={RUNTIME_BUDGET_S:.0f}s")


def test_criterion_2_formula_matches_oracle():
    report = run_checks(general_and_squarefree(), ["betti_agree"])
    assert record(2, report.ok, f"formula totals = oracle totals: {describe(report)}")


def test_criterion_3_minimality_iff_staircase():
    report = run_checks(general_and_squarefree(), ["thm13"])
    order_dependent = len(report.findings)
    assert record(3, report.ok, f"minimal <=> set sizes 0..r-1: {describe(report)} "
                                f"order-dependence findings={order_dependent}")


def test_criterion_4_stable_conditions_agree():
    report = run_checks(stable_stream(), ["prop21"])
    assert record(4, report.ok, f"three stable conditions agree: {describe(report)}")


def test_criterion_5_stable_minimal_family():
    report = run_checks(stable_stream(), ["thm22"])
    bad = []
    built = 0
    for n in range(1, 5):
        for r in range(1, n + 1):
            for a in product(range(3), repeat=r):
                try:
                    I = make_thm22(n, a)
                except AssertionError as exc:
                    bad.append(str(exc))
                    continue
                built += 1
                if not (is_stable(I) and is_minimal(build_taylor(I))):
                    bad.append(str(I))
    ok = report.ok and not bad
    assert record(5, ok, f"stable: minimal <=> family form: {describe(report)}; "
                         f"constructed={built} bad={len(bad)}")


def test_criterion_6_equigenerated_stable_minimal():
    n = 4
    bad = []
    others = 0
    for d in (2, 3, 4):
        for r in range(1, 5):
            gens = []
            for i in range(1, r + 1):
                e = [0] * n
                e[0] = d - 1
                e[i - 1] += 1
                gens.append(Monomial(tuple(e)))
            I = canonical_ideal(n, gens)
            want = taylor_bound(r)
            formula = betti_formula(find_order(I)).total
            oracle = betti_oracle(I).total
            if not (formula == oracle == want and is_minimal_fast(I)):
                bad.append(f"{I}: formula={formula} oracle={oracle}")
        for I in enumerate_ideals(n, d, family="stable"):
            if I.common_degree() != d or is_cor23_form(I) is not None:
                continue
            others += 1
            if is_minimal_fast(I):
                bad.append(f"{I} is minimal")
    assert record(6, not bad, f"x1^(d-1)*(x1..xr) betti = C(r, q+1), "
                              f"other stable equigenerated not minimal={others}; "
                              f"failures={len(bad)} {bad[:3]}")


def test_criterion_7_linear_resolution_minimal():
    report = run_checks(equigenerated_stream(), ["thm31"])
    assert record(7, report.ok, f"linear resolution: minimal <=> u*(variables): "
                                f"{describe(report)}")


def test_criterion_8_fixtures_and_product_forms():
    bad = []
    n = 4
    fixtures = 0
    for p, q, k in product((1, 2), (1, 2), (2, 3)):
        gens = []
        for i in range(1, k + 1):
            e = [0] * n
            e[0] += p
            e[k] += q
            e[i - 1] += 1
            gens.append(Monomial(tuple(e)))
        I = canonical_ideal(n, gens)
        fixtures += 1
        if is_stable(I) or find_order(I) is None or not is_minimal(build_taylor(I)):
            bad.append(str(I))
    streams = chain(
        (enumerate_ideals(m, m, 5, "squarefree") for m in range(1, 6)),
        (enumerate_ideals(m, m, family="matroidal") for m in range(1, 6)),
    )
    report = run_checks(chain.from_iterable(streams), ["ex33", "ex34"])
    per = report.counts()
    text = (f"fixtures={fixtures} bad={len(bad)}; "
            f"matroidal fail={per['ex33']['fail']} pass={per['ex33']['pass']}; "
            f"squarefree stable fail={per['ex34']['fail']} pass={per['ex34']['pass']}; "
            f"{describe(report)}")
    ok = report.ok and not bad
    assert record(8, ok, text)


def test_criterion_9_oracle_permutation_invariance():
    report = run_checks(general_and_squarefree(), ["oracle_perm"])
    assert record(9, report.ok, f"seed={PERMUTATION_SEED} runs={PERMUTATION_RUNS}: "
                                f"{describe(report)}")


if __name__ == "__main__":
    import sys
    results = []
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
                results.append(True)
            except AssertionError:
                results.append(False)
    sys.exit(0 if all(results) else 1)
