import csv
import io
import json
from itertools import permutations

import pytest

from taylorres.enumeration import enumerate_ideals
from taylorres.harness import CHECKS, run_checks
from taylorres.quotients import check_order
from taylorres.report import TABULAR_HEADER, CheckRecord, RunReport, emit_report


def stream():
    return enumerate_ideals(2, 2, 3)


def test_complex_check_over_small_stream():
    rep = run_checks(stream(), ["complex_dd0"])
    assert rep.summary["failed"] == 0
    assert rep.summary["checked"] == sum(1 for _ in stream())


def test_betti_agree_skips_exactly_the_ideals_without_order():
    no_order = sum(1 for I in stream()
                   if not any(check_order(I, o) for o in permutations(range(I.r))))
    rep = run_checks(stream(), ["betti_agree"])
    assert rep.summary["failed"] == 0
    assert rep.summary["skipped"] == no_order > 0


def test_thm22_over_stable_stream():
    rep = run_checks(enumerate_ideals(3, 3, None, "stable"), ["thm22"])
    assert rep.summary["failed"] == 0 and rep.summary["skipped"] == 0


def test_unknown_check():
    with pytest.raises(ValueError):
        run_checks(stream(), ["thm99"])


def test_limit_marks_report_non_exhaustive():
    rep = run_checks(stream(), ["complex_dd0"], limit=3)
    assert not rep.exhaustive and len(rep.records) == 3
    rep = run_checks(stream(), ["complex_dd0"], limit=10_000)
    assert rep.exhaustive


def test_parallel_matches_sequential():
    a = run_checks(stream(), list(CHECKS), jobs=1)
    b = run_checks(stream(), list(CHECKS), jobs=2)
    assert emit_report(a, "structured") == emit_report(b, "structured")


def test_structured_output_is_deterministic_and_round_trips():
    a = emit_report(run_checks(stream(), ["betti_agree", "thm13"]), "structured")
    b = emit_report(run_checks(stream(), ["betti_agree", "thm13"]), "structured")
    assert a == b
    data = json.loads(a)
    again = RunReport.from_dict(data)
    assert again.summary == data["summary"]
    assert emit_report(again, "structured") == a


def test_empty_report():
    rep = RunReport(command={})
    assert rep.summary == {"checked": 0, "passed": 0, "failed": 0, "skipped": 0}
    assert emit_report(rep, "tabular") == ",".join(TABULAR_HEADER) + "\n"
    assert "checked=0 passed=0 failed=0 skipped=0" in emit_report(rep, "human")
    assert json.loads(emit_report(rep, "structured"))["records"] == []


def test_formats_carry_the_same_records():
    rep = run_checks(stream(), ["complex_dd0", "betti_agree"])
    rep.records.append(CheckRecord("x1^9", "thm13", "fail", "made up"))
    rows = list(csv.reader(io.StringIO(emit_report(rep, "tabular"))))
    assert tuple(rows[0]) == TABULAR_HEADER
    assert [tuple(r) for r in rows[1:]] == [(r.ideal, r.check, r.verdict, r.witness)
                                          for r in rep.records]
    human = emit_report(rep, "human")
    assert "made up" in human and "failed=1" in human
    assert not rep.ok and rep.failures()[0].ideal == "x1^9"
    with pytest.raises(ValueError):
        emit_report(rep, "xml")
