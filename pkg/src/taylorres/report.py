"""Run reports and their human / structured (JSON) / tabular (CSV) renderings."""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import asdict, dataclass, field
from typing import Iterable, Sequence

FORMATS = ("human", "structured", "tabular")
TABULAR_HEADER = ("ideal", "check", "verdict", "witness")
VERDICTS = ("pass", "fail", "skip")


def format_order(order: Sequence[int]) -> list[int]:
    """0-based generator positions as the 1-based permutation users see."""
    return [i + 1 for i in order]


def format_set(variables: Iterable[int]) -> list[str]:
    return [f"x{k}" for k in sorted(variables)]


@dataclass
class CheckRecord:
    ideal: str
    check: str
    verdict: str
    witness: str = ""
    detail: dict | None = None


@dataclass
class RunReport:
    command: dict
    records: list[CheckRecord] = field(default_factory=list)
    findings: list[dict] = field(default_factory=list)
    exhaustive: bool = True

    def counts(self) -> dict[str, dict[str, int]]:
        per: dict[str, Counter] = {}
        for rec in self.records:
            per.setdefault(rec.check, Counter())[rec.verdict] += 1
        return {check: {v: c.get(v, 0) for v in VERDICTS} for check, c in sorted(per.items())}

    @property
    def summary(self) -> dict[str, int]:
        c = Counter(rec.verdict for rec in self.records)
        return {"checked": c["pass"] + c["fail"], "passed": c["pass"],
                "failed": c["fail"], "skipped": c["skip"]}

    @property
    def ok(self) -> bool:
        return self.summary["failed"] == 0

    def failures(self) -> list[CheckRecord]:
        return [rec for rec in self.records if rec.verdict == "fail"]

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "exhaustive": self.exhaustive,
            "summary": self.summary,
            "per_check": self.counts(),
            "findings": self.findings,
            "records": [{k: v for k, v in asdict(rec).items() if v is not None}
                        for rec in self.records],
        }

    @classmethod
    def from_dict(cls, data: dict) -> RunReport:
        return cls(command=data["command"],
                   records=[CheckRecord(**rec) for rec in data["records"]],
                   findings=data["findings"], exhaustive=data["exhaustive"])


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _csv(rows: Iterable[Sequence], header: Sequence[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def emit_report(report: RunReport, fmt: str = "human") -> str:
    if fmt == "structured":
        return _json(report.to_dict())
    if fmt == "tabular":
        rows = [(r.ideal, r.check, r.verdict, r.witness) for r in report.records]
        rows += [(f.get("ideal", ""), f.get("check", ""), "finding", f.get("note", ""))
                 for f in report.findings]
        return _csv(rows, TABULAR_HEADER)
    if fmt != "human":
        raise ValueError(f"unknown format {fmt!r}")

    lines = ["command: " + " ".join(f"{k}={v}" for k, v in sorted(report.command.items()))]
    lines.append("exhaustive: " + ("yes" if report.exhaustive else "no (truncated by --limit)"))
    if report.records:
        w_ideal = max(len(r.ideal) for r in report.records)
        w_check = max(len(r.check) for r in report.records)
        lines.append("")
        lines.append(f"{'ideal':<{w_ideal}}  {'check':<{w_check}}  verdict  witness")
        for r in report.records:
            lines.append(f"{r.ideal:<{w_ideal}}  {r.check:<{w_check}}  {r.verdict:<7}  {r.witness}".rstrip())
    if report.findings:
        lines.append("")
        lines.append("findings:")
        for f in report.findings:
            lines.append(f"  [{f.get('check', '')}] ({f.get('ideal', '')}) {f.get('note', '')}")
    lines.append("")
    lines.append(f"{'check':<12} {'pass':>7} {'fail':>7} {'skip':>7}")
    for check, c in report.counts().items():
        lines.append(f"{check:<12} {c['pass']:>7} {c['fail']:>7} {c['skip']:>7}")
    s = report.summary
    lines.append(f"checked={s['checked']} passed={s['passed']} failed={s['failed']} skipped={s['skipped']}")
    return "\n".join(lines) + "\n"


def _flatten(prefix: str, value, out: list[tuple[str, str]]):
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, out)
    elif isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        for i, v in enumerate(value):
            _flatten(f"{prefix}[{i}]", v, out)
    elif isinstance(value, list):
        out.append((prefix, " ".join(str(v) for v in value)))
    else:
        out.append((prefix, "" if value is None else str(value)))


def emit_record(record: dict, fmt: str = "human") -> str:
    """Render a single-ideal command result in the requested format."""
    if fmt == "structured":
        return _json(record)
    pairs: list[tuple[str, str]] = []
    _flatten("", record, pairs)
    if fmt == "tabular":
        return _csv(pairs, ("key", "value"))
    if fmt != "human":
        raise ValueError(f"unknown format {fmt!r}")
    width = max((len(k) for k, _ in pairs), default=0)
    return "".join(f"{k:<{width}}  {v}\n" for k, v in pairs)
