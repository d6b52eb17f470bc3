"""Summaries of sweep records: per-check counts and counterexample lists."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field

from .checks import CheckRegistry, Severity, default_registry
from .sweep import SweepRecord


@dataclass
class Discrepancy:
    check: str
    severity: str
    key: str
    n: int
    m: int
    ec: str
    certificate: list[list[int]]

    def to_dict(self) -> dict:
        return self.__dict__.copy()


@dataclass
class SweepReport:
    counts: dict[str, Counter] = field(default_factory=dict)
    discrepancies: list[Discrepancy] = field(default_factory=list)
    records: int = 0
    interval_only: int = 0

    @property
    def assert_failures(self) -> list[Discrepancy]:
        return [d for d in self.discrepancies if d.severity == Severity.ASSERT.value]

    def text(self) -> str:
        lines = [f"records: {self.records} (interval only: {self.interval_only})"]
        width = max((len(n) for n in self.counts), default=10)
        lines.append(f"{'check':<{width}}  pass  fail  skip")
        for name, c in self.counts.items():
            lines.append(f"{name:<{width}}  {c['pass']:>4}  {c['fail']:>4}  {c['skip']:>4}")
        if self.discrepancies:
            lines.append("counterexamples:")
            for d in self.discrepancies:
                lines.append(f"  [{d.severity}] {d.check}: key={d.key} n={d.n} m={d.m} EC={d.ec} cert={d.certificate}")
        else:
            lines.append("counterexamples: none")
        return "\n".join(lines)

    def discrepancy_json(self) -> str:
        return json.dumps([d.to_dict() for d in self.discrepancies], indent=1)


def report(records: list[SweepRecord], registry: CheckRegistry | None = None) -> SweepReport:
    registry = registry or default_registry()
    rep = SweepReport(records=len(records))
    severities = {c.name: c.severity.value for c in registry.checks}
    for name in severities:
        rep.counts[name] = Counter(**{"pass": 0, "fail": 0, "skip": 0})
    for rec in records:
        if rec.ec_lo is not None and not rec.exact:
            rep.interval_only += 1
        for name, status in rec.checks.items():
            bucket = "skip" if status.startswith("skipped") else status
            rep.counts.setdefault(name, Counter())[bucket] += 1
            if status == "fail":
                ec = str(rec.ec_lo) if rec.exact else f"[{rec.ec_lo},{rec.ec_hi}]"
                rep.discrepancies.append(
                    Discrepancy(name, severities.get(name, "report"), rec.key, rec.n, rec.m, ec, rec.certificate)
                )
    return rep
