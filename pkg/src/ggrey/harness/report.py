"""Verification records and their text / line-delimited renderings."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

PASS, FAIL, INFO = "PASS", "FAIL", "INFO"
KINDS = ("abs", "rel", "info")


def fmt(x):
    """17 significant digits: parses back to the same double."""
    return format(float(x), ".17g")


@dataclass(frozen=True)
class CheckRecord:
    id: str
    description: str
    computed: float
    reference: float
    tolerance: float
    kind: str = "abs"
    criterion: str = "-"
    status: str = field(default="")

    def __post_init__(self):
        if "|" in self.id or not self.id:
            raise ValueError(f"bad check id {self.id!r}")
        if self.kind not in KINDS:
            raise ValueError(f"bad check kind {self.kind!r}")
        if not self.status:
            object.__setattr__(self, "status", self._decide())

    def _decide(self):
        if self.kind == "info":
            return INFO
        err = abs(self.computed - self.reference)
        bound = self.tolerance * (abs(self.reference) if self.kind == "rel" else 1.0)
        return PASS if (math.isfinite(err) and err <= bound) else FAIL

    @property
    def error(self):
        return abs(self.computed - self.reference)

    def scaled(self, factor):
        if self.kind == "info" or factor == 1:
            return self
        return replace(self, tolerance=self.tolerance * factor, status="")

    def line(self):
        return "|".join([self.id, self.status, fmt(self.computed), fmt(self.reference), fmt(self.tolerance)])


class VerificationReport:
    def __init__(self, records=()):
        self.records = list(records)

    def extend(self, records):
        self.records.extend(records)

    def scaled(self, factor):
        return VerificationReport(r.scaled(factor) for r in self.records)

    def counts(self):
        out = {PASS: 0, FAIL: 0, INFO: 0}
        for r in self.records:
            out[r.status] += 1
        return out

    @property
    def ok(self):
        return self.counts()[FAIL] == 0

    def by_criterion(self):
        groups = {}
        for r in self.records:
            groups.setdefault(r.criterion, []).append(r)
        return groups

    def to_records(self):
        return "".join(r.line() + "\n" for r in self.records)

    def to_text(self):
        lines = []
        for r in self.records:
            tag = f"[{r.criterion}]" if r.criterion != "-" else ""
            lines.append(f"{r.status:4}  {r.id} {tag}".rstrip())
            if r.description:
                lines.append(f"      {r.description}")
            if r.kind == "info":
                lines.append(f"      value {r.computed:.12g} vs {r.reference:.12g}")
            else:
                rel = " (relative)" if r.kind == "rel" else ""
                lines.append(f"      computed {r.computed:.12g}  reference {r.reference:.12g}  "
                             f"|diff| {r.error:.3g}  tol {r.tolerance:.3g}{rel}")
        c = self.counts()
        lines.append(f"summary: {c[PASS]} passed, {c[FAIL]} failed, {c[INFO]} info")
        return "\n".join(lines) + "\n"


def parse_records(text):
    """Inverse of :meth:`VerificationReport.to_records` (descriptions are not stored)."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip():
            continue
        parts = raw.split("|")
        if len(parts) != 5:
            raise ValueError(f"line {lineno}: expected 5 '|'-separated fields")
        cid, status, comp, ref, tol = parts
        if status not in (PASS, FAIL, INFO):
            raise ValueError(f"line {lineno}: bad status {status!r}")
        out.append(CheckRecord(cid, "", float(comp), float(ref), float(tol),
                               kind="info" if status == INFO else "abs", status=status))
    return VerificationReport(out)
