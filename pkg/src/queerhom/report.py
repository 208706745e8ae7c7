"""Machine-readable verification reports.

A Report is a list of check rows, each PASS, FAIL or SKIP.  The overall
status is PASS exactly when no row FAILs (SKIP rows carry a note saying
why they did not run and never gate the status).  JSON output is canonical:
sorted keys, ASCII, newline-terminated; two runs on the same inputs differ
at most in the "timings" object.
"""
from __future__ import annotations

import json

VERSION = "0.1.0"

PASS = "PASS"
FAIL = "FAIL"
SKIP = "SKIP"


class CheckRow:
    __slots__ = ("check", "status", "expected", "computed", "note")

    def __init__(self, check, status, expected="", computed="", note=""):
        if status not in (PASS, FAIL, SKIP):
            raise ValueError("bad row status %r" % (status,))
        self.check = check
        self.status = status
        self.expected = str(expected)
        self.computed = str(computed)
        self.note = str(note)

    def to_dict(self):
        return {
            "check": self.check,
            "status": self.status,
            "expected": self.expected,
            "computed": self.computed,
            "note": self.note,
        }

    def __repr__(self):
        return "<%s %s>" % (self.status, self.check)


class Report:
    def __init__(self, scenario: str, inputs: dict):
        self.scenario = scenario
        self.inputs = dict(inputs)
        self.rows = []
        self.timings = {}
        self.version = VERSION

    def add(self, check, status, expected="", computed="", note=""):
        row = CheckRow(check, status, expected, computed, note)
        self.rows.append(row)
        return row

    def add_cmp(self, check, expected, computed, note=""):
        """PASS/FAIL row from an equality of printable values."""
        status = PASS if str(expected) == str(computed) else FAIL
        return self.add(check, status, expected, computed, note)

    def add_flag(self, check, ok: bool, note=""):
        return self.add(check, PASS if ok else FAIL, "yes", "yes" if ok else "no", note)

    def skip(self, check, note):
        return self.add(check, SKIP, note=note)

    @property
    def status(self):
        if any(r.status == FAIL for r in self.rows):
            return FAIL
        return PASS

    @property
    def exit_code(self):
        return 0 if self.status == PASS else 1

    def to_dict(self):
        return {
            "scenario": self.scenario,
            "inputs": {k: str(v) for k, v in self.inputs.items()},
            "rows": [r.to_dict() for r in self.rows],
            "status": self.status,
            "timings": {k: round(float(v), 6) for k, v in self.timings.items()},
            "version": self.version,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=True, indent=2) + "\n"

    def lines(self):
        out = ["scenario %s: %s" % (self.scenario, self.status)]
        for r in self.rows:
            bits = ["  [%s] %s" % (r.status, r.check)]
            if r.status != SKIP and (r.expected or r.computed):
                bits.append("expected=%s computed=%s" % (r.expected, r.computed))
            if r.note:
                bits.append("(%s)" % r.note)
            out.append(" ".join(bits))
        return out


def emit_report(report: Report, path: str):
    with open(path, "w", encoding="ascii") as fh:
        fh.write(report.to_json())
