"""Check records, suite aggregation and report serialization (json / csv / text)."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

SCHEMA_VERSION = "1"


@dataclass(frozen=True)
class Check:
    name: str
    inputs: dict
    expected: Any
    got: Any
    passed: bool


@dataclass
class SuiteReport:
    name: str
    checks: list = field(default_factory=list)

    def add(self, name, inputs, expected, got, passed=None):
        if passed is None:
            passed = expected == got
        self.checks.append(Check(name, inputs, expected, got, bool(passed)))

    def extend(self, other: SuiteReport):
        self.checks.extend(other.checks)

    def count(self, name=None) -> int:
        return sum(1 for c in self.checks if name is None or c.name == name)

    def passes(self, name=None) -> int:
        return sum(1 for c in self.checks if c.passed and (name is None or c.name == name))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def summary(self) -> dict:
        names = sorted({c.name for c in self.checks})
        return {n: (self.passes(n), self.count(n)) for n in names}


def exact(value):
    """Make a value json-safe without losing exactness.

    Integers and Fractions become strings ("p" or "p/q"); containers recurse.
    """
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, dict):
        return {str(k): exact(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [exact(v) for v in value]
    if hasattr(value, "to_dict"):
        return exact(value.to_dict())
    raise TypeError(f"refusing to serialize inexact value of type {type(value).__name__}")


def check_to_dict(c: Check) -> dict:
    return {
        "name": c.name,
        "inputs": exact(c.inputs),
        "expected": exact(c.expected),
        "got": exact(c.got),
        "pass": c.passed,
    }


def canonical_checks(checks) -> list[dict]:
    rows = [check_to_dict(c) for c in checks]
    rows.sort(key=lambda r: (r["name"], json.dumps(r["inputs"], sort_keys=True)))
    return rows


def build_report(command: list, config: dict, checks, elapsed_ms: int, extra: dict | None = None) -> dict:
    report = {
        "schema": SCHEMA_VERSION,
        "command": list(command),
        "config": exact(config),
        "checks": canonical_checks(checks),
        "elapsed_ms": int(elapsed_ms),
    }
    if extra:
        report["result"] = exact(extra)
    return report


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["name", "inputs", "expected", "got", "pass"])
        for r in report["checks"]:
            w.writerow([
                r["name"],
                json.dumps(r["inputs"], sort_keys=True),
                json.dumps(r["expected"], sort_keys=True),
                json.dumps(r["got"], sort_keys=True),
                "true" if r["pass"] else "false",
            ])
        return buf.getvalue()
    if fmt == "text":
        lines = []
        if "result" in report:
            for k, v in report["result"].items():
                lines.append(f"{k}: {v if isinstance(v, str) else json.dumps(v, sort_keys=True)}")
        for r in report["checks"]:
            tag = "PASS" if r["pass"] else "FAIL"
            inputs = " ".join(f"{k}={json.dumps(v)}" for k, v in sorted(r["inputs"].items()))
            lines.append(f"{tag} {r['name']} {inputs} expected={json.dumps(r['expected'])} got={json.dumps(r['got'])}")
        n_pass = sum(r["pass"] for r in report["checks"])
        lines.append(f"{n_pass}/{len(report['checks'])} checks passed ({report['elapsed_ms']} ms)")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
