"""Check records and the machine-readable verification report."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

TOOL = "quadsquares"


@dataclass(frozen=True)
class Check:
    """One verified identity: its residual, the tolerance, and whether it held.

    Residuals in suites are scale-relative (divided by the polygon scale, or
    its square for areas) so they aggregate across instances.
    """

    name: str
    residual: float
    tolerance: float
    detail: dict = field(default_factory=dict)
    anchor: str = ""
    aggregate: str = "max"

    @property
    def passed(self) -> bool:
        return math.isfinite(self.residual) and self.residual <= self.tolerance


def aggregate(checks):
    """Combine repeated checks by name: max residual, or mean for rate-style checks."""
    groups = {}
    for c in checks:
        groups.setdefault(c.name, []).append(c)
    out = []
    for name, cs in groups.items():
        first = cs[0]
        values = [c.residual for c in cs]
        if any(not math.isfinite(v) for v in values):
            value = math.inf
        elif first.aggregate == "mean":
            value = sum(values) / len(values)
        else:
            value = max(values)
        out.append(
            Check(name, value, first.tolerance, {"instances": len(cs)}, first.anchor, first.aggregate)
        )
    return out


def _num(x, verbose):
    if not math.isfinite(x):
        return str(x)
    return x if verbose else float(f"{x:.2e}")


def build_report(checks, *, seed=None, kind=None, label=None, extra=None, verbose=False):
    from . import __version__

    records = []
    for c in checks:
        rec = {
            "check": c.name,
            "anchor": c.anchor,
            "residual": _num(c.residual, verbose),
            "tolerance": _num(c.tolerance, verbose),
            "pass": c.passed,
        }
        if c.detail:
            rec["detail"] = {
                k: _num(v, verbose) if isinstance(v, float) else v for k, v in c.detail.items()
            }
        records.append(rec)
    passed = sum(c.passed for c in checks)
    report = {
        "tool": TOOL,
        "version": __version__,
        "seed": seed,
        "kind": kind,
        "label": label,
        "checks": records,
        "summary": {"total": len(checks), "passed": passed, "failed": len(checks) - passed},
    }
    if extra:
        report.update(extra)
    return report


def dumps(report) -> str:
    return json.dumps(report, indent=2, sort_keys=False) + "\n"
