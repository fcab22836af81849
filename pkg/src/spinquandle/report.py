"""Structured result of a verification check."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .numerics import EPS

MAX_WITNESSES = 5


def _residual_json(r):
    if isinstance(r, (Fraction, int)):
        r = Fraction(r)
        return str(r) if r.denominator != 1 else r.numerator
    r = float(r)
    return r if math.isfinite(r) else str(r)


@dataclass
class VerificationReport:
    name: str
    mode: str  # "exact" | "float"
    samples: int
    seed: int | None
    residual: object = 0
    witnesses: list = field(default_factory=list)
    tolerance: float = EPS
    passed: bool = False

    def record(self, residual, *inputs, label: str = "") -> None:
        """Fold one residual in; out-of-tolerance inputs become witnesses."""
        if _gt(residual, self.residual):
            self.residual = residual
        bad = residual != 0 if self.mode == "exact" else not (residual <= self.tolerance)
        if bad and len(self.witnesses) < MAX_WITNESSES:
            entry = [repr(x) for x in inputs]
            if label:
                entry.insert(0, label)
            self.witnesses.append(entry)

    def fail(self, *inputs, label: str = "") -> None:
        """Record a discrete failure (no meaningful residual)."""
        if self.mode == "exact":
            self.record(Fraction(1), *inputs, label=label)
        else:
            self.record(math.inf, *inputs, label=label)

    def finish(self) -> "VerificationReport":
        if self.mode == "exact":
            ok = self.residual == 0
        else:
            ok = self.residual <= self.tolerance
        self.passed = ok and not self.witnesses
        return self

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "mode": self.mode,
            "samples": self.samples,
            "seed": self.seed,
            "residual": _residual_json(self.residual),
            "tolerance": self.tolerance,
            "witnesses": self.witnesses,
            "pass": self.passed,
        }

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        res = _residual_json(self.residual)
        return f"{status}  {self.name:<44} {self.mode:<5} n={self.samples:<6} residual={res}"


def _gt(a, b) -> bool:
    try:
        return a > b
    except TypeError:
        return float(a) > float(b)


def dump_reports(reports, path) -> None:
    with open(path, "w") as fh:
        json.dump({"reports": [r.to_dict() for r in reports]}, fh, indent=2, sort_keys=True)
        fh.write("\n")
