#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Verification reports and q-sweep scan tables, with lossless JSON/CSV encodings.

Complex numbers are written as {"re": ..., "im": ...}; CSV uses two columns
per complex field.
"""

import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

TINY = 1e-300


def encode_value(value: Any) -> Any:
    """JSON-ready form of a parameter or result value."""
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    if isinstance(value, (list, tuple)):
        return [encode_value(v) for v in value]
    if isinstance(value, dict):
        return {k: encode_value(v) for k, v in value.items()}
    return value


def decode_value(value: Any) -> Any:
    if isinstance(value, dict):
        if set(value) == {"re", "im"}:
            return complex(value["re"], value["im"])
        return {k: decode_value(v) for k, v in value.items()}
    if isinstance(value, list):
        return [decode_value(v) for v in value]
    return value


def relative_difference(lhs: complex, rhs: complex) -> float:
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), TINY)


@dataclass
class VerificationReport:
    """One identity instance: both sides, their distance and the verdict."""
    identity: str
    params: Dict[str, Any]
    lhs: complex
    rhs: complex
    abs_diff: float
    rel_diff: float
    tolerance: float
    passed: bool
    notes: str = ""

    @classmethod
    def compare(cls, identity: str, lhs: complex, rhs: complex, tolerance: float,
                params: Optional[Dict[str, Any]] = None, notes: str = "") -> "VerificationReport":
        lhs, rhs = complex(lhs), complex(rhs)
        abs_diff = abs(lhs - rhs)
        rel_diff = relative_difference(lhs, rhs)
        passed = bool(math.isfinite(rel_diff) and rel_diff <= tolerance)
        return cls(identity=identity, params=dict(params or {}), lhs=lhs, rhs=rhs,
                   abs_diff=abs_diff, rel_diff=rel_diff, tolerance=tolerance,
                   passed=passed, notes=notes)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "identity": self.identity,
            "params": encode_value(self.params),
            "lhs": encode_value(self.lhs),
            "rhs": encode_value(self.rhs),
            "abs_diff": self.abs_diff,
            "rel_diff": self.rel_diff,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "notes": self.notes,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "VerificationReport":
        return cls(
            identity=data["identity"],
            params=decode_value(data["params"]),
            lhs=complex(decode_value(data["lhs"])),
            rhs=complex(decode_value(data["rhs"])),
            abs_diff=float(data["abs_diff"]),
            rel_diff=float(data["rel_diff"]),
            tolerance=float(data["tolerance"]),
            passed=bool(data["pass"]),
            notes=data.get("notes", ""),
        )


@dataclass
class ScanRow:
    q: float
    lhs: complex
    rhs: complex
    abs_diff: float
    rel_diff: float


@dataclass
class ScanTable:
    """A q -> 1-0 sweep: one row per q, plus trend statistics and a verdict.

    A scan passes iff the relative differences are strictly decreasing and the
    last one is below the terminal tolerance.
    """
    name: str
    params: Dict[str, Any]
    tolerance: float = 0.05
    rows: List[ScanRow] = field(default_factory=list)
    notes: str = ""

    def add(self, q: float, lhs: complex, rhs: complex) -> ScanRow:
        lhs, rhs = complex(lhs), complex(rhs)
        row = ScanRow(q=q, lhs=lhs, rhs=rhs, abs_diff=abs(lhs - rhs),
                      rel_diff=relative_difference(lhs, rhs))
        self.rows.append(row)
        return row

    @property
    def diffs(self) -> List[float]:
        return [row.rel_diff for row in self.rows]

    @property
    def ratios(self) -> List[float]:
        """Successive ratios d_{i+1}/d_i of the relative differences."""
        d = self.diffs
        return [d[i + 1] / max(d[i], TINY) for i in range(len(d) - 1)]

    @property
    def strictly_decreasing(self) -> bool:
        d = self.diffs
        return all(d[i + 1] < d[i] for i in range(len(d) - 1))

    @property
    def terminal_ok(self) -> bool:
        return bool(self.rows) and self.rows[-1].rel_diff <= self.tolerance

    @property
    def passed(self) -> bool:
        return self.strictly_decreasing and self.terminal_ok

    def verdict(self) -> Dict[str, Any]:
        return {
            "strictly_decreasing": self.strictly_decreasing,
            "terminal_rel_diff": self.rows[-1].rel_diff if self.rows else None,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }

    def to_dict(self) -> Dict[str, Any]:
        return {
            "scan": self.name,
            "params": encode_value(self.params),
            "rows": [
                {"q": r.q, "lhs": encode_value(r.lhs), "rhs": encode_value(r.rhs),
                 "abs_diff": r.abs_diff, "rel_diff": r.rel_diff}
                for r in self.rows
            ],
            "ratios": self.ratios,
            "verdict": self.verdict(),
            "notes": self.notes,
        }

    def csv_rows(self) -> List[List[str]]:
        """Header, one row per q and a trailing '# verdict' footer record."""
        out = [["q", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_diff", "rel_diff"]]
        for r in self.rows:
            out.append([fmt_float(r.q), fmt_float(r.lhs.real), fmt_float(r.lhs.imag), fmt_float(r.rhs.real),
                        fmt_float(r.rhs.imag), fmt_float(r.abs_diff), fmt_float(r.rel_diff)])
        v = self.verdict()
        out.append(["# verdict", f"strictly_decreasing={v['strictly_decreasing']}",
                    f"terminal_rel_diff={fmt_float(v['terminal_rel_diff'])}",
                    f"tolerance={fmt_float(self.tolerance)}", f"pass={v['pass']}"])
        return out


def fmt_float(value: Optional[float]) -> str:
    if value is None:
        return ""
    return f"{value:.17g}"
