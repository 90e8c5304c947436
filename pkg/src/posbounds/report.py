"""Bound reports and their lossless JSON encoding.

Rationals serialize as {"num":..., "den":...} and brackets as
{"lo":..., "hi":...}; no float round-trips anywhere.  The schema is strict:
documents carry "schema": 1 and unknown fields are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping

from .core import Bracket

SCHEMA_VERSION = 1


def value_to_json(v: Any) -> Any:
    if isinstance(v, Bracket):
        return {"lo": value_to_json(v.lo), "hi": value_to_json(v.hi)}
    if isinstance(v, Fraction):
        if v.denominator == 1:
            return int(v)
        return {"num": v.numerator, "den": v.denominator}
    if isinstance(v, bool) or isinstance(v, int) or isinstance(v, str) or v is None:
        return v
    if isinstance(v, float):
        return v
    if isinstance(v, Mapping):
        return {str(k): value_to_json(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [value_to_json(x) for x in v]
    raise TypeError(f"cannot serialize {type(v).__name__}")


def value_from_json(v: Any) -> Any:
    if isinstance(v, dict):
        if set(v) == {"num", "den"}:
            return Fraction(v["num"], v["den"])
        if set(v) == {"lo", "hi"}:
            return Bracket(Fraction(value_from_json(v["lo"])), Fraction(value_from_json(v["hi"])))
        return {k: value_from_json(x) for k, x in v.items()}
    if isinstance(v, list):
        return [value_from_json(x) for x in v]
    return v


@dataclass
class BoundReport:
    theorem: str
    inputs: dict[str, Any] = field(default_factory=dict)
    threshold: Any = None
    verdict: str = "threshold-only"
    details: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "theorem": self.theorem,
            "inputs": value_to_json(self.inputs),
            "threshold": value_to_json(self.threshold),
            "verdict": self.verdict,
            "details": value_to_json(self.details),
        }

    @staticmethod
    def from_json(data: dict) -> "BoundReport":
        allowed = {"schema", "theorem", "inputs", "threshold", "verdict", "details"}
        unknown = set(data) - allowed
        if unknown:
            raise ValueError(f"unknown report fields: {sorted(unknown)}")
        if data.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema version {data.get('schema')!r}")
        return BoundReport(
            theorem=data["theorem"],
            inputs=value_from_json(data.get("inputs", {})),
            threshold=value_from_json(data.get("threshold")),
            verdict=data.get("verdict", "threshold-only"),
            details=value_from_json(data.get("details", {})),
        )
