"""Machine-readable run reports printed by ``planarspace --json``."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any, Optional

REPORT_SCHEMA: dict = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "RunReport",
    "type": "object",
    "required": ["problem", "answer", "exit_code", "elapsed_ms", "params"],
    "additionalProperties": False,
    "properties": {
        "problem": {"type": "string"},
        "answer": {},
        "exit_code": {"enum": [0, 1, 2]},
        "elapsed_ms": {"type": "number", "minimum": 0},
        "params": {
            "type": "object",
            "required": ["eps", "seed"],
            "properties": {
                "eps": {"type": "number"},
                "seed": {"type": "integer"},
                "r": {"type": "integer"},
            },
        },
        "peak_cells": {"type": "integer", "minimum": 0},
        "detail": {"type": "object"},
        "error": {"type": "string"},
    },
}


def _plain(value: Any) -> Any:
    # JSON has no infinity; unreachable distances become the string "inf"
    if isinstance(value, float) and math.isinf(value):
        return "inf" if value > 0 else "-inf"
    if isinstance(value, (set, frozenset)):
        return sorted(_plain(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return value


@dataclass
class RunReport:
    problem: str
    answer: Any
    exit_code: int
    elapsed_ms: float
    params: dict
    peak_cells: Optional[int] = None
    detail: dict = field(default_factory=dict)
    error: Optional[str] = None

    def to_dict(self) -> dict:
        out = {
            "problem": self.problem,
            "answer": _plain(self.answer),
            "exit_code": self.exit_code,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "params": _plain(self.params),
        }
        if self.peak_cells is not None:
            out["peak_cells"] = self.peak_cells
        if self.detail:
            out["detail"] = _plain(self.detail)
        if self.error is not None:
            out["error"] = self.error
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)
