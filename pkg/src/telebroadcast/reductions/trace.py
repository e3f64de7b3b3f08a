"""Provenance records carried along the reduction pipeline.

Each stage emits a trace naming the stage, the construction data needed to
convert witnesses in either direction, and the previous stage's trace.
Serialization is canonical JSON (sorted keys, no whitespace), so a trace
written and re-read round-trips bit-exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

__all__ = ["ReductionTrace", "trace_from_json", "trace_to_json"]


@dataclass(frozen=True)
class ReductionTrace:
    stage: str
    data: dict[str, Any]
    parent: "ReductionTrace | None" = None

    def find(self, stage: str) -> "ReductionTrace":
        """Nearest trace for the named stage, walking parents."""
        node: ReductionTrace | None = self
        while node is not None:
            if node.stage == stage:
                return node
            node = node.parent
        raise KeyError(f"no trace for stage {stage!r}")


def _encode(trace: ReductionTrace) -> dict[str, Any]:
    return {
        "stage": trace.stage,
        "data": trace.data,
        "parent": None if trace.parent is None else _encode(trace.parent),
    }


def _decode(payload: dict[str, Any]) -> ReductionTrace:
    if not isinstance(payload, dict) or set(payload) != {"stage", "data", "parent"}:
        raise ValueError("malformed trace payload")
    parent = payload["parent"]
    return ReductionTrace(
        stage=payload["stage"],
        data=payload["data"],
        parent=None if parent is None else _decode(parent),
    )


def trace_to_json(trace: ReductionTrace) -> str:
    return json.dumps(_encode(trace), sort_keys=True, separators=(",", ":")) + "\n"


def trace_from_json(text: str) -> ReductionTrace:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid trace JSON: {exc}") from exc
    return _decode(payload)
