"""Report types shared by the lemma verifier, the check harness, and the CLI.

A report serializes to one JSON object (one line in stream mode); the shape
is pinned by ``REPORT_SCHEMA`` and validated in the tests.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .graphs import VertexSet


def set_payload(subset: VertexSet) -> list[Any]:
    """JSON value for a vertex set: labels when the graph has them, else
    integer indices.  Always sorted by vertex index."""
    if subset.graph.labels is not None:
        return list(subset.names())
    return list(subset.members)


def vertex_payload(graph: Any, v: int) -> Any:
    """JSON value for a single vertex, consistent with :func:`set_payload`."""
    return graph.label_of(v) if graph.labels is not None else v


@dataclass
class CheckOutcome:
    """Result of one named check on one graph."""

    name: str
    passed: bool
    certificate: dict[str, Any] | None = None
    counterexample: dict[str, Any] | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "pass": self.passed,
            "certificate": self.certificate,
            "counterexample": self.counterexample,
        }


@dataclass
class VerificationReport:
    """All check outcomes for a single graph."""

    graph_id: str
    n: int
    m: int
    checks: list[CheckOutcome] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def all_passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> list[str]:
        return [check.name for check in self.checks if not check.passed]

    def to_dict(self) -> dict[str, Any]:
        return {
            "graph_id": self.graph_id,
            "n": self.n,
            "m": self.m,
            "checks": [check.to_dict() for check in self.checks],
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


REPORT_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["graph_id", "n", "m", "checks", "elapsed_ms"],
    "additionalProperties": False,
    "properties": {
        "graph_id": {"type": "string"},
        "n": {"type": "integer", "minimum": 0},
        "m": {"type": "integer", "minimum": 0},
        "elapsed_ms": {"type": "number", "minimum": 0},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "pass"],
                "additionalProperties": False,
                "properties": {
                    "name": {"type": "string"},
                    "pass": {"type": "boolean"},
                    "certificate": {"type": ["object", "null"]},
                    "counterexample": {"type": ["object", "null"]},
                },
            },
        },
    },
}
