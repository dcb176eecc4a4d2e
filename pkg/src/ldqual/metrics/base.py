"""Common result shape for all metric evaluators."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class MetricResult:
    """Outcome of evaluating one category against one target.

    value is None when the evaluation failed; error then carries the reason.
    evidence holds a bounded, sorted sample of serialized statements or IRIs
    backing the value. details is JSON-ready auxiliary data (counts, stats).
    """

    category_id: str
    target: str
    result_kind: str
    value: object
    evidence: tuple = ()
    diagnostics: tuple = ()
    details: dict = field(default_factory=dict)
    error: str | None = None

    @classmethod
    def failure(cls, category_id: str, target: str, result_kind: str, error: str) -> "MetricResult":
        return cls(category_id, target, result_kind, None, error=error)
