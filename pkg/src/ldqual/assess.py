"""One-shot assessment runs: parse inputs, evaluate metrics, aggregate.

The pipeline evaluates every taxonomy node whose bound evaluator it can feed
from the run itself: the merged content graph, the per-input formats, and the
probe log. Parameterized functions (statement-vs-statement checks, the
two-container join) stay importable for direct calls but are not run here, so
their nodes surface as declared-only.
"""

from __future__ import annotations

import hashlib
import os
from dataclasses import dataclass

from .aggregate import AssessmentTree, Profile, aggregate, default_profile
from .errors import LdqualError, UnsupportedFormatError
from .metrics import EVALUATORS, container, medium
from .metrics.base import MetricResult
from .metrics.container import ProbeLog, ProbeTransport
from .parse import (
    ParseDiagnostic,
    SerializationStats,
    detect_format,
    format_by_id,
    parse,
)
from .rdf import Dataset, Graph, Iri, TriplePattern
from .schema import EMPTY_SCHEMA, SchemaSpec
from .taxonomy import TaxonomyGraph, load_builtin
from .vocab import RDFS_LABEL

_DIAGNOSTIC_CAP = 20


@dataclass
class AssessmentConfig:
    """Knobs the metrics read; everything has a workable default."""

    lds_property: Iri = Iri(RDFS_LABEL)
    contradiction_predicates: tuple[Iri, ...] = ()
    local_namespaces: tuple[str, ...] = ()
    relevancy_patterns: tuple[TriplePattern, ...] = ()
    sample_size: int = 10
    seed: int = 0
    timeout_ms: float = 10_000.0
    probe_window_s: float = 60.0


@dataclass(frozen=True)
class InputRecord:
    """One parsed input: where it came from and what it held."""

    label: str
    format_id: str
    dataset: Dataset
    diagnostics: tuple[ParseDiagnostic, ...]
    byte_count: int
    triple_count: int
    sha256: str


def record_from_bytes(
    label: str, data: bytes, *, format_id: str | None = None, strict: bool = False
) -> InputRecord:
    fmt = format_by_id(format_id) if format_id else detect_format(data, label)
    if fmt.id in ("unknown", "rdfxml-unsupported"):
        raise UnsupportedFormatError(f"cannot assess {label}: format is {fmt.id}")
    dataset, diags = parse(data, fmt, strict=strict)
    return InputRecord(
        label,
        fmt.id,
        dataset,
        tuple(diags),
        len(data),
        dataset.total_triples(),
        hashlib.sha256(data).hexdigest(),
    )


def load_input(path, *, format_id: str | None = None, strict: bool = False) -> InputRecord:
    with open(path, "rb") as fh:
        data = fh.read()
    return record_from_bytes(os.fspath(path), data, format_id=format_id, strict=strict)


def merged_graph(inputs) -> Graph:
    """Union of every graph in every input, as one content graph."""
    merged = Graph()
    for record in inputs:
        merged.update(record.dataset.union_graph())
    return merged


@dataclass(frozen=True)
class AssessmentRun:
    inputs: tuple[InputRecord, ...]
    graph: Graph
    schema: SchemaSpec | None
    config: AssessmentConfig
    profile: Profile
    taxonomy: TaxonomyGraph
    results: dict[str, tuple[MetricResult, ...]]
    tree: AssessmentTree
    probe_log: ProbeLog


# Nodes sharing one evaluator pick their value out of its dict result.
_LINK_KEYS = {
    "pm:out-relations": "out_relations",
    "PD:external_links": "external_links",
    "PD:outdegree": "outdegree",
}
_PROVENANCE_KEYS = {
    "pm:provenance": "score",
    "LD:Attribution": "attribution",
    "LD:History": "history",
}

# Bound for direct calls only: the pipeline has no second statement,
# requirement, or container to hand them.
_CALL_ONLY = {
    "content.consistency_of_statement_wrt",
    "content.consistency_and_nonredundancy_wrt",
    "content.inconsistent_substatements",
    "content.consistency_ratio_pattern",
    "content.consistency_ratio_of_term",
    "content.consistency_ratio_of_relation_on_term",
    "content.statement_matches_requirement",
    "content.conformity_ratio",
    "container.connectedness",
}

_NEEDS_SCHEMA = {
    "content.coverage",
    "content.coherence",
    "content.intensional_completeness",
    "content.extensional_completeness",
}


class _Pipeline:
    def __init__(self, inputs, graph, schema, config, transport, log):
        self.inputs = inputs
        self.graph = graph
        self.schema = schema
        self.config = config
        self.transport = transport
        self.log = log
        self._cache: dict[str, tuple] = {}

    # one computation per evaluator id, shared by the nodes bound to it
    def _shared(self, key: str, fn, *args, **kwargs):
        if key not in self._cache:
            try:
                self._cache[key] = ("ok",) + tuple(fn(*args, **kwargs))
            except LdqualError as exc:
                self._cache[key] = ("error", str(exc))
        return self._cache[key]

    def prime_probes(self):
        if self.transport is None:
            return
        self._shared(
            "container.dereferenceability",
            container.dereferenceability,
            self.graph,
            self.transport,
            sample_size=self.config.sample_size,
            seed=self.config.seed,
            timeout_ms=self.config.timeout_ms,
            log=self.log,
        )

    @staticmethod
    def _split_evidence(details):
        # evaluators report culprit samples under an "evidence" details key;
        # the result carries them as a first-class field instead
        if not details or "evidence" not in details:
            return details, ()
        details = dict(details)
        evidence = tuple(details.pop("evidence"))
        return details, evidence

    def results_for(self, node) -> list[MetricResult]:
        ev = node.evaluator
        if ev is None or ev in _CALL_ONLY:
            return []
        if ev == "parse.validity":
            return self._validity(node)
        if ev.startswith("medium."):
            return self._medium(node, ev)
        if ev.startswith("container."):
            return self._container(node, ev)
        return self._content(node, ev)

    def _validity(self, node) -> list[MetricResult]:
        out = []
        for record in self.inputs:
            errors = [d for d in record.diagnostics if d.severity == "error"]
            out.append(
                MetricResult(
                    category_id=node.id,
                    target=record.label,
                    result_kind=node.result_kind,
                    value=not errors,
                    diagnostics=tuple(errors[:_DIAGNOSTIC_CAP]),
                    details={"error_count": len(errors)},
                )
            )
        return out

    def _medium(self, node, ev) -> list[MetricResult]:
        fn = EVALUATORS[ev]
        out = []
        for record in self.inputs:
            try:
                if ev == "medium.concision":
                    stats = SerializationStats(
                        record.byte_count, record.triple_count, format_by_id(record.format_id)
                    )
                    value, details = fn(stats)
                else:
                    value, details = fn(medium.profile_for(record.format_id))
            except LdqualError as exc:
                out.append(
                    MetricResult.failure(node.id, record.label, node.result_kind, str(exc))
                )
                continue
            out.append(
                MetricResult(
                    category_id=node.id,
                    target=record.label,
                    result_kind=node.result_kind,
                    value=value,
                    details=details,
                )
            )
        return out

    def _content(self, node, ev) -> list[MetricResult]:
        cfg = self.config
        schema = self.schema
        if ev in _NEEDS_SCHEMA:
            if schema is None:
                return []
            computed = self._shared(ev, EVALUATORS[ev], self.graph, schema)
        elif ev in (
            "content.pd_consistency",
            "content.kb_consistent",
            "content.consistency_ratio_all",
        ):
            computed = self._shared(
                ev,
                EVALUATORS[ev],
                self.graph,
                schema if schema is not None else EMPTY_SCHEMA,
                cfg.contradiction_predicates,
            )
        elif ev == "content.nonredundancy_ratio":
            computed = self._shared(
                ev, EVALUATORS[ev], self.graph, schema if schema is not None else EMPTY_SCHEMA
            )
        elif ev == "content.lds_completeness":
            computed = self._shared(ev, EVALUATORS[ev], self.graph, cfg.lds_property)
        elif ev == "content.relevancy_ratio":
            if not cfg.relevancy_patterns:
                return []
            computed = self._shared(ev, EVALUATORS[ev], self.graph, cfg.relevancy_patterns)
        elif ev == "content.link_stats":
            computed = self._shared(ev, EVALUATORS[ev], self.graph, cfg.local_namespaces)
        else:
            computed = self._shared(ev, EVALUATORS[ev], self.graph)

        if computed[0] == "error":
            return [MetricResult.failure(node.id, "kb", node.result_kind, computed[1])]
        _, value, details = computed
        if ev == "content.link_stats":
            value = value[_LINK_KEYS[node.id]]
        elif ev == "content.provenance_check":
            value = value[_PROVENANCE_KEYS[node.id]]
        details, evidence = self._split_evidence(details)
        return [
            MetricResult(
                category_id=node.id,
                target="kb",
                result_kind=node.result_kind,
                value=value,
                details=details,
                evidence=evidence,
            )
        ]

    def _container(self, node, ev) -> list[MetricResult]:
        if ev == "container.accessibility_methods":
            computed = self._shared(ev, EVALUATORS[ev], self.graph)
        elif ev == "container.dereferenceability":
            if "container.dereferenceability" not in self._cache:
                return []
            computed = self._cache[ev]
        else:
            # log-driven metrics need probes, from this run or a prior log
            if not self.log.outcomes():
                return []
            if ev == "container.robustness":
                computed = self._shared(
                    ev, EVALUATORS[ev], self.log, self.config.probe_window_s
                )
            else:
                computed = self._shared(ev, EVALUATORS[ev], self.log)

        if computed[0] == "error":
            return [MetricResult.failure(node.id, "kb", node.result_kind, computed[1])]
        _, value, details = computed
        if ev == "container.response_time_stats":
            details = dict(value)
            value = value["median_ms"]
        details, evidence = self._split_evidence(details)
        return [
            MetricResult(
                category_id=node.id,
                target="kb",
                result_kind=node.result_kind,
                value=value,
                details=details,
                evidence=evidence,
            )
        ]


def run_assessment(
    inputs,
    *,
    taxonomy: TaxonomyGraph | None = None,
    schema: SchemaSpec | None = None,
    profile: Profile | None = None,
    config: AssessmentConfig | None = None,
    transport: ProbeTransport | None = None,
    probe_log: ProbeLog | None = None,
) -> AssessmentRun:
    """Assess the merged inputs and fold the results through the taxonomy.

    Probes only run when a transport is passed in; without one, an existing
    probe_log still feeds the log-driven container metrics.
    """
    inputs = tuple(inputs)
    taxonomy = taxonomy if taxonomy is not None else load_builtin()
    profile = profile if profile is not None else default_profile()
    config = config if config is not None else AssessmentConfig()
    log = probe_log if probe_log is not None else ProbeLog()
    graph = merged_graph(inputs)

    pipeline = _Pipeline(inputs, graph, schema, config, transport, log)
    pipeline.prime_probes()
    results: dict[str, tuple[MetricResult, ...]] = {}
    for node in taxonomy:
        produced = pipeline.results_for(node)
        if produced:
            results[node.id] = tuple(produced)

    tree = aggregate(taxonomy, results, profile)
    return AssessmentRun(
        inputs=inputs,
        graph=graph,
        schema=schema,
        config=config,
        profile=profile,
        taxonomy=taxonomy,
        results=results,
        tree=tree,
        probe_log=log,
    )
