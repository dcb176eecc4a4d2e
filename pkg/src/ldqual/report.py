"""Report rendering: one canonical JSON shape plus a terminal view.

The JSON form is byte-reproducible for identical inputs and settings: keys
are sorted, floats come from the same arithmetic every run, and nothing
clock- or environment-dependent is recorded. Input identity is pinned with
sha256 digests instead of paths-plus-mtimes.
"""

from __future__ import annotations

import json

from . import __version__
from .assess import AssessmentRun
from .metrics.base import MetricResult
from .taxonomy import TAXONOMY_VERSION

# The three top-level branches every report summarizes, whatever the profile.
BRANCH_IDS = (
    "pm:description-content_quality",
    "pm:description-medium_quality",
    "pm:description-container_quality",
)


def _diagnostic_dict(diag) -> dict:
    return {
        "severity": diag.severity,
        "line": diag.line,
        "column": diag.column,
        "message": diag.message,
        "code": diag.code,
    }


def _result_dict(result: MetricResult) -> dict:
    out: dict = {
        "target": result.target,
        "kind": result.result_kind,
        "value": list(result.value) if isinstance(result.value, tuple) else result.value,
    }
    if result.error is not None:
        out["error"] = result.error
    if result.details:
        out["details"] = dict(result.details)
    if result.evidence:
        out["evidence"] = list(result.evidence)
    if result.diagnostics:
        out["diagnostics"] = [_diagnostic_dict(d) for d in result.diagnostics]
    return out


def build_report(run: AssessmentRun) -> dict:
    """The full outcome of a run as one JSON-ready dict.

    Every taxonomy node appears exactly once under "nodes", each with an
    explicit status, so consumers never have to guess whether a missing id
    means skipped, failed, or unknown.
    """
    nodes = {}
    status_counts: dict[str, int] = {}
    for assessment in run.tree:
        category = run.taxonomy.node(assessment.category_id)
        entry: dict = {
            "label": category.label,
            "source": category.source,
            "status": assessment.status,
            "score": assessment.score,
            "evidence": sum(len(r.evidence) for r in assessment.results),
        }
        if assessment.normalized_own is not None:
            entry["normalized"] = assessment.normalized_own
        if assessment.results:
            entry["results"] = [_result_dict(r) for r in assessment.results]
        if assessment.contributions:
            entry["contributions"] = [
                {"from": label, "value": value, "weight": weight}
                for label, value, weight in assessment.contributions
            ]
        nodes[assessment.category_id] = entry
        status_counts[assessment.status] = status_counts.get(assessment.status, 0) + 1

    inputs = []
    for record in run.inputs:
        error_count = sum(1 for d in record.diagnostics if d.severity == "error")
        inputs.append(
            {
                "path": record.label,
                "format": record.format_id,
                "sha256": record.sha256,
                "bytes": record.byte_count,
                "triples": record.triple_count,
                "parse_errors": error_count,
            }
        )

    schema_info: dict = {"present": run.schema is not None}
    if run.schema is not None:
        schema_info.update(
            {
                "classes_with_requirements": len(run.schema.required_properties_per_class),
                "subclass_edges": sum(
                    len(v) for v in run.schema.direct_superclasses.values()
                ),
                "subproperty_edges": sum(
                    len(v) for v in run.schema.direct_superproperties.values()
                ),
                "functional_properties": len(run.schema.functional_properties),
                "disjoint_class_pairs": len(run.schema.disjoint_class_pairs),
            }
        )

    return {
        "tool": {
            "name": "ldqual",
            "version": __version__,
            "taxonomy_version": TAXONOMY_VERSION,
        },
        "profile": run.profile.name,
        "inputs": inputs,
        "kb": {
            "triples": len(run.graph),
            "subjects": len(run.graph.subjects()),
            "frames": len(run.graph.frames()),
        },
        "schema": schema_info,
        "probes": {"recorded": len(run.probe_log.outcomes())},
        "nodes": nodes,
        "summary": {
            "statuses": dict(sorted(status_counts.items())),
            "scored": sum(1 for a in run.tree if a.score is not None),
            "branch_scores": {ident: run.tree.score(ident) for ident in BRANCH_IDS},
            "root_score": run.tree.score("pm:quality"),
        },
    }


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def render_text(report: dict, show_all: bool = False) -> str:
    """Terminal view of a report dict. Derived, never authoritative.

    Only measured and aggregated nodes are listed by default; show_all adds
    the nodes that produced nothing (declared-only, disabled, errored)."""
    lines = []
    tool = report["tool"]
    lines.append(f"{tool['name']} {tool['version']} (taxonomy {tool['taxonomy_version']})")
    lines.append(f"profile: {report['profile']}")
    lines.append("inputs:")
    for item in report["inputs"]:
        lines.append(
            f"  {item['path']}  {item['format']}  {item['triples']} triples"
            f"  {item['parse_errors']} parse errors  sha256:{item['sha256'][:12]}"
        )
    kb = report["kb"]
    lines.append(
        f"kb: {kb['triples']} triples, {kb['subjects']} subjects, {kb['frames']} frames"
    )
    if report["schema"]["present"]:
        lines.append("schema: present")
    if report["probes"]["recorded"]:
        lines.append(f"probes: {report['probes']['recorded']} recorded")

    lines.append("")
    lines.append("scores:")
    for ident in sorted(report["nodes"]):
        entry = report["nodes"][ident]
        if entry["score"] is None:
            continue
        marker = "*" if entry["status"] == "measured" else " "
        lines.append(f"  {entry['score']:.4f} {marker} {ident}")

    failures = [
        (ident, entry)
        for ident, entry in sorted(report["nodes"].items())
        if entry["status"] == "error"
    ]
    if failures:
        lines.append("")
        lines.append("errors:")
        for ident, entry in failures:
            for result in entry.get("results", ()):
                if "error" in result:
                    lines.append(f"  {ident}: {result['error']}")

    if show_all:
        silent = [
            (ident, entry)
            for ident, entry in sorted(report["nodes"].items())
            if entry["score"] is None and entry["status"] != "error"
        ]
        if silent:
            lines.append("")
            lines.append("unmeasured:")
            for ident, entry in silent:
                lines.append(f"  {ident} ({entry['status']})")

    summary = report["summary"]
    statuses = ", ".join(f"{k}={v}" for k, v in summary["statuses"].items())
    lines.append("")
    lines.append("branches:")
    for ident, score in summary["branch_scores"].items():
        shown = f"{score:.4f}" if score is not None else "n/a"
        lines.append(f"  {shown}   {ident}")
    lines.append(f"nodes: {statuses}")
    root = summary["root_score"]
    lines.append(f"overall: {root:.4f}" if root is not None else "overall: n/a")
    return "\n".join(lines) + "\n"
