"""Metric evaluators, grouped by the aspect of a dataset they look at."""

from __future__ import annotations

from . import container, content, medium
from .base import MetricResult

# Maps the evaluator ids used by taxonomy bindings to callables. The
# parse.validity entry is wired inside the assessment pipeline because it
# needs the raw input bytes, not a parsed graph.
EVALUATORS = {
    "content.amount_of_data": content.amount_of_data,
    "content.coherence": content.coherence,
    "content.conformity_ratio": content.conformity_ratio,
    "content.consistency_and_nonredundancy_wrt": content.consistency_and_nonredundancy_wrt,
    "content.consistency_of_statement_wrt": content.consistency_of_statement_wrt,
    "content.consistency_ratio_all": content.consistency_ratio_all,
    "content.consistency_ratio_of_relation_on_term": content.consistency_ratio_of_relation_on_term,
    "content.consistency_ratio_of_term": content.consistency_ratio_of_term,
    "content.consistency_ratio_pattern": content.consistency_ratio_pattern,
    "content.coverage": content.coverage,
    "content.extensional_completeness": content.extensional_completeness,
    "content.inconsistent_substatements": content.inconsistent_substatements,
    "content.intensional_completeness": content.intensional_completeness,
    "content.kb_consistent": content.kb_consistent,
    "content.labels_ratio": content.labels_ratio,
    "content.language_tag_ratio": content.language_tag_ratio,
    "content.lds_completeness": content.lds_completeness,
    "content.link_stats": content.link_stats,
    "content.naming_convention_ratio": content.naming_convention_ratio,
    "content.nonredundancy_ratio": content.nonredundancy_ratio,
    "content.pd_consistency": content.pd_consistency,
    "content.provenance_check": content.provenance_check,
    "content.relevancy_ratio": content.relevancy_ratio,
    "content.statement_matches_requirement": content.statement_matches_requirement,
    "content.typing_ratio": content.typing_ratio,
    "content.uri_quality": content.uri_quality,
    "medium.adaptable_syntax_flag": medium.adaptable_syntax_flag,
    "medium.concision": medium.concision,
    "medium.expressiveness_score": medium.expressiveness_score,
    "medium.format_score": medium.format_score,
    "medium.logic_interpretation_flag": medium.logic_interpretation_flag,
    "medium.logical_constructs_flag": medium.logical_constructs_flag,
    "medium.machine_interpretable_flag": medium.machine_interpretable_flag,
    "medium.ontological_primitives_flag": medium.ontological_primitives_flag,
    "medium.readability_score": medium.readability_score,
    "medium.referable_entities_flag": medium.referable_entities_flag,
    "medium.shortcut_constructs_flag": medium.shortcut_constructs_flag,
    "medium.standard_format_flag": medium.standard_format_flag,
    "medium.structure_presentation_flag": medium.structure_presentation_flag,
    "medium.structured_format_flag": medium.structured_format_flag,
    "container.accessibility_methods": container.accessibility_methods,
    "container.availability": container.availability,
    "container.connectedness": container.connectedness,
    "container.dereferenceability": container.dereferenceability,
    "container.response_time_stats": container.response_time_stats,
    "container.robustness": container.robustness,
    "parse.validity": None,
}

__all__ = ["EVALUATORS", "MetricResult", "container", "content", "medium"]
