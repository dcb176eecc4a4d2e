"""The built-in category table.

Sections follow the organizing vocabulary: the content branch with its
correctness and conformity subtrees, the term-representation subtree, the
medium branch, the container branch, and the spines of the four external
catalogs (SF, Kahn, LDpattern, ODP) whose entries are integrated as extra
parents or aliases of the canonical nodes wherever they coincide.

Some placements are marked provisional: the source material leaves room for
reading them as dimensions rather than function types, or does not pin the
parent down. They are kept where cross-references suggest they belong.
"""

from __future__ import annotations

from ..errors import StructuralError
from . import MetricCategory, TaxonomyGraph

_SPECS: list[MetricCategory] = []


def _expand(ident: str) -> str:
    return ident if ":" in ident else "pm:" + ident


def _n(
    ident,
    parents=(),
    *,
    rk=None,
    sig=None,
    ev=None,
    aliases=(),
    note=None,
    kind=None,
    provisional=False,
):
    ident = _expand(ident)
    if isinstance(parents, str):
        parents = (parents,)
    parents = tuple(_expand(p) for p in parents)
    source = ident.split(":", 1)[0]
    if kind is None:
        if source in ("LDpattern", "ODP"):
            kind = "pattern"
        elif source in ("SF", "Kahn") and rk is None:
            kind = "dimension"
        else:
            kind = "function-type"
    if kind != "function-type":
        sig = ()
    elif sig is None:
        sig = ("statement",)
    label = ident.split(":", 1)[1].replace("_", " ")
    _SPECS.append(
        MetricCategory(
            id=ident,
            source=source,
            kind=kind,
            parents=parents,
            result_kind=rk,
            signature=tuple(sig),
            evaluator=ev,
            aliases=tuple(aliases),
            note=note,
            provisional=provisional,
            label=label,
        )
    )


# -- root and top-level split ------------------------------------------------

_n("quality")
_n("content_based_quality", "quality")
_n("meta-statement_based_quality", "quality")
_n("rating_based_quality", "quality")

# -- content branch ----------------------------------------------------------

_n("description-content_quality", "quality")
_n("correctness", "description-content_quality")
_n("conformity", "description-content_quality")
_n("quality_of_this_descr_content", "description-content_quality")
_n("descr_content_quality_of_this_descr_content", "description-content_quality")
_n("quality_of_descr_media_related_to_this_descr_content", "description-content_quality")
_n(
    "quality_of_descr_containers_related_to_this_descr_content",
    "description-content_quality",
    rk="ratio",
    ev="container.dereferenceability",
)

# correctness subtree

_n("LD:accuracy", ("correctness", "Kahn:Intrinsic"), aliases=("Kahn:Accuracy",))
_n("consistency", "correctness")
_n(
    "consistency_of_this_statement_wrt_this_one",
    "consistency",
    rk="boolean",
    sig=("statement", "statement"),
    ev="content.consistency_of_statement_wrt",
)
_n(
    "consistency_and_non-redundancy_of_this_statement_wrt_this_one",
    "consistency_of_this_statement_wrt_this_one",
    rk="boolean",
    sig=("statement", "statement"),
    ev="content.consistency_and_nonredundancy_wrt",
)
_n("consistency_of_this_KB", "consistency", rk="boolean")
_n(
    "consistency_of_the_RDF_KB",
    "consistency_of_this_KB",
    rk="boolean",
    ev="content.kb_consistent",
)
_n("consistency_of_SKOS_relations", "consistency_of_the_RDF_KB", rk="boolean")
_n(
    "consistency_of_a_RDF_KB_tested_via_a_SPARQL_query",
    "consistency_of_the_RDF_KB",
    rk="boolean",
)
_n(
    "LD:internal_consistency_fct",
    ("consistency", "SF:Content"),
    aliases=("SF:consistency_fct", "SF:Consistency"),
    kind="function-type",
    provisional=True,
)
_n("LD:modeling_correctness_fct", "correctness", kind="function-type", provisional=True)
_n(
    "substatements_of_this_1st_statement_that_are_inconsistent_with_this_2nd_statement",
    "consistency",
    rk="set",
    sig=("statement", "statement"),
    ev="content.inconsistent_substatements",
)
_n("consistency_ratio", "consistency")
_n(
    "consistency_ratio_of_such_a_statement_in_this_statement",
    "consistency_ratio",
    rk="ratio",
    sig=("statement", "statement"),
    ev="content.consistency_ratio_pattern",
)
_n(
    "consistency_ratio_of_all_substatements_in_this_statement",
    "consistency_ratio",
    rk="ratio",
    ev="content.consistency_ratio_all",
)
_n(
    "consistency_ratio_of_this_KB",
    "consistency_ratio",
    rk="ratio",
    ev="content.consistency_ratio_all",
)
_n(
    "consistency_ratio_of_relations_on_this_term_in_this_statement",
    "consistency_ratio",
    rk="ratio",
    sig=("term", "statement"),
    ev="content.consistency_ratio_of_term",
)
_n(
    "consistency_ratio_of_this_relation_on_this_term_in_this_statement",
    "consistency_ratio",
    rk="ratio",
    sig=("term", "term", "statement"),
    ev="content.consistency_ratio_of_relation_on_term",
)
_n(
    "PD:consistency",
    "consistency_ratio",
    rk="ratio",
    ev="content.pd_consistency",
    note="number of non-conflicting frames divided by the number of frames",
)

# conformity subtree

_n(
    "conformity_of_this_statement_wrt_this_requirement",
    "conformity",
    rk="boolean",
    sig=("statement", "statement"),
    ev="content.statement_matches_requirement",
)
_n(
    "ratio_of_conformity_to_this_requirement_in_this_statement",
    "conformity",
    rk="ratio",
    sig=("statement", "statement"),
    ev="content.conformity_ratio",
)
_n("ratio_of_conformity_of_the_KB", "conformity", rk="ratio")
_n(
    "SF:amount_of_data",
    ("conformity", "SF:Usage", "Kahn:Contextual"),
    rk="count",
    ev="content.amount_of_data",
    aliases=("SF:Amount_of_Data", "Kahn:Appropriate_amount"),
)
_n("LD:modeling_granularity", "conformity", sig=(), kind="function-type")
_n("PD:structuredness", "conformity")
_n(
    "PD:coverage",
    "PD:structuredness",
    rk="ratio",
    ev="content.coverage",
    note="fraction of frames that carry every schema-required property;"
    " the covered-frame count is kept in the result details",
)
_n("PD:coherence", "PD:structuredness", rk="ratio", ev="content.coherence")
_n(
    "PD:completeness",
    ("conformity", "Kahn:Contextual"),
    aliases=("LD:completeness", "Kahn:Completeness"),
)
_n(
    "PD:intensional_completeness",
    "PD:completeness",
    rk="ratio",
    ev="content.intensional_completeness",
)
_n(
    "PD:extensional_completeness",
    "PD:completeness",
    rk="ratio",
    ev="content.extensional_completeness",
)
_n("PD:LDS_Completeness", "PD:completeness", rk="ratio", ev="content.lds_completeness")
_n(
    "PD:relevancy",
    ("conformity", "Kahn:Contextual"),
    rk="ratio",
    ev="content.relevancy_ratio",
    aliases=("LD:Boundedness", "Kahn:Relevancy"),
    note="needs a configured pattern set; unconfigured runs leave it declared-only",
)
_n("PD:verifiability", ("conformity", "SF:Content"), aliases=("SF:Verifiability",))
_n("PD:traceability", "PD:verifiability")
_n("PD:provability", "PD:verifiability")
_n("PD:accountability", "PD:verifiability")
_n(
    "LDpattern:materializing_inferences",
    ("PD:verifiability", "LDpattern:Publishing_pattern"),
    aliases=("LDpattern:Materialize_Inferences",),
)
_n(
    "LDpattern:transformation_query",
    ("PD:verifiability", "LDpattern:Application_pattern"),
    aliases=("LDpattern:Transformation_Query",),
)
_n(
    "SF:validity",
    ("conformity", "SF:Usage"),
    rk="boolean",
    ev="parse.validity",
    aliases=("SF:Validity_of_documents",),
)
_n("PD:validity", "SF:validity")
_n("representation_quality", "conformity")
_n("organization", "representation_quality")
_n("at_least_minimal_organization", "organization")
_n("reachability", "representation_quality")
_n("PD:reachability", "reachability")
_n("out-relations", "reachability", rk="ratio", ev="content.link_stats")
_n("PD:external_links", "out-relations", rk="count", ev="content.link_stats")
_n("PD:outdegree", "out-relations", rk="count", ev="content.link_stats")
_n("in-relations", "reachability")
_n("PD:indegree", "in-relations")
_n("non-redundancy", "representation_quality", rk="ratio", ev="content.nonredundancy_ratio")
_n("PD:intensional_conciseness", "non-redundancy")
_n("expressiveness_economy", "representation_quality")
_n("modeling_uniformity", "representation_quality")
_n("LD:directionality", "modeling_uniformity")
_n(
    "use_of_the_graph-oriented_reading_convention",
    "modeling_uniformity",
    provisional=True,
)
_n("conformity_to_an_abstract_model_or_ontology_or_methodology", "representation_quality")
_n("conform_to_Ontoclean", "conformity_to_an_abstract_model_or_ontology_or_methodology")
_n("use_of_a_standard_model", "conformity_to_an_abstract_model_or_ontology_or_methodology")

# term representation subtree

_n("quality_of_the_representation_of_terms", "representation_quality")
_n(
    "identification_by_properly_formed_URIs",
    "quality_of_the_representation_of_terms",
    rk="ratio",
    ev="content.uri_quality",
)
_n(
    "following_of_naming_conventions",
    "quality_of_the_representation_of_terms",
    rk="ratio",
    ev="content.naming_convention_ratio",
)
_n("LD:referential_correspondence", "quality_of_the_representation_of_terms")
_n("LD:typing", "quality_of_the_representation_of_terms", rk="ratio", ev="content.typing_ratio")
_n(
    "PD:vocabulary_understandability",
    "quality_of_the_representation_of_terms",
    rk="ratio",
    ev="content.labels_ratio",
)
_n(
    "LD:intelligibility",
    ("quality_of_the_representation_of_terms", "SF:Representation"),
    aliases=("SF:comprehensibility",),
)
_n(
    "PD:internationalization_understandability",
    "quality_of_the_representation_of_terms",
    rk="ratio",
    ev="content.language_tag_ratio",
)
_n("quality_of_existing_or_derivable_relations", "quality_of_the_representation_of_terms")
_n("use_of_binary_relations_only", "quality_of_existing_or_derivable_relations")
_n(
    "quality_of_existing_or_derivable_meta-statements",
    "quality_of_the_representation_of_terms",
)
_n(
    "quality_of_existing_or_derivable_contexts",
    "quality_of_existing_or_derivable_meta-statements",
)
_n(
    "provenance",
    "quality_of_existing_or_derivable_meta-statements",
    rk="score",
    ev="content.provenance_check",
)
_n("LD:Attribution", "provenance", rk="boolean", ev="content.provenance_check")
_n("LD:History", "provenance", rk="boolean", ev="content.provenance_check")
_n("LD:Authoritative", "provenance")
_n("loss-less_integration", "quality_of_the_representation_of_terms")
_n(
    "PD:timeliness",
    ("quality_of_the_representation_of_terms", "SF:Content", "Kahn:Contextual"),
    aliases=("SF:timeliness", "SF:Timeliness", "LD:Currency", "Kahn:Timeliness"),
)
_n("PD:newness", "PD:timeliness")
_n("PD:freshness", "PD:timeliness")
_n(
    "SF:licensing",
    ("quality_of_the_representation_of_terms", "SF:Usage"),
    aliases=("LD:licensed", "SF:Licencing"),
)
_n("PD:openness", "SF:licensing")
_n("security", "quality_of_the_representation_of_terms")
_n("LD:sustainable", "security")

# -- medium branch -----------------------------------------------------------

_n("description-medium_quality", "quality")
_n("quality_of_this_descr_medium", "description-medium_quality", sig=("medium",))
_n("descr_medium_quality_of_this_descr_medium", "quality_of_this_descr_medium", sig=("medium",))
_n(
    "quality_of_the_descr_content_related_to_this_descr_medium",
    "quality_of_this_descr_medium",
    sig=("medium",),
)
_n(
    "quality_of_the_descr_containers_related_to_descr_medium",
    "quality_of_this_descr_medium",
    sig=("medium",),
)
_n(
    "use_of_standard_formats",
    "description-medium_quality",
    rk="boolean",
    sig=("medium",),
    ev="medium.standard_format_flag",
)
_n(
    "use_of_structured_formats",
    "description-medium_quality",
    rk="boolean",
    sig=("medium",),
    ev="medium.structured_format_flag",
)
_n(
    "use_of_formats_distinguishing_structure_from_presentation",
    "description-medium_quality",
    rk="boolean",
    sig=("medium",),
    ev="medium.structure_presentation_flag",
)
_n(
    "use_of_notations_that_can_be_adapted_by_the_user",
    "description-medium_quality",
    rk="boolean",
    sig=("medium",),
    ev="medium.adaptable_syntax_flag",
)
_n(
    "use_of_machine-understandable-formats",
    "description-medium_quality",
    rk="boolean",
    sig=("medium",),
    ev="medium.machine_interpretable_flag",
)
_n(
    "use_of_formats_that_have_an_interpretation_in_some_logic",
    "use_of_machine-understandable-formats",
    rk="boolean",
    sig=("medium",),
    ev="medium.logic_interpretation_flag",
)
_n(
    "PD:format_interpretability",
    ("description-medium_quality", "Kahn:Representational"),
    rk="score",
    sig=("medium",),
    ev="medium.format_score",
    aliases=("Kahn:Interpretability",),
)
_n(
    "PD:human_and_machine_interpretability",
    "PD:format_interpretability",
    rk="score",
    sig=("medium",),
    ev="medium.readability_score",
)
_n("format_structural_quality", "description-medium_quality", sig=("medium",))
_n("format_abstract-expressiveness", "format_structural_quality", sig=("medium",))
_n(
    "syntactic_expressiveness",
    "format_structural_quality",
    rk="score",
    sig=("medium",),
    ev="medium.expressiveness_score",
)
_n(
    "syntactic_constructs_for_logical_constructs",
    "syntactic_expressiveness",
    rk="boolean",
    sig=("medium",),
    ev="medium.logical_constructs_flag",
)
_n(
    "syntactic_constructs_for_creating_shortcuts",
    "syntactic_expressiveness",
    rk="boolean",
    sig=("medium",),
    ev="medium.shortcut_constructs_flag",
)
_n(
    "syntactic_constructs_for_ontological_primitives",
    "syntactic_expressiveness",
    rk="boolean",
    sig=("medium",),
    ev="medium.ontological_primitives_flag",
)
_n(
    "referable_first-order-entities",
    "syntactic_expressiveness",
    rk="boolean",
    sig=("medium",),
    ev="medium.referable_entities_flag",
)
_n(
    "format_concision",
    ("description-medium_quality", "Kahn:Representational"),
    rk="ratio",
    sig=("medium",),
    ev="medium.concision",
    aliases=("Kahn:Concision",),
)
_n(
    "format_uniformity",
    ("description-medium_quality", "Kahn:Representational"),
    sig=("medium",),
    aliases=("Kahn:Consistency",),
)
_n("SF:Uniformity", ("format_uniformity", "SF:Representation"))
_n(
    "performance_of_this_format_for_this_task",
    "description-medium_quality",
    sig=("medium", "task"),
)

# -- container branch --------------------------------------------------------

_n("description-container_quality", "quality")
_n("quality_of_this_descr_container", "description-container_quality", sig=("container",))
_n(
    "descr_container_quality_of_this_descr_container",
    "quality_of_this_descr_container",
    sig=("container",),
)
_n(
    "quality_of_the_descr_content_related_to_this_descr_container",
    "quality_of_this_descr_container",
    sig=("container",),
)
_n(
    "quality_of_the_descr_media_related_to_descr_container",
    "quality_of_this_descr_container",
    sig=("container",),
)
_n(
    "quality_of_the_processes_supported_by_this_descr_container",
    "quality_of_this_descr_container",
    sig=("container",),
)
_n("storage_related_quality", "description-container_quality", sig=("container",))
_n("maximal_size_of_the_KB", "storage_related_quality", sig=("container",))
_n("container_based_modularization", "storage_related_quality", sig=("container",))
_n(
    "static_container_based_modularization",
    "container_based_modularization",
    sig=("container",),
)
_n(
    "dynamic_container_based_modularization",
    "container_based_modularization",
    sig=("container",),
)
_n(
    "LD:connectedness",
    "storage_related_quality",
    rk="ratio",
    sig=("container", "container"),
    ev="container.connectedness",
)
_n("assertion_related_quality", "description-container_quality", sig=("container",))
_n("ontological_flexibility", "assertion_related_quality", sig=("container",))
_n(
    "LDpattern:annotation",
    ("assertion_related_quality", "LDpattern:Publishing_pattern"),
    aliases=("LDpattern:Annotation",),
)
_n(
    "LDpattern:progressive_enrichment",
    ("assertion_related_quality", "LDpattern:Publishing_pattern"),
    aliases=("LDpattern:Progressive_Enrichment",),
)
_n("checking_possibilities", "assertion_related_quality", sig=("container",))
_n("information_retrieval_related_quality", "description-container_quality", sig=("container",))
_n("published_or_given_metadata", "description-container_quality", sig=("container",))
_n(
    "LDpattern:Document_Type",
    ("published_or_given_metadata", "LDpattern:Publishing_pattern"),
)
_n("object_accessibility", "description-container_quality", sig=("container",))
_n(
    "PD:accessibility",
    ("object_accessibility", "SF:System", "Kahn:Accessibility"),
    rk="set",
    sig=("container",),
    ev="container.accessibility_methods",
    aliases=("SF:Accessibility",),
)
_n(
    "PD:availability",
    "object_accessibility",
    rk="ratio",
    sig=("container",),
    ev="container.availability",
    note="percentage of time a given service is up",
)
_n("SF:performance", ("object_accessibility", "SF:System"), aliases=("SF:Performance",))
_n(
    "PD:response_time",
    "object_accessibility",
    rk="duration",
    sig=("container",),
    ev="container.response_time_stats",
)
_n(
    "PD:robustness",
    "object_accessibility",
    rk="score",
    sig=("container",),
    ev="container.robustness",
)
_n(
    "LDpattern:parallel_loading",
    ("PD:robustness", "LDpattern:Application_pattern"),
    aliases=("LDpattern:Parallel_Loading",),
)
_n("querying_possibilities", "object_accessibility", sig=("container",))
_n("interface_personalization", "description-container_quality", sig=("container",))

# -- external catalog spines -------------------------------------------------

_n("SF:Quality_criterion", "quality")
_n("SF:Content", "SF:Quality_criterion")
_n("SF:Representation", "SF:Quality_criterion")
_n("SF:Versatility", "SF:Representation")
_n("SF:Usage", "SF:Quality_criterion")
_n("SF:System", "SF:Quality_criterion")

_n("Kahn:Quality_dimension", "quality")
_n("Kahn:Intrinsic", "Kahn:Quality_dimension")
_n("Kahn:Believability", "Kahn:Intrinsic")
_n("Kahn:Objectivity", "Kahn:Intrinsic")
_n("Kahn:Reputation", "Kahn:Intrinsic")
_n("Kahn:Contextual", "Kahn:Quality_dimension")
_n("Kahn:Value-added", "Kahn:Contextual")
_n("Kahn:Representational", "Kahn:Quality_dimension")
_n("Kahn:Ease_of_understanding", "Kahn:Representational")
_n("Kahn:Accessibility", "Kahn:Quality_dimension")
_n("Kahn:Access_security", "Kahn:Accessibility")

_n("LDpattern:Linked_Data_pattern", "quality")
_n("LDpattern:Identifier_pattern", "LDpattern:Linked_Data_pattern")
for _leaf in (
    "Hierarchical_URIs",
    "Literal_Keys",
    "Natural_Keys",
    "Patterned_URIs",
    "Proxy_URIs",
    "Shared_Keys",
    "URL_Slug",
):
    _n(f"LDpattern:{_leaf}", "LDpattern:Identifier_pattern")
_n("LDpattern:Modelling_pattern", "LDpattern:Linked_Data_pattern")
for _leaf in (
    "Custom_Datatype",
    "Index_Resources",
    "Label_Everything",
    "Link_Not_Label",
    "Multi-Lingual_Literal",
    "N-Ary_Relation",
    "Ordered_List",
    "Ordering_Relation",
    "Preferred_Label",
    "Qualified_Relation",
    "Reified_Statement",
    "Repeated_Property",
    "Topic_Relation",
    "Typed_Literal",
):
    _n(f"LDpattern:{_leaf}", "LDpattern:Modelling_pattern")
_n("LDpattern:Publishing_pattern", "LDpattern:Linked_Data_pattern")
for _leaf in (
    "Autodiscovery",
    "Edit_Trail",
    "Embedded_Metadata",
    "Equivalence_Links",
    "Link_Base",
    "Named_Graphs",
    "Primary_Topic",
    "SeeAlso",
):
    _n(f"LDpattern:{_leaf}", "LDpattern:Publishing_pattern")
_n("LDpattern:Application_pattern", "LDpattern:Linked_Data_pattern")
for _leaf in (
    "Assertion_Query",
    "Blackboard",
    "Bounded_Description",
    "Composite_Descriptions",
    "Follow_Your_Nose",
    "Missing_Isn't_Broken",
    "Parallel_Retrieval",
    "Resource_Caching",
    "Schema_Annotation",
    "Smushing",
):
    _n(f"LDpattern:{_leaf}", "LDpattern:Application_pattern")

_n("ODP:Ontology_Design_Pattern", "quality")
_n("ODP:Structural_ODP", "ODP:Ontology_Design_Pattern")
_n("ODP:Architectural_ODP", "ODP:Structural_ODP")
_n("ODP:Logical_ODP", "ODP:Structural_ODP")
_n("ODP:Logical_macro_ODP", "ODP:Logical_ODP")
_n("ODP:Transformation_ODP", "ODP:Logical_ODP")
_n("ODP:Correspondence_ODP", "ODP:Ontology_Design_Pattern")
_n("ODP:Alignment_ODP", "ODP:Correspondence_ODP")
_n("ODP:Re-engineering_ODP", "ODP:Correspondence_ODP")
_n("ODP:Schema_reengineering_ODP", "ODP:Re-engineering_ODP")
_n("ODP:Refactoring_ODP", "ODP:Schema_reengineering_ODP")
_n("ODP:Content_ODP", "ODP:Ontology_Design_Pattern")
_n("ODP:Reasoning_ODP", "ODP:Ontology_Design_Pattern")
_n("ODP:Lexico-syntactic_ODP", "ODP:Ontology_Design_Pattern")
_n("ODP:Presentation_ODP", "ODP:Ontology_Design_Pattern")
_n("ODP:Naming_ODP", "ODP:Presentation_ODP")
_n("ODP:Annotation_ODP", "ODP:Presentation_ODP")


def load_builtin() -> TaxonomyGraph:
    """A fresh, validated taxonomy instance."""
    graph = TaxonomyGraph()
    for node in _SPECS:
        graph.add(node)
    problems = graph.validate()
    if problems:
        raise StructuralError("built-in taxonomy is unsound: " + "; ".join(problems))
    return graph
