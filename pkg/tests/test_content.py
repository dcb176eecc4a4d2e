"""Content metrics against hand-counted fixtures and the naive oracles."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ldqual.errors import EmptyTargetError
from ldqual.metrics import content
from ldqual.metrics.container import ScriptedTransport
from ldqual.rdf import Graph, Iri, Literal, Triple, TriplePattern, Variable
from ldqual.schema import EMPTY_SCHEMA, SchemaSpec
from ldqual.vocab import (
    DEFAULT_ATTRIBUTION_PROPERTIES,
    DEFAULT_HISTORY_PROPERTIES,
    RDF_TYPE,
    RDFS_LABEL,
    XSD_INTEGER,
)

import oracles
from strategies import NS, contradiction_predicates, graphs, patterns, schemas

TYPE = Iri(RDF_TYPE)
LABEL = Iri(RDFS_LABEL)

S1, S2, S3, S4, S5 = (Iri(NS + n) for n in ("s1", "s2", "s3", "s4", "s5"))
P1, P2, P3 = (Iri(NS + n) for n in ("p1", "p2", "p3"))
C1, C2 = Iri(NS + "C1"), Iri(NS + "C2")
V1, V2 = Iri(NS + "v1"), Iri(NS + "v2")

BAD_INT = Literal("not-a-number", datatype=XSD_INTEGER)

FUNCTIONAL_P1 = SchemaSpec(functional_properties=(P1,))
DISJOINT_C1_C2 = SchemaSpec(disjoint_class_pairs=((C1, C2),))


def g(*triples):
    return Graph(triples)


# --- conflicts and pairwise consistency -------------------------------------


def test_conflicts_conflict_free():
    graph = g(Triple(S1, P1, V1), Triple(S2, P2, V2))
    assert content.conflicts(graph, FUNCTIONAL_P1) == ()


def test_conflicts_functional_pair():
    graph = g(Triple(S1, P1, V1), Triple(S1, P1, V2))
    found = content.conflicts(graph, FUNCTIONAL_P1)
    assert len(found) == 1
    assert found[0].rule.kind == "functional-property"
    assert {found[0].first, found[0].second} == set(graph)


def test_conflicts_disjoint_pair():
    graph = g(Triple(S1, TYPE, C1), Triple(S1, TYPE, C2))
    found = content.conflicts(graph, DISJOINT_C1_C2)
    assert len(found) == 1
    assert found[0].rule.kind == "disjoint-classes"


def test_statement_consistent_with_itself():
    t = Triple(S1, P1, V1)
    assert content.consistency_of_statement_wrt(t, t, FUNCTIONAL_P1)


def test_statement_functional_pair_inconsistent():
    a, b = Triple(S1, P1, V1), Triple(S1, P1, V2)
    assert not content.consistency_of_statement_wrt(a, b, FUNCTIONAL_P1)


def test_statement_no_rules_no_conflicts():
    a, b = Triple(S1, P1, V1), Triple(S1, P1, V2)
    assert content.consistency_of_statement_wrt(a, b, EMPTY_SCHEMA)


def test_kb_consistent_flag():
    clean = g(Triple(S1, P1, V1))
    dirty = g(Triple(S1, P1, V1), Triple(S1, P1, V2))
    ok, details = content.kb_consistent(clean, FUNCTIONAL_P1)
    assert ok and details["conflict_count"] == 0
    ok, details = content.kb_consistent(dirty, FUNCTIONAL_P1)
    assert not ok and details["conflict_count"] == 1


# --- consistency ratios -----------------------------------------------------


def test_ratio_pattern_all_variable_clean():
    graph = g(Triple(S1, P1, V1), Triple(S2, P2, V2), Triple(S3, P3, V1))
    p = TriplePattern(Variable("s"), Variable("p"), Variable("o"))
    assert content.consistency_ratio_pattern(p, graph) == 1.0


def test_ratio_pattern_quarter():
    # four triples, two match (?s, ?p, v2), one matcher is half of a
    # functional clash: 1 clean matcher over 4 statements
    graph = g(
        Triple(S1, P1, V1),
        Triple(S1, P1, V2),
        Triple(S1, P2, V1),
        Triple(S2, P2, V2),
    )
    p = TriplePattern(Variable("s"), Variable("p"), V2)
    assert content.consistency_ratio_pattern(p, graph, FUNCTIONAL_P1) == 0.25


def test_ratio_pattern_no_match():
    graph = g(Triple(S1, P1, V1), Triple(S2, P2, V2))
    p = TriplePattern(S3, Variable("p"), Variable("o"))
    assert content.consistency_ratio_pattern(p, graph) == 0.0


def test_ratio_all_clean_graph():
    graph = g(Triple(S1, P1, V1), Triple(S2, P2, V2))
    value, details = content.consistency_ratio_all(graph, FUNCTIONAL_P1)
    assert value == 1.0
    assert details["inconsistent_statements"] == 0


def test_ratio_all_two_of_ten_dirty():
    fillers = [Triple(Iri(NS + f"f{i}"), P2, Literal(str(i))) for i in range(8)]
    graph = Graph(fillers + [Triple(S1, P1, V1), Triple(S1, P1, V2)])
    value, details = content.consistency_ratio_all(graph, FUNCTIONAL_P1)
    assert value == 0.8
    assert details["inconsistent_statements"] == 2
    assert details["evidence"]


def test_ratio_of_term_two_thirds():
    # the ill-typed literal conflicts with itself, the frame's other two
    # statements stay clean
    graph = g(
        Triple(S1, P1, BAD_INT),
        Triple(S1, P2, V1),
        Triple(S1, P3, V2),
        Triple(S2, P1, V1),
    )
    assert content.consistency_ratio_of_term(S1, graph) == pytest.approx(2 / 3)
    assert content.consistency_ratio_of_term(S2, graph) == 1.0


def test_ratio_of_relation_on_term():
    graph = g(Triple(S1, P1, BAD_INT), Triple(S1, P1, V1), Triple(S1, P2, V2))
    assert content.consistency_ratio_of_relation_on_term(P1, S1, graph) == 0.5
    assert content.consistency_ratio_of_relation_on_term(P2, S1, graph) == 1.0


def test_ratio_empty_targets_raise():
    with pytest.raises(EmptyTargetError):
        content.consistency_ratio_all(Graph())
    with pytest.raises(EmptyTargetError):
        content.consistency_ratio_of_term(S3, g(Triple(S1, P1, V1)))
    with pytest.raises(EmptyTargetError):
        content.consistency_ratio_of_relation_on_term(P2, S1, g(Triple(S1, P1, V1)))


def test_pd_consistency_clean():
    graph = g(Triple(S1, P1, V1), Triple(S2, P2, V2))
    value, details = content.pd_consistency(graph)
    assert value == 1.0
    assert details["frame_count"] == 2


def test_pd_consistency_one_of_three_frames():
    graph = g(
        Triple(S1, P1, BAD_INT),
        Triple(S1, P2, V1),
        Triple(S2, P1, V1),
        Triple(S3, P2, V2),
    )
    value, details = content.pd_consistency(graph)
    assert value == pytest.approx(2 / 3)
    assert details["conflicting_frames"] == 1


def test_pd_consistency_every_frame_conflicting():
    graph = g(Triple(S1, P1, BAD_INT), Triple(S2, P2, BAD_INT))
    value, _ = content.pd_consistency(graph)
    assert value == 0.0


# --- coverage, coherence, completeness --------------------------------------

COVERAGE_SCHEMA = SchemaSpec(required_properties_per_class={C1: (P1, P2)})

COVERAGE_GRAPH = g(
    Triple(S1, TYPE, C1),
    Triple(S1, P1, V1),
    Triple(S1, P2, V2),
    Triple(S2, TYPE, C1),
    Triple(S2, P1, V1),
    Triple(S2, P2, V1),
    Triple(S3, TYPE, C1),
    Triple(S3, P1, V2),
)


def test_coverage_two_of_three():
    value, details = content.coverage(COVERAGE_GRAPH, COVERAGE_SCHEMA)
    assert value == pytest.approx(2 / 3)
    assert details["covered_frames"] == 2
    assert details["typed_frames"] == 3


def test_coherence_five_sixths():
    value, _ = content.coherence(COVERAGE_GRAPH, COVERAGE_SCHEMA)
    assert value == pytest.approx(5 / 6)


def test_coverage_and_coherence_full():
    graph = g(Triple(S1, TYPE, C1), Triple(S1, P1, V1), Triple(S1, P2, V2))
    assert content.coverage(graph, COVERAGE_SCHEMA)[0] == 1.0
    assert content.coherence(graph, COVERAGE_SCHEMA)[0] == 1.0


def test_coverage_requires_instances():
    with pytest.raises(EmptyTargetError):
        content.coverage(g(Triple(S1, P1, V1)), COVERAGE_SCHEMA)
    with pytest.raises(EmptyTargetError):
        content.coverage(COVERAGE_GRAPH, EMPTY_SCHEMA)


def test_intensional_completeness():
    graph = g(Triple(S1, P1, V1), Triple(S2, P2, V2))
    assert content.intensional_completeness(graph, COVERAGE_SCHEMA)[0] == 1.0
    schema = SchemaSpec(required_properties_per_class={C1: (P1, P3)})
    assert content.intensional_completeness(graph, schema)[0] == 0.5


def test_extensional_completeness_three_of_four():
    schema = SchemaSpec(required_terms=(S1, S2, V1, Iri(NS + "absent")))
    graph = g(Triple(S1, P1, V1), Triple(S2, P2, V2))
    value, details = content.extensional_completeness(graph, schema)
    assert value == 0.75
    assert details == {"present": 3, "required": 4}


def test_lds_completeness_two_of_five():
    graph = g(
        Triple(S1, LABEL, Literal("one")),
        Triple(S2, LABEL, Literal("two")),
        Triple(S3, P1, V1),
        Triple(S4, P1, V1),
        Triple(S5, P2, V2),
    )
    value, _ = content.lds_completeness(graph, LABEL)
    assert value == 0.4


# --- term representation ----------------------------------------------------


def test_typing_ratio_quarter():
    graph = g(
        Triple(S1, TYPE, C1),
        Triple(S2, P1, V1),
        Triple(S3, P1, V1),
        Triple(S4, P2, V2),
    )
    assert content.typing_ratio(graph)[0] == 0.25


def test_typing_ratio_extremes():
    assert content.typing_ratio(g(Triple(S1, TYPE, C1)))[0] == 1.0
    assert content.typing_ratio(g(Triple(S1, P1, Literal("x"))))[0] == 0.0


def test_uri_quality_all_http():
    graph = g(Triple(S1, P1, V1))
    assert content.uri_quality(graph)[0] == 1.0


def test_uri_quality_three_of_four():
    graph = g(Triple(S1, P1, V1), Triple(S1, P1, Iri("urn:isbn:123")))
    value, details = content.uri_quality(graph)
    assert value == 0.75
    assert details["rejected"] == ["urn:isbn:123"]


def test_uri_quality_urn_only():
    graph = g(Triple(Iri("urn:a"), Iri("urn:b"), Iri("urn:c")))
    assert content.uri_quality(graph)[0] == 0.0


def test_uri_quality_with_transport_samples_dereference():
    graph = g(Triple(S1, P1, V1))
    transport = ScriptedTransport(
        {
            S1.value: [{"success": True, "latency_ms": 5, "media_type": "text/turtle"}],
        }
    )
    value, details = content.uri_quality(graph, transport, sample_size=1, seed=0)
    assert value == 1.0
    assert details["dereferenceable"] == 1.0
    assert details["dereference_sampled"] == 1


def test_labels_ratio_all_labeled():
    graph = g(
        Triple(S1, LABEL, Literal("one")),
        Triple(S2, LABEL, Literal("two")),
    )
    assert content.labels_ratio(graph)[0] == 1.0


def test_language_tag_ratio_two_of_five():
    graph = g(
        Triple(S1, P1, Literal("bonjour", language="fr")),
        Triple(S1, P2, Literal("hallo", language="de")),
        Triple(S2, P1, Literal("plain one")),
        Triple(S2, P2, Literal("plain two")),
        Triple(S3, P1, Literal("plain three")),
        # typed literals are not plain text, so this one is out of scope
        Triple(S3, P2, Literal("42", datatype=XSD_INTEGER)),
    )
    value, details = content.language_tag_ratio(graph)
    assert value == 0.4
    assert details == {"plain_literals": 5, "tagged": 2}


def test_naming_convention_examples():
    assert content.follows_naming_convention("hasPart")
    assert not content.follows_naming_convention("X9")


def test_naming_convention_ratio_half():
    graph = g(Triple(Iri(NS + "X9"), Iri(NS + "hasPart"), Literal("x")))
    value, details = content.naming_convention_ratio(graph)
    assert value == 0.5
    assert details["rejected"] == [NS + "X9"]


# --- links, redundancy, provenance ------------------------------------------


def test_link_stats_empty():
    values, _ = content.link_stats(Graph())
    assert values == {"out_relations": 0.0, "outdegree": 0, "external_links": 0}


def test_link_stats_two_foreign_of_five():
    other = "http://other.example/"
    graph = g(
        Triple(S1, P1, Iri(other + "a")),
        Triple(S1, P2, Iri(other + "b")),
        Triple(S2, P1, V1),
        Triple(S2, P2, Literal("x")),
        Triple(S3, P1, S1),
    )
    values, details = content.link_stats(graph, local_namespaces=(NS,))
    assert values == {"out_relations": 0.4, "outdegree": 5, "external_links": 2}
    assert details["local_namespaces"] == [NS]


def test_link_stats_all_local():
    graph = g(Triple(S1, P1, V1), Triple(S2, P2, S1))
    values, _ = content.link_stats(graph, local_namespaces=(NS,))
    assert values["out_relations"] == 0.0


def test_link_stats_infers_local_namespaces():
    graph = g(Triple(S1, P1, Iri("http://other.example/x")), Triple(S2, P2, V1))
    values, details = content.link_stats(graph)
    assert NS in details["local_namespaces"]
    assert values["external_links"] == 1


def test_redundancy_no_schema():
    graph = g(Triple(S1, P1, V1), Triple(S2, P2, V2))
    assert content.redundancy_ratio(graph)[0] == 1.0


def test_redundancy_nine_of_ten():
    schema = SchemaSpec(subclass_edges=((C1, C2),))
    fillers = [Triple(Iri(NS + f"f{i}"), P2, Literal(str(i))) for i in range(8)]
    graph = Graph(fillers + [Triple(S1, TYPE, C1), Triple(S1, TYPE, C2)])
    value, details = content.redundancy_ratio(graph, schema)
    assert value == 0.9
    assert details["redundant"] == 1
    assert "C2" in details["evidence"][0]


def test_redundancy_clean_graph():
    schema = SchemaSpec(subclass_edges=((C1, C2),))
    graph = g(Triple(S1, TYPE, C1), Triple(S1, P1, V1))
    assert content.redundancy_ratio(graph, schema)[0] == 1.0


CREATOR = Iri(DEFAULT_ATTRIBUTION_PROPERTIES[0])
CREATED = Iri(DEFAULT_HISTORY_PROPERTIES[0])


def test_provenance_both_present():
    graph = g(
        Triple(S1, CREATOR, Literal("someone")),
        Triple(S1, CREATED, Literal("2021-01-01")),
    )
    values, _ = content.provenance_check(graph)
    assert values == {"score": 1.0, "attribution": True, "history": True}


def test_provenance_absent():
    graph = g(Triple(S1, P1, V1))
    values, _ = content.provenance_check(graph)
    assert values == {"score": 0.0, "attribution": False, "history": False}


def test_provenance_creator_only():
    graph = g(Triple(S1, CREATOR, Literal("someone")))
    values, _ = content.provenance_check(graph)
    assert values == {"score": 0.5, "attribution": True, "history": False}


# --- properties against the oracles -----------------------------------------


@settings(max_examples=120, deadline=None)
@given(patterns(), graphs(), schemas(), contradiction_predicates())
def test_pattern_ratio_matches_oracle(pattern, graph, schema, cps):
    got = content.consistency_ratio_pattern(pattern, graph, schema, cps)
    assert got == float(oracles.oracle_pattern_ratio(pattern, graph, schema, cps))


@settings(max_examples=120, deadline=None)
@given(graphs(), schemas(), contradiction_predicates())
def test_all_ratio_matches_oracle(graph, schema, cps):
    got, _ = content.consistency_ratio_all(graph, schema, cps)
    assert got == float(oracles.oracle_all_ratio(graph, schema, cps))


@settings(max_examples=120, deadline=None)
@given(graphs(), schemas(), contradiction_predicates())
def test_pd_matches_oracle(graph, schema, cps):
    got, _ = content.pd_consistency(graph, schema, cps)
    assert got == float(oracles.oracle_pd_consistency(graph, schema, cps))


@settings(max_examples=100, deadline=None)
@given(graphs(), schemas(), contradiction_predicates())
def test_all_variable_pattern_equals_all_ratio(graph, schema, cps):
    p = TriplePattern(Variable("s"), Variable("p"), Variable("o"))
    assert content.consistency_ratio_pattern(p, graph, schema, cps) == (
        content.consistency_ratio_all(graph, schema, cps)[0]
    )


@settings(max_examples=100, deadline=None)
@given(graphs(), schemas(), contradiction_predicates())
def test_pd_is_one_iff_no_conflicts(graph, schema, cps):
    value, _ = content.pd_consistency(graph, schema, cps)
    assert (value == 1.0) == (content.conflicts(graph, schema, cps) == ())


@settings(max_examples=100, deadline=None)
@given(graphs(), schemas())
def test_redundancy_matches_oracle(graph, schema):
    got, details = content.nonredundancy_ratio(graph, schema)
    expected = oracles.oracle_redundant(graph, schema)
    assert details["redundant"] == len(expected)
    assert got == float(Fraction(len(graph) - len(expected), len(graph)))


@settings(max_examples=100, deadline=None)
@given(graphs(), schemas())
def test_redundancy_ignores_assertion_order(graph, schema):
    reordered = Graph(sorted(graph, key=repr, reverse=True))
    assert content.nonredundancy_ratio(graph, schema)[0] == (
        content.nonredundancy_ratio(reordered, schema)[0]
    )


@settings(max_examples=100, deadline=None)
@given(graphs(), schemas())
def test_coverage_and_coherence_match_oracle(graph, schema):
    expected_cov = oracles.oracle_coverage(graph, schema)
    expected_coh = oracles.oracle_coherence(graph, schema)
    if expected_cov is None:
        with pytest.raises(EmptyTargetError):
            content.coverage(graph, schema)
        with pytest.raises(EmptyTargetError):
            content.coherence(graph, schema)
        return
    count, ratio = expected_cov
    value, details = content.coverage(graph, schema)
    assert (value, details["covered_frames"]) == (float(ratio), count)
    assert content.coherence(graph, schema)[0] == float(expected_coh)


@settings(max_examples=100, deadline=None)
@given(graphs(), schemas())
def test_full_coverage_forces_full_coherence(graph, schema):
    expected = oracles.oracle_coverage(graph, schema)
    if expected is None or expected[1] != 1:
        return
    assert content.coherence(graph, schema)[0] == 1.0


@settings(max_examples=100, deadline=None)
@given(graphs(), schemas(), contradiction_predicates())
def test_ratios_stay_in_unit_interval(graph, schema, cps):
    checks = [
        content.consistency_ratio_all(graph, schema, cps)[0],
        content.pd_consistency(graph, schema, cps)[0],
        content.nonredundancy_ratio(graph, schema)[0],
        content.typing_ratio(graph)[0],
    ]
    for value in checks:
        assert 0.0 <= value <= 1.0


# --- monotonicity, constructed ----------------------------------------------


def test_pattern_ratio_dilution_by_nonmatching_triple():
    base = g(Triple(S1, P1, V1), Triple(S2, P1, V1))
    p = TriplePattern(Variable("s"), P1, V1)
    before = content.consistency_ratio_pattern(p, base)
    grown = Graph(list(base) + [Triple(S3, P2, V2)])
    after = content.consistency_ratio_pattern(p, grown)
    assert after < before


def test_pattern_ratio_clean_matcher_never_hurts():
    base = g(Triple(S1, P1, V1), Triple(S2, P2, V2), Triple(S3, P3, V1))
    p = TriplePattern(Variable("s"), P1, V1)
    before = content.consistency_ratio_pattern(p, base)
    grown = Graph(list(base) + [Triple(S4, P1, V1)])
    after = content.consistency_ratio_pattern(p, grown)
    assert after >= before
