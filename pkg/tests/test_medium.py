"""Format profile scoring, concision, and the serialization comparison."""

import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ldqual.errors import ConfigurationError, EmptyTargetError, UnknownFormatError
from ldqual.metrics import medium
from ldqual.metrics.medium import FormatProfile
from ldqual.parse import (
    NQUADS,
    NTRIPLES,
    RDFXML_UNSUPPORTED,
    TURTLE,
    SerializationStats,
    parse,
    serialize,
    stats,
)
from ldqual.rdf import Dataset, Graph, Iri, Literal, Triple

from strategies import NS

ALL_COMPONENTS = medium._BOOL_COMPONENTS + ("human_readability",) + medium.EXPRESSIVENESS_FLAGS


def make_profile(true_fields=(), rank=1, flags=(), format_id="x"):
    kwargs = {name: (name in true_fields) for name in medium._BOOL_COMPONENTS}
    return FormatProfile(
        format_id=format_id,
        human_readability_rank=rank,
        expressiveness_flags=frozenset(flags),
        **kwargs,
    )


def only(*names):
    """Weights zeroing everything but the named components."""
    weights = {name: 0.0 for name in ALL_COMPONENTS}
    for name in names:
        weights[name] = 1.0
    return weights


# --- format_score -----------------------------------------------------------


def test_format_score_all_true_uniform():
    profile = make_profile(medium._BOOL_COMPONENTS, rank=1, flags=medium.EXPRESSIVENESS_FLAGS)
    value, details = medium.format_score(profile, profiles={"x": profile})
    assert value == 1.0
    assert set(details) == set(ALL_COMPONENTS)


def test_readability_prefers_terse_notation_over_rdfxml():
    # ranked readability is the one non-boolean component
    weights = only("human_readability")
    nt, _ = medium.format_score(medium.profile_for("ntriples"), weights)
    xml, _ = medium.format_score(medium.profile_for("rdfxml"), weights)
    assert nt > xml


def test_is_standard_projection():
    value, _ = medium.format_score(medium.profile_for("turtle"), only("is_standard"))
    assert value == 1.0


def test_format_score_rejects_bad_weights():
    profile = medium.profile_for("turtle")
    with pytest.raises(ConfigurationError):
        medium.format_score(profile, {"no_such_component": 1.0})
    with pytest.raises(ConfigurationError):
        medium.format_score(profile, {"is_standard": -1.0})
    with pytest.raises(ConfigurationError):
        medium.format_score(profile, {name: 0.0 for name in ALL_COMPONENTS})


def test_uniform_bool_weights_give_m_over_k():
    # every k-subset of the boolean fields, every truth pattern inside it
    fields = medium._BOOL_COMPONENTS
    for k in range(1, len(fields) + 1):
        for window in itertools.combinations(fields, k):
            for m in range(k + 1):
                profile = make_profile(window[:m])
                value, _ = medium.format_score(
                    profile, only(*window), profiles={"x": profile}
                )
                assert value == pytest.approx(m / k)


@settings(max_examples=150, deadline=None)
@given(
    st.sets(st.sampled_from(medium._BOOL_COMPONENTS)),
    st.sampled_from(medium._BOOL_COMPONENTS),
    st.dictionaries(
        st.sampled_from(ALL_COMPONENTS),
        st.floats(0.0, 5.0, allow_nan=False),
        max_size=6,
    ),
)
def test_format_score_monotone_in_profile_fields(true_fields, flipped, weights):
    if flipped in true_fields:
        return
    lower = make_profile(true_fields)
    upper = make_profile(set(true_fields) | {flipped})
    table = {"x": lower}
    try:
        before, _ = medium.format_score(lower, weights, profiles=table)
        after, _ = medium.format_score(upper, weights, profiles={"x": upper})
    except ConfigurationError:
        return  # all weights zero
    assert after >= before


# --- the per-criterion evaluators -------------------------------------------


def test_readability_score_is_rank_over_max():
    value, details = medium.readability_score(medium.profile_for("nquads"))
    assert value == 0.5
    assert details == {"rank": 2, "max_rank": 4}


def test_expressiveness_score_counts_flags():
    assert medium.expressiveness_score(medium.profile_for("turtle"))[0] == 0.5
    assert medium.expressiveness_score(medium.profile_for("ntriples"))[0] == 0.25


def test_flag_evaluators_read_the_profile():
    turtle = medium.profile_for("turtle")
    assert medium.standard_format_flag(turtle)[0] is True
    assert medium.structured_format_flag(turtle)[0] is True
    assert medium.structure_presentation_flag(turtle)[0] is False
    assert medium.structure_presentation_flag(medium.profile_for("rdfxml"))[0] is True
    assert medium.shortcut_constructs_flag(turtle)[0] is True
    assert medium.shortcut_constructs_flag(medium.profile_for("ntriples"))[0] is False
    assert medium.referable_entities_flag(turtle)[0] is True
    assert medium.logical_constructs_flag(turtle)[0] is False
    assert medium.ontological_primitives_flag(turtle)[0] is False


def test_profile_for_unknown_format():
    with pytest.raises(UnknownFormatError):
        medium.profile_for("morse")


def test_profile_validation():
    with pytest.raises(ConfigurationError):
        make_profile(rank=0)
    with pytest.raises(ConfigurationError):
        make_profile(flags=("telepathy",))


def test_load_format_profiles(tmp_path):
    path = tmp_path / "formats.json"
    entry = {
        "format_id": "homebrew",
        "is_standard": False,
        "is_structured": True,
        "separates_structure_from_presentation": False,
        "user_adaptable_syntax": True,
        "machine_interpretable": True,
        "logic_interpretation": False,
        "human_readability_rank": 2,
        "expressiveness_flags": ["shortcut-constructs"],
    }
    path.write_text(json.dumps({"formats": [entry]}), encoding="utf-8")
    table = medium.load_format_profiles(path)
    assert table["homebrew"].user_adaptable_syntax is True

    path.write_text(json.dumps({"formats": [entry, entry]}), encoding="utf-8")
    with pytest.raises(ConfigurationError):
        medium.load_format_profiles(path)

    del entry["is_standard"]
    path.write_text(json.dumps({"formats": [entry]}), encoding="utf-8")
    with pytest.raises(ConfigurationError):
        medium.load_format_profiles(path)

    path.write_text(json.dumps({"formats": []}), encoding="utf-8")
    with pytest.raises(ConfigurationError):
        medium.load_format_profiles(path)


# --- concision --------------------------------------------------------------


def test_concision_arithmetic():
    value, _ = medium.concision(SerializationStats(100, 1, NTRIPLES))
    assert value == 0.01


def test_concision_rejects_empty_document():
    with pytest.raises(EmptyTargetError):
        medium.concision(SerializationStats(0, 0, NTRIPLES))


def test_concision_doubling_invariance():
    one = medium.concision(SerializationStats(100, 1, NTRIPLES))[0]
    two = medium.concision(SerializationStats(200, 2, NTRIPLES))[0]
    assert one == two


def _shared_namespace_dataset():
    graph = Graph(
        Triple(Iri(NS + f"s{i}"), Iri(NS + "p"), Iri(NS + f"o{i}")) for i in range(6)
    )
    return Dataset(graph)


def test_turtle_more_concise_than_ntriples():
    # prefixed turtle spends the namespace once; the line formats repeat it
    turtle_doc = (
        b"@prefix t: <http://t.example/> .\n"
        b"t:s1 t:p t:o1 ; t:q t:o2 .\n"
        b"t:s2 t:p t:o3 ; t:q t:o4 .\n"
    )
    dataset, _ = parse(turtle_doc, TURTLE, strict=True)
    nt_doc = serialize(dataset, NTRIPLES)
    turtle = stats(turtle_doc, TURTLE)
    ntriples = stats(nt_doc, NTRIPLES)
    assert turtle.triple_count == ntriples.triple_count
    assert turtle.byte_count < ntriples.byte_count
    assert medium.concision(turtle)[0] > medium.concision(ntriples)[0]


# --- compare_serializations -------------------------------------------------


def test_compare_single_format_matches_stats():
    dataset = _shared_namespace_dataset()
    payload = serialize(dataset, NTRIPLES)
    expected = stats(payload, NTRIPLES)
    (row,) = medium.compare_serializations(dataset, [NTRIPLES])
    assert row.available
    assert row.byte_count == expected.byte_count
    assert row.triple_count == expected.triple_count
    assert row.concision == expected.triple_count / expected.byte_count


def test_compare_nquads_at_least_ntriples_bytes():
    dataset = _shared_namespace_dataset()
    by_id = {r.format.id: r for r in medium.compare_serializations(dataset, [NTRIPLES, NQUADS])}
    assert by_id["nquads"].byte_count >= by_id["ntriples"].byte_count


def test_compare_empty_dataset():
    rows = medium.compare_serializations(Dataset(), [NTRIPLES, NQUADS])
    for row in rows:
        assert row.available
        assert (row.byte_count, row.triple_count) == (0, 0)
        assert row.concision is None


def test_compare_unsupported_format_unavailable():
    dataset = _shared_namespace_dataset()
    (row,) = medium.compare_serializations(dataset, [RDFXML_UNSUPPORTED])
    assert not row.available
    assert row.byte_count is None and row.concision is None


def test_compare_unsupported_format_with_external_bytes():
    dataset = _shared_namespace_dataset()
    (row,) = medium.compare_serializations(
        dataset, [RDFXML_UNSUPPORTED], external_bytes={"rdfxml-unsupported": 500}
    )
    assert row.available
    assert row.byte_count == 500
    assert row.triple_count == dataset.total_triples()
    assert row.concision == dataset.total_triples() / 500
