from ldqual.rdf import Graph, Iri, Literal, Triple
from ldqual.schema import SchemaSpec
from ldqual.vocab import (
    OWL_DISJOINT_WITH,
    OWL_FUNCTIONAL_PROPERTY,
    RDF_TYPE,
    RDFS_DOMAIN,
    RDFS_RANGE,
    RDFS_SUBCLASSOF,
    RDFS_SUBPROPERTYOF,
    REQ_REQUIRED_PROPERTY,
    REQ_REQUIRED_TERM,
)

NS = "http://s.example/"
PERSON, ORG, AGENT = Iri(NS + "Person"), Iri(NS + "Org"), Iri(NS + "Agent")
NAME, KNOWS = Iri(NS + "name"), Iri(NS + "knows")


def _schema_graph():
    g = Graph()
    g.add(Triple(PERSON, Iri(RDFS_SUBCLASSOF), AGENT))
    g.add(Triple(ORG, Iri(RDFS_SUBCLASSOF), AGENT))
    g.add(Triple(PERSON, Iri(OWL_DISJOINT_WITH), ORG))
    g.add(Triple(NAME, Iri(RDF_TYPE), Iri(OWL_FUNCTIONAL_PROPERTY)))
    g.add(Triple(KNOWS, Iri(RDFS_DOMAIN), PERSON))
    g.add(Triple(KNOWS, Iri(RDFS_RANGE), PERSON))
    g.add(Triple(PERSON, Iri(REQ_REQUIRED_PROPERTY), NAME))
    g.add(Triple(Iri("x:any"), Iri(REQ_REQUIRED_TERM), PERSON))
    return g


def test_from_graph_collects_everything():
    spec = SchemaSpec.from_graph(_schema_graph())
    assert (PERSON, AGENT) in spec.subclass_edges
    assert NAME in spec.functional_properties
    assert (PERSON, ORG) in spec.disjoint_class_pairs or (ORG, PERSON) in spec.disjoint_class_pairs
    assert spec.property_domains[KNOWS] == PERSON
    assert spec.property_ranges[KNOWS] == PERSON
    assert spec.required_properties_per_class[PERSON] == frozenset([NAME])
    assert PERSON in spec.required_terms


def test_from_graph_ignores_literal_edges():
    g = Graph([Triple(PERSON, Iri(RDFS_SUBCLASSOF), Literal("junk"))])
    spec = SchemaSpec.from_graph(g)
    assert spec.subclass_edges == frozenset()


def test_transitive_superclasses_cached():
    spec = SchemaSpec(subclass_edges=[(PERSON, AGENT), (AGENT, Iri(NS + "Thing"))])
    supers = spec.superclasses_of(PERSON)
    assert supers == frozenset([PERSON, AGENT, Iri(NS + "Thing")])
    assert spec.superclasses_of(PERSON) is supers


def test_superclass_cycle_terminates():
    spec = SchemaSpec(subclass_edges=[(PERSON, ORG), (ORG, PERSON)])
    assert spec.superclasses_of(PERSON) == frozenset([PERSON, ORG])


def test_required_properties_union():
    spec = SchemaSpec(
        required_properties_per_class={PERSON: [NAME], ORG: [NAME, KNOWS]}
    )
    assert spec.required_properties() == frozenset([NAME, KNOWS])


def test_load_schema_reads_turtle(tmp_path):
    path = tmp_path / "schema.ttl"
    path.write_text(
        "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
        f"<{NS}Person> rdfs:subClassOf <{NS}Agent> .\n"
    )
    from ldqual.schema import load_schema

    spec = load_schema(path)
    assert (PERSON, AGENT) in spec.subclass_edges
