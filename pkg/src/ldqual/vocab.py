"""Well-known vocabulary IRIs used by the parsers, schema loader and metrics."""

RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
XSD_NS = "http://www.w3.org/2001/XMLSchema#"
OWL_NS = "http://www.w3.org/2002/07/owl#"
SKOS_NS = "http://www.w3.org/2004/02/skos/core#"
DC_NS = "http://purl.org/dc/elements/1.1/"
DCTERMS_NS = "http://purl.org/dc/terms/"
FOAF_NS = "http://xmlns.com/foaf/0.1/"
PROV_NS = "http://www.w3.org/ns/prov#"
VOID_NS = "http://rdfs.org/ns/void#"
DCAT_NS = "http://www.w3.org/ns/dcat#"
HYDRA_NS = "http://www.w3.org/ns/hydra/core#"
SD_NS = "http://www.w3.org/ns/sparql-service-description#"

RDF_TYPE = RDF_NS + "type"
RDF_LANGSTRING = RDF_NS + "langString"

RDFS_LABEL = RDFS_NS + "label"
RDFS_COMMENT = RDFS_NS + "comment"
RDFS_SUBCLASSOF = RDFS_NS + "subClassOf"
RDFS_SUBPROPERTYOF = RDFS_NS + "subPropertyOf"
RDFS_DOMAIN = RDFS_NS + "domain"
RDFS_RANGE = RDFS_NS + "range"

XSD_STRING = XSD_NS + "string"
XSD_INTEGER = XSD_NS + "integer"
XSD_DECIMAL = XSD_NS + "decimal"
XSD_DOUBLE = XSD_NS + "double"
XSD_FLOAT = XSD_NS + "float"
XSD_BOOLEAN = XSD_NS + "boolean"
XSD_DATE = XSD_NS + "date"
XSD_DATETIME = XSD_NS + "dateTime"

OWL_FUNCTIONAL_PROPERTY = OWL_NS + "FunctionalProperty"
OWL_DISJOINT_WITH = OWL_NS + "disjointWith"

SKOS_PREFLABEL = SKOS_NS + "prefLabel"

# Vocabulary for declaring schema requirements (required terms and required
# properties per class) in schema files. Documented in the README; the
# namespace uses the reserved example domain so it can never collide with
# deployed data.
REQ_NS = "http://ldq.example/ns#"
REQ_REQUIRED_TERM = REQ_NS + "requiredTerm"
REQ_REQUIRED_PROPERTY = REQ_NS + "requiredProperty"

# Default label properties for vocabulary understandability checks.
DEFAULT_LABEL_PROPERTIES = (
    RDFS_LABEL,
    SKOS_PREFLABEL,
    DC_NS + "title",
    DCTERMS_NS + "title",
    FOAF_NS + "name",
)

# Default attribution (who made this) and history (when) properties for
# provenance checks.
DEFAULT_ATTRIBUTION_PROPERTIES = (
    DC_NS + "creator",
    DCTERMS_NS + "creator",
    DCTERMS_NS + "publisher",
    DCTERMS_NS + "contributor",
    PROV_NS + "wasAttributedTo",
    FOAF_NS + "maker",
)
DEFAULT_HISTORY_PROPERTIES = (
    DC_NS + "date",
    DCTERMS_NS + "created",
    DCTERMS_NS + "modified",
    DCTERMS_NS + "issued",
    PROV_NS + "generatedAtTime",
)

# Default mapping from dataset-description predicates to declared access
# methods.
DEFAULT_ACCESS_METHOD_PROPERTIES = {
    VOID_NS + "sparqlEndpoint": "sparql-endpoint",
    SD_NS + "endpoint": "sparql-endpoint",
    VOID_NS + "dataDump": "data-dump",
    DCAT_NS + "downloadURL": "data-dump",
    VOID_NS + "uriSpace": "dereferenceable-resources",
    VOID_NS + "rootResource": "dereferenceable-resources",
    DCAT_NS + "endpointURL": "api",
    HYDRA_NS + "apiDocumentation": "api",
}

# Media types accepted as RDF when probing resources.
RDF_MEDIA_TYPES = frozenset(
    {
        "text/turtle",
        "application/rdf+xml",
        "application/n-triples",
        "application/n-quads",
        "application/ld+json",
        "text/n3",
    }
)
