"""Quality assessment toolkit for Linked Data.

The package splits into a small RDF core (`rdf`, `parse`, `schema`), the
category taxonomy (`taxonomy`), metric evaluators grouped by what they look
at (`metrics.content`, `metrics.medium`, `metrics.container`), profile-driven
aggregation (`aggregate`), and the assessment pipeline plus CLI (`assess`,
`report`, `cli`).
"""

from .errors import LdqualError
from .rdf import (
    BlankNode,
    Dataset,
    Frame,
    Graph,
    Iri,
    Literal,
    Triple,
    TriplePattern,
    Variable,
    rdfs_closure,
)
from .taxonomy import TaxonomyGraph, load_builtin

__version__ = "0.1.0"

__all__ = [
    "BlankNode",
    "Dataset",
    "Frame",
    "Graph",
    "Iri",
    "LdqualError",
    "Literal",
    "TaxonomyGraph",
    "Triple",
    "TriplePattern",
    "Variable",
    "__version__",
    "load_builtin",
    "rdfs_closure",
]
