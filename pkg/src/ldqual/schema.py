"""Schema descriptions driving completeness, conflict and closure rules.

A SchemaSpec can be built programmatically or read from a Turtle or
N-Triples file using the standard RDFS/OWL vocabulary plus two requirement
predicates (see vocab.REQ_REQUIRED_TERM and vocab.REQ_REQUIRED_PROPERTY).
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .rdf import Graph, Iri, Triple
from .vocab import (
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


class SchemaSpec:
    """Schema knowledge a quality assessment can lean on.

    Carries required terms, required properties per class, subclass and
    subproperty edges, functional properties, disjoint class pairs, and
    domain/range assignments. All collections are normalized to frozensets
    and plain dicts; transitive superclass/superproperty lookups are cached.
    """

    __slots__ = (
        "required_terms",
        "required_properties_per_class",
        "subclass_edges",
        "subproperty_edges",
        "functional_properties",
        "disjoint_class_pairs",
        "property_domains",
        "property_ranges",
        "direct_superclasses",
        "direct_superproperties",
        "_supc_cache",
        "_supp_cache",
    )

    def __init__(
        self,
        required_terms: Iterable[Iri] = (),
        required_properties_per_class: Mapping[Iri, Iterable[Iri]] | None = None,
        subclass_edges: Iterable[tuple[Iri, Iri]] = (),
        subproperty_edges: Iterable[tuple[Iri, Iri]] = (),
        functional_properties: Iterable[Iri] = (),
        disjoint_class_pairs: Iterable[tuple[Iri, Iri]] = (),
        property_domains: Mapping[Iri, Iri] | None = None,
        property_ranges: Mapping[Iri, Iri] | None = None,
    ):
        self.required_terms = frozenset(required_terms)
        self.required_properties_per_class = {
            cls: frozenset(props)
            for cls, props in (required_properties_per_class or {}).items()
        }
        self.subclass_edges = frozenset(subclass_edges)
        self.subproperty_edges = frozenset(subproperty_edges)
        self.functional_properties = frozenset(functional_properties)
        self.disjoint_class_pairs = frozenset(disjoint_class_pairs)
        self.property_domains = dict(property_domains or {})
        self.property_ranges = dict(property_ranges or {})
        self.direct_superclasses: dict[Iri, set[Iri]] = {}
        for sub, sup in self.subclass_edges:
            self.direct_superclasses.setdefault(sub, set()).add(sup)
        self.direct_superproperties: dict[Iri, set[Iri]] = {}
        for sub, sup in self.subproperty_edges:
            self.direct_superproperties.setdefault(sub, set()).add(sup)
        self._supc_cache: dict[Iri, frozenset[Iri]] = {}
        self._supp_cache: dict[Iri, frozenset[Iri]] = {}

    def is_empty(self) -> bool:
        return not (
            self.required_terms
            or self.required_properties_per_class
            or self.subclass_edges
            or self.subproperty_edges
            or self.functional_properties
            or self.disjoint_class_pairs
            or self.property_domains
            or self.property_ranges
        )

    def required_properties(self) -> frozenset[Iri]:
        """Union of the per-class required property sets."""
        out: set[Iri] = set()
        for props in self.required_properties_per_class.values():
            out |= props
        return frozenset(out)

    def superclasses_of(self, cls: Iri) -> frozenset[Iri]:
        """Reflexive transitive superclasses; tolerates cycles."""
        return _reachable(cls, self.direct_superclasses, self._supc_cache)

    def superproperties_of(self, prop: Iri) -> frozenset[Iri]:
        """Reflexive transitive superproperties; tolerates cycles."""
        return _reachable(prop, self.direct_superproperties, self._supp_cache)

    @classmethod
    def from_graph(cls, graph: Graph) -> "SchemaSpec":
        """Read schema statements out of a parsed graph."""
        required_terms: set[Iri] = set()
        required_props: dict[Iri, set[Iri]] = {}
        subclass = set()
        subproperty = set()
        functional = set()
        disjoint = set()
        domains: dict[Iri, Iri] = {}
        ranges: dict[Iri, Iri] = {}
        for t in graph:
            p = t.predicate.value
            if p == RDFS_SUBCLASSOF and _iris(t):
                subclass.add((t.subject, t.object))
            elif p == RDFS_SUBPROPERTYOF and _iris(t):
                subproperty.add((t.subject, t.object))
            elif p == RDF_TYPE and isinstance(t.object, Iri) and t.object.value == OWL_FUNCTIONAL_PROPERTY:
                if isinstance(t.subject, Iri):
                    functional.add(t.subject)
            elif p == OWL_DISJOINT_WITH and _iris(t):
                disjoint.add((t.subject, t.object))
            elif p == RDFS_DOMAIN and _iris(t):
                domains[t.subject] = t.object
            elif p == RDFS_RANGE and _iris(t):
                ranges[t.subject] = t.object
            elif p == REQ_REQUIRED_TERM and isinstance(t.object, Iri):
                required_terms.add(t.object)
            elif p == REQ_REQUIRED_PROPERTY and _iris(t):
                required_props.setdefault(t.subject, set()).add(t.object)
        return cls(
            required_terms=required_terms,
            required_properties_per_class=required_props,
            subclass_edges=subclass,
            subproperty_edges=subproperty,
            functional_properties=functional,
            disjoint_class_pairs=disjoint,
            property_domains=domains,
            property_ranges=ranges,
        )


def _iris(t: Triple) -> bool:
    return isinstance(t.subject, Iri) and isinstance(t.object, Iri)


def _reachable(start, edges, cache):
    cached = cache.get(start)
    if cached is not None:
        return cached
    seen = {start}
    stack = [start]
    while stack:
        node = stack.pop()
        for nxt in edges.get(node, ()):
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    result = frozenset(seen)
    cache[start] = result
    return result


EMPTY_SCHEMA = SchemaSpec()


def load_schema(path) -> SchemaSpec:
    """Load a schema file; the format is detected from the name and content."""
    from . import parse as parse_mod

    with open(path, "rb") as handle:
        data = handle.read()
    fmt = parse_mod.detect_format(data, filename_hint=str(path))
    dataset, _ = parse_mod.parse(data, fmt, strict=True)
    return SchemaSpec.from_graph(dataset.union_graph())
