"""In-memory RDF data model: terms, triples, indexed graphs and datasets.

Terms compare and hash by value so graphs behave as mathematical sets of
triples. Graph keeps subject, predicate and object indexes in step with the
triple set; once loaded, graphs are treated as immutable and may be shared
between threads without locking.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator

from .errors import StructuralError
from .vocab import RDF_LANGSTRING, RDF_TYPE, XSD_STRING

_SCHEME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*:")


class Term:
    """Base class for RDF terms."""

    __slots__ = ()


class Iri(Term):
    """An absolute IRI. The value must carry a scheme."""

    __slots__ = ("value", "_hash")

    def __init__(self, value: str):
        if not _SCHEME_RE.match(value):
            raise StructuralError(f"IRI is not absolute (missing scheme): {value!r}")
        self.value = value
        self._hash = hash(("iri", value))

    def __eq__(self, other):
        return type(other) is Iri and other.value == self.value

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Iri({self.value!r})"


class BlankNode(Term):
    """A blank node identified by a local label."""

    __slots__ = ("label", "_hash")

    def __init__(self, label: str):
        if not label:
            raise StructuralError("blank node label must be non-empty")
        self.label = label
        self._hash = hash(("bnode", label))

    def __eq__(self, other):
        return type(other) is BlankNode and other.label == self.label

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"BlankNode({self.label!r})"


class Literal(Term):
    """A literal with a lexical form, a datatype IRI and an optional language tag.

    A language tag is only allowed (and then required) together with the
    language-string datatype. The datatype defaults to xsd:string, or to the
    language-string datatype when a language is given.
    """

    __slots__ = ("lexical", "datatype", "language", "_hash")

    def __init__(self, lexical: str, datatype: str | None = None, language: str | None = None):
        if language is not None:
            if datatype is not None and datatype != RDF_LANGSTRING:
                raise StructuralError(
                    f"language-tagged literal must use the language-string datatype, got {datatype!r}"
                )
            datatype = RDF_LANGSTRING
        else:
            if datatype is None:
                datatype = XSD_STRING
            elif datatype == RDF_LANGSTRING:
                raise StructuralError("language-string literal requires a language tag")
        self.lexical = lexical
        self.datatype = datatype
        self.language = language
        self._hash = hash(("lit", lexical, datatype, language))

    def __eq__(self, other):
        return (
            type(other) is Literal
            and other.lexical == self.lexical
            and other.datatype == self.datatype
            and other.language == self.language
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.language is not None:
            return f"Literal({self.lexical!r}, language={self.language!r})"
        return f"Literal({self.lexical!r}, datatype={self.datatype!r})"


class Variable:
    """A named placeholder inside a triple pattern. Not a term."""

    __slots__ = ("name", "_hash")

    def __init__(self, name: str):
        if not name:
            raise StructuralError("variable name must be non-empty")
        self.name = name
        self._hash = hash(("var", name))

    def __eq__(self, other):
        return type(other) is Variable and other.name == self.name

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Variable({self.name!r})"


class Triple:
    """An RDF triple. Subject is an IRI or blank node, predicate an IRI."""

    __slots__ = ("subject", "predicate", "object", "_hash")

    def __init__(self, subject: Term, predicate: Term, object: Term):
        if not isinstance(subject, (Iri, BlankNode)):
            raise StructuralError(f"triple subject must be an IRI or blank node, got {subject!r}")
        if not isinstance(predicate, Iri):
            raise StructuralError(f"triple predicate must be an IRI, got {predicate!r}")
        if not isinstance(object, (Iri, BlankNode, Literal)):
            raise StructuralError(f"triple object must be a term, got {object!r}")
        self.subject = subject
        self.predicate = predicate
        self.object = object
        self._hash = hash((subject, predicate, object))

    def __eq__(self, other):
        return (
            type(other) is Triple
            and other.subject == self.subject
            and other.predicate == self.predicate
            and other.object == self.object
        )

    def __hash__(self):
        return self._hash

    def __iter__(self):
        return iter((self.subject, self.predicate, self.object))

    def __repr__(self):
        return f"Triple({self.subject!r}, {self.predicate!r}, {self.object!r})"


class TriplePattern:
    """A triple with variables in any position.

    A repeated variable must bind to the same term in every position where it
    appears for a triple to match.
    """

    __slots__ = ("subject", "predicate", "object")

    def __init__(self, subject, predicate, object):
        for pos, value in (("subject", subject), ("predicate", predicate), ("object", object)):
            if not isinstance(value, (Term, Variable)):
                raise StructuralError(f"pattern {pos} must be a term or a variable, got {value!r}")
        self.subject = subject
        self.predicate = predicate
        self.object = object

    def __eq__(self, other):
        return (
            type(other) is TriplePattern
            and other.subject == self.subject
            and other.predicate == self.predicate
            and other.object == self.object
        )

    def __hash__(self):
        return hash(("pattern", self.subject, self.predicate, self.object))

    def __repr__(self):
        return f"TriplePattern({self.subject!r}, {self.predicate!r}, {self.object!r})"

    def matches(self, triple: Triple) -> bool:
        bindings: dict[str, Term] = {}
        return (
            _unify(self.subject, triple.subject, bindings)
            and _unify(self.predicate, triple.predicate, bindings)
            and _unify(self.object, triple.object, bindings)
        )


def _unify(pattern_term, value, bindings):
    if isinstance(pattern_term, Variable):
        bound = bindings.get(pattern_term.name)
        if bound is None:
            bindings[pattern_term.name] = value
            return True
        return bound == value
    return pattern_term == value


class Frame:
    """All triples sharing one subject: the unit several frame-based metrics use."""

    __slots__ = ("subject", "triples")

    def __init__(self, subject: Term, triples: Iterable[Triple]):
        self.subject = subject
        self.triples = frozenset(triples)
        for t in self.triples:
            if t.subject != subject:
                raise StructuralError(f"frame triple {t!r} does not share subject {subject!r}")

    def __eq__(self, other):
        return type(other) is Frame and other.subject == self.subject and other.triples == self.triples

    def __hash__(self):
        return hash((self.subject, self.triples))

    def __len__(self):
        return len(self.triples)

    def __iter__(self):
        return iter(self.triples)

    def __repr__(self):
        return f"Frame({self.subject!r}, {len(self.triples)} triples)"


_EMPTY: frozenset = frozenset()


class Graph:
    """A set of triples with subject, predicate and object indexes."""

    __slots__ = ("_triples", "_by_subject", "_by_predicate", "_by_object")

    def __init__(self, triples: Iterable[Triple] = ()):
        self._triples: set[Triple] = set()
        self._by_subject: dict[Term, set[Triple]] = {}
        self._by_predicate: dict[Term, set[Triple]] = {}
        self._by_object: dict[Term, set[Triple]] = {}
        for t in triples:
            self.add(t)

    def add(self, triple: Triple) -> bool:
        """Insert a triple. Returns False when it was already present."""
        if not isinstance(triple, Triple):
            raise StructuralError(f"not a triple: {triple!r}")
        if triple in self._triples:
            return False
        self._triples.add(triple)
        self._by_subject.setdefault(triple.subject, set()).add(triple)
        self._by_predicate.setdefault(triple.predicate, set()).add(triple)
        self._by_object.setdefault(triple.object, set()).add(triple)
        return True

    def update(self, triples: Iterable[Triple]) -> None:
        for t in triples:
            self.add(t)

    def copy(self) -> "Graph":
        return Graph(self._triples)

    def __len__(self):
        return len(self._triples)

    def __iter__(self) -> Iterator[Triple]:
        return iter(self._triples)

    def __contains__(self, triple):
        return triple in self._triples

    def __eq__(self, other):
        return isinstance(other, Graph) and other._triples == self._triples

    def __repr__(self):
        return f"Graph({len(self._triples)} triples)"

    def triples(self) -> frozenset[Triple]:
        return frozenset(self._triples)

    def subjects(self) -> frozenset[Term]:
        return frozenset(self._by_subject)

    def predicates(self) -> frozenset[Term]:
        return frozenset(self._by_predicate)

    def objects(self) -> frozenset[Term]:
        return frozenset(self._by_object)

    def by_subject(self, term: Term) -> frozenset[Triple]:
        return frozenset(self._by_subject.get(term, _EMPTY))

    def by_predicate(self, term: Term) -> frozenset[Triple]:
        return frozenset(self._by_predicate.get(term, _EMPTY))

    def by_object(self, term: Term) -> frozenset[Triple]:
        return frozenset(self._by_object.get(term, _EMPTY))

    def match(self, pattern: TriplePattern) -> set[Triple]:
        """Every triple matched by the pattern, repeated variables binding consistently."""
        candidates = self._candidates(pattern)
        return {t for t in candidates if pattern.matches(t)}

    def _candidates(self, pattern: TriplePattern):
        # Scan the smallest index a concrete position offers.
        best = None
        if isinstance(pattern.subject, Term):
            best = self._by_subject.get(pattern.subject, _EMPTY)
        if isinstance(pattern.predicate, Term):
            bucket = self._by_predicate.get(pattern.predicate, _EMPTY)
            if best is None or len(bucket) < len(best):
                best = bucket
        if isinstance(pattern.object, Term):
            bucket = self._by_object.get(pattern.object, _EMPTY)
            if best is None or len(bucket) < len(best):
                best = bucket
        return self._triples if best is None else best

    def frame_of(self, subject: Term) -> Frame:
        """The frame of a subject; empty frames are legal."""
        if not isinstance(subject, (Iri, BlankNode)):
            raise StructuralError(f"frame subject must be an IRI or blank node, got {subject!r}")
        return Frame(subject, self._by_subject.get(subject, _EMPTY))

    def frames(self) -> list[Frame]:
        """One frame per distinct subject in the graph."""
        return [Frame(s, ts) for s, ts in self._by_subject.items()]

    def degree(self, term: Term) -> tuple[int, int]:
        """(out-degree, in-degree): triples where term is subject resp. object."""
        return (
            len(self._by_subject.get(term, _EMPTY)),
            len(self._by_object.get(term, _EMPTY)),
        )


class Dataset:
    """A default graph plus zero or more named graphs."""

    __slots__ = ("default_graph", "named_graphs")

    def __init__(self, default_graph: Graph | None = None, named_graphs=None):
        self.default_graph = default_graph if default_graph is not None else Graph()
        self.named_graphs: dict[Term, Graph] = dict(named_graphs or {})
        for name in self.named_graphs:
            if not isinstance(name, (Iri, BlankNode)):
                raise StructuralError(f"graph name must be an IRI or blank node, got {name!r}")

    def graph(self, name: Term | None = None) -> Graph:
        """The graph with that name, created on demand; None names the default graph."""
        if name is None:
            return self.default_graph
        if not isinstance(name, (Iri, BlankNode)):
            raise StructuralError(f"graph name must be an IRI or blank node, got {name!r}")
        existing = self.named_graphs.get(name)
        if existing is None:
            existing = Graph()
            self.named_graphs[name] = existing
        return existing

    def graphs(self):
        yield None, self.default_graph
        for name, g in self.named_graphs.items():
            yield name, g

    def union_graph(self) -> Graph:
        merged = self.default_graph.copy()
        for g in self.named_graphs.values():
            merged.update(g)
        return merged

    def total_triples(self) -> int:
        return len(self.default_graph) + sum(len(g) for g in self.named_graphs.values())

    def __eq__(self, other):
        return (
            isinstance(other, Dataset)
            and other.default_graph == self.default_graph
            and other.named_graphs == self.named_graphs
        )

    def __repr__(self):
        return f"Dataset({len(self.default_graph)} default, {len(self.named_graphs)} named)"


def term_sort_key(term: Term) -> tuple:
    """A total order over terms, independent of hash seeds: IRIs, then blanks, then literals."""
    if isinstance(term, Iri):
        return (0, term.value, "", "")
    if isinstance(term, BlankNode):
        return (1, term.label, "", "")
    if isinstance(term, Literal):
        return (2, term.lexical, term.datatype, term.language or "")
    raise StructuralError(f"not a term: {term!r}")


def triple_sort_key(triple: Triple) -> tuple:
    return (
        term_sort_key(triple.subject),
        term_sort_key(triple.predicate),
        term_sort_key(triple.object),
    )


def rdfs_closure(graph: Graph, schema) -> Graph:
    """The bounded closure of a graph under the schema's derivation rules.

    Rules applied to a fixpoint: subclass typing (s typed C and C below D
    derives s typed D), subproperty relations, and domain/range typing.
    The result is monotone in the input, idempotent, and terminates even
    when the subclass or subproperty hierarchy is cyclic.
    """
    return Graph(closure_with_support(graph, schema))


def closure_with_support(graph: Graph, schema) -> dict[Triple, frozenset[Triple]]:
    """Closure triples mapped to the asserted triples supporting them.

    A triple's support is the union, over every derivation chain producing it,
    of the asserted triples those chains start from. Asserted triples support
    themselves. Conflict participation is projected through this map so that
    a conflict between derived triples still marks asserted ones.
    """
    subp = schema.direct_superproperties
    subc = schema.direct_superclasses
    domains = schema.property_domains
    ranges = schema.property_ranges
    if not (subp or subc or domains or ranges):
        return {t: frozenset((t,)) for t in graph}

    type_iri = Iri(RDF_TYPE)
    supports: dict[Triple, set[Triple]] = {t: {t} for t in graph}
    changed = True
    while changed:
        changed = False
        for t, sup in list(supports.items()):
            derived = []
            for p2 in subp.get(t.predicate, ()):
                derived.append(Triple(t.subject, p2, t.object))
            if t.predicate == type_iri:
                for c2 in subc.get(t.object, ()):
                    derived.append(Triple(t.subject, type_iri, c2))
            d = domains.get(t.predicate)
            if d is not None:
                derived.append(Triple(t.subject, type_iri, d))
            r = ranges.get(t.predicate)
            if r is not None and isinstance(t.object, (Iri, BlankNode)):
                derived.append(Triple(t.object, type_iri, r))
            for nt in derived:
                cur = supports.get(nt)
                if cur is None:
                    supports[nt] = set(sup)
                    changed = True
                elif not cur.issuperset(sup):
                    cur |= sup
                    changed = True
    return {t: frozenset(s) for t, s in supports.items()}
