"""Content metrics: consistency, conformity, completeness, term quality.

Conventions shared by the graph-level functions:

- They take the asserted graph; closure-based metrics compute the bounded
  RDFS closure themselves and project conflict participation back onto
  asserted statements through derivation support, so a conflict between two
  derived statements still taints the asserted statements it came from.
- Ratio-style functions return (value, details). A target with an empty
  denominator raises EmptyTargetError instead of inventing a 0 or 1; the
  caller decides how to report that.
- Everything is deterministic: outputs that expose statements or terms are
  sorted with the canonical sort keys.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from datetime import date, datetime
from fractions import Fraction

from ..errors import EmptyTargetError, LdqualError
from ..rdf import (
    BlankNode,
    Graph,
    Iri,
    Literal,
    Triple,
    TriplePattern,
    closure_with_support,
    triple_sort_key,
)
from ..schema import EMPTY_SCHEMA, SchemaSpec
from ..vocab import (
    DEFAULT_ATTRIBUTION_PROPERTIES,
    DEFAULT_HISTORY_PROPERTIES,
    DEFAULT_LABEL_PROPERTIES,
    RDF_LANGSTRING,
    RDF_TYPE,
    REQ_REQUIRED_PROPERTY,
    REQ_REQUIRED_TERM,
    XSD_BOOLEAN,
    XSD_DATE,
    XSD_DATETIME,
    XSD_DECIMAL,
    XSD_DOUBLE,
    XSD_FLOAT,
    XSD_INTEGER,
    XSD_STRING,
)

_EVIDENCE_CAP = 20


# --- conflict machinery -----------------------------------------------------


@dataclass(frozen=True)
class ConflictRule:
    """One way statements can clash.

    kind is one of functional-property (subject: the property),
    disjoint-classes (subject/object: the two classes),
    contradiction-predicate (subject: the predicate) and datatype-violation
    (no terms; ill-formed typed literals conflict with themselves).
    """

    kind: str
    subject: str | None = None
    object: str | None = None


@dataclass(frozen=True)
class Conflict:
    rule: ConflictRule
    first: Triple
    second: Triple


_DATATYPE_RULE = ConflictRule("datatype-violation")


def rules_from_schema(
    schema: SchemaSpec, contradiction_predicates: tuple[Iri, ...] = ()
) -> tuple[ConflictRule, ...]:
    rules = [_DATATYPE_RULE]
    for prop in sorted(schema.functional_properties, key=lambda i: i.value):
        rules.append(ConflictRule("functional-property", prop.value))
    for a, b in sorted(schema.disjoint_class_pairs, key=lambda p: (p[0].value, p[1].value)):
        rules.append(ConflictRule("disjoint-classes", a.value, b.value))
    for pred in sorted(contradiction_predicates, key=lambda i: i.value):
        rules.append(ConflictRule("contradiction-predicate", pred.value))
    return tuple(rules)


_INT_RE = re.compile(r"[+-]?\d+")
_DEC_RE = re.compile(r"[+-]?(\d+(\.\d*)?|\.\d+)")
_DBL_RE = re.compile(r"[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?|[+-]?INF|NaN")
_DATE_RE = re.compile(r"(-?\d{4,})-(\d{2})-(\d{2})(Z|[+-]\d{2}:\d{2})?")
_DATETIME_RE = re.compile(
    r"(-?\d{4,})-(\d{2})-(\d{2})T(\d{2}):(\d{2}):(\d{2})(\.\d+)?(Z|[+-]\d{2}:\d{2})?"
)


def _valid_date_fields(y: str, m: str, d: str) -> bool:
    try:
        date(int(y), int(m), int(d))
    except ValueError:
        return False
    return True


def _check_date(lex: str) -> bool:
    m = _DATE_RE.fullmatch(lex)
    return bool(m) and _valid_date_fields(m.group(1), m.group(2), m.group(3))


def _check_datetime(lex: str) -> bool:
    m = _DATETIME_RE.fullmatch(lex)
    if not m:
        return False
    if not _valid_date_fields(m.group(1), m.group(2), m.group(3)):
        return False
    try:
        datetime(2000, 1, 1, int(m.group(4)), int(m.group(5)), min(int(m.group(6)), 59))
    except ValueError:
        return False
    return int(m.group(6)) <= 60  # leap second tolerated

_DT_CHECKS = {
    XSD_INTEGER: lambda lex: bool(_INT_RE.fullmatch(lex)),
    XSD_DECIMAL: lambda lex: bool(_DEC_RE.fullmatch(lex)),
    XSD_DOUBLE: lambda lex: bool(_DBL_RE.fullmatch(lex)),
    XSD_FLOAT: lambda lex: bool(_DBL_RE.fullmatch(lex)),
    XSD_BOOLEAN: lambda lex: lex in ("true", "false", "1", "0"),
    XSD_DATE: _check_date,
    XSD_DATETIME: _check_datetime,
}


def conflicts(
    graph: Graph,
    schema: SchemaSpec = EMPTY_SCHEMA,
    contradiction_predicates: tuple[Iri, ...] = (),
) -> tuple[Conflict, ...]:
    found, _support = _conflict_analysis(graph, schema, contradiction_predicates)
    return found


def _conflict_analysis(graph, schema, contradiction_predicates):
    support = closure_with_support(graph, schema)
    closure = Graph(support)
    found: list[Conflict] = []

    for t in closure:
        obj = t.object
        if isinstance(obj, Literal) and obj.language is None:
            check = _DT_CHECKS.get(obj.datatype)
            if check is not None and not check(obj.lexical):
                found.append(Conflict(_DATATYPE_RULE, t, t))

    rdf_type = Iri(RDF_TYPE)
    for prop in schema.functional_properties:
        rule = ConflictRule("functional-property", prop.value)
        grouped: dict = {}
        for t in closure.by_predicate(prop):
            grouped.setdefault(t.subject, []).append(t)
        for ts in grouped.values():
            if len(ts) < 2:
                continue
            ts.sort(key=triple_sort_key)
            for i in range(len(ts)):
                for j in range(i + 1, len(ts)):
                    found.append(Conflict(rule, ts[i], ts[j]))

    for a, b in schema.disjoint_class_pairs:
        rule = ConflictRule("disjoint-classes", a.value, b.value)
        in_a = {t.subject: t for t in closure.by_object(a) if t.predicate == rdf_type}
        in_b = {t.subject: t for t in closure.by_object(b) if t.predicate == rdf_type}
        for s in in_a.keys() & in_b.keys():
            first, second = sorted((in_a[s], in_b[s]), key=triple_sort_key)
            found.append(Conflict(rule, first, second))

    for pred in contradiction_predicates:
        rule = ConflictRule("contradiction-predicate", pred.value)
        for assertion in closure.by_predicate(pred):
            a, b = assertion.subject, assertion.object
            if a == b:
                continue
            keyed = {}
            for t in closure.by_object(a):
                keyed[(t.subject, t.predicate)] = t
            for u in closure.by_object(b):
                t = keyed.get((u.subject, u.predicate))
                if t is not None and t != u:
                    first, second = sorted((t, u), key=triple_sort_key)
                    found.append(Conflict(rule, first, second))

    unique = {
        (c.rule, c.first, c.second): c for c in found
    }
    ordered = sorted(
        unique.values(),
        key=lambda c: (
            c.rule.kind,
            c.rule.subject or "",
            c.rule.object or "",
            triple_sort_key(c.first),
            triple_sort_key(c.second),
        ),
    )
    return tuple(ordered), support


def participating_triples(found: tuple[Conflict, ...]) -> frozenset[Triple]:
    """Closure-level statements involved in any conflict."""
    out = set()
    for c in found:
        out.add(c.first)
        out.add(c.second)
    return frozenset(out)


def asserted_participants(found, support) -> frozenset[Triple]:
    """Asserted statements whose derivations feed into some conflict."""
    out: set[Triple] = set()
    for t in participating_triples(found):
        out.update(support.get(t, ()))
    return frozenset(out)


def _dirty(graph, schema, contradiction_predicates):
    found, support = _conflict_analysis(graph, schema, contradiction_predicates)
    return asserted_participants(found, support), found


def _conflict_evidence(found) -> tuple[str, ...]:
    from ..parse import term_ntform

    lines = []
    for c in found[:_EVIDENCE_CAP]:
        for t in (c.first, c.second):
            lines.append(
                f"{term_ntform(t.subject)} {term_ntform(t.predicate)} {term_ntform(t.object)} ."
            )
    return tuple(sorted(set(lines)))


# --- consistency family -----------------------------------------------------


def kb_consistent(
    graph: Graph,
    schema: SchemaSpec = EMPTY_SCHEMA,
    contradiction_predicates: tuple[Iri, ...] = (),
):
    found = conflicts(graph, schema, contradiction_predicates)
    details = {"conflict_count": len(found)}
    return (len(found) == 0), details


def consistency_of_statement_wrt(
    first: Triple,
    second: Triple,
    schema: SchemaSpec = EMPTY_SCHEMA,
    context: Graph | None = None,
    contradiction_predicates: tuple[Iri, ...] = (),
) -> bool:
    """True when the two statements cannot clash, even through derivations.

    Contradiction assertions from the surrounding graph are kept as context
    so pairs linked by a contradiction predicate are recognized, but a clash
    must be supported by the two statements alone to count.
    """
    cps = set(contradiction_predicates)
    mini = Graph((first, second))
    if context is not None and cps:
        for t in context:
            if t.predicate in cps:
                mini.add(t)
    found, support = _conflict_analysis(mini, schema, tuple(cps))
    pair = {first, second}
    for c in found:
        backing = set(support.get(c.first, ())) | set(support.get(c.second, ()))
        if backing and backing <= pair:
            return False
    return True


def consistency_and_nonredundancy_wrt(
    first: Triple,
    second: Triple,
    schema: SchemaSpec = EMPTY_SCHEMA,
    context: Graph | None = None,
    contradiction_predicates: tuple[Iri, ...] = (),
) -> bool:
    """Consistent with the second statement and not derivable from it."""
    if not consistency_of_statement_wrt(first, second, schema, context, contradiction_predicates):
        return False
    derivable = first in closure_with_support(Graph((second,)), schema)
    return not derivable


def inconsistent_substatements(
    first: Graph,
    second: Graph,
    schema: SchemaSpec = EMPTY_SCHEMA,
    contradiction_predicates: tuple[Iri, ...] = (),
) -> frozenset[Triple]:
    """Statements of the first graph that clash with the second graph."""
    out = set()
    base = list(second)
    for t in first:
        probe = Graph(base)
        probe.add(t)
        found, support = _conflict_analysis(probe, schema, contradiction_predicates)
        for c in found:
            backing = set(support.get(c.first, ())) | set(support.get(c.second, ()))
            if t in backing:
                out.add(t)
                break
    return frozenset(out)


def _clean_ratio(graph, dirty_set, keep) -> tuple[int, int]:
    total = 0
    clean = 0
    for t in graph:
        if not keep(t):
            continue
        total += 1
        if t not in dirty_set:
            clean += 1
    return clean, total


def consistency_ratio_all(
    graph: Graph,
    schema: SchemaSpec = EMPTY_SCHEMA,
    contradiction_predicates: tuple[Iri, ...] = (),
):
    """Fraction of asserted statements not involved in any conflict."""
    if len(graph) == 0:
        raise EmptyTargetError("no statements to rate")
    dirty_set, found = _dirty(graph, schema, contradiction_predicates)
    clean = len(graph) - sum(1 for t in graph if t in dirty_set)
    details = {
        "conflict_count": len(found),
        "inconsistent_statements": len(graph) - clean,
        "evidence": list(_conflict_evidence(found)),
    }
    return clean / len(graph), details


def consistency_ratio_pattern(
    pattern: TriplePattern,
    graph: Graph,
    schema: SchemaSpec = EMPTY_SCHEMA,
    contradiction_predicates: tuple[Iri, ...] = (),
) -> float:
    """Fraction of all statements that match the pattern and are clean."""
    if len(graph) == 0:
        raise EmptyTargetError("no statements to rate")
    dirty_set, _ = _dirty(graph, schema, contradiction_predicates)
    hits = sum(1 for t in graph if pattern.matches(t) and t not in dirty_set)
    return hits / len(graph)


def consistency_ratio_of_term(
    term,
    graph: Graph,
    schema: SchemaSpec = EMPTY_SCHEMA,
    contradiction_predicates: tuple[Iri, ...] = (),
) -> float:
    """Clean fraction of the statements on one subject."""
    frame = graph.by_subject(term)
    if not frame:
        raise EmptyTargetError(f"no statements on {term!r}")
    dirty_set, _ = _dirty(graph, schema, contradiction_predicates)
    clean = sum(1 for t in frame if t not in dirty_set)
    return clean / len(frame)


def consistency_ratio_of_relation_on_term(
    relation: Iri,
    term,
    graph: Graph,
    schema: SchemaSpec = EMPTY_SCHEMA,
    contradiction_predicates: tuple[Iri, ...] = (),
) -> float:
    triples = [t for t in graph.by_subject(term) if t.predicate == relation]
    if not triples:
        raise EmptyTargetError(f"no {relation!r} statements on {term!r}")
    dirty_set, _ = _dirty(graph, schema, contradiction_predicates)
    clean = sum(1 for t in triples if t not in dirty_set)
    return clean / len(triples)


def pd_consistency(
    graph: Graph,
    schema: SchemaSpec = EMPTY_SCHEMA,
    contradiction_predicates: tuple[Iri, ...] = (),
):
    """Non-conflicting frames over frames.

    A frame conflicts when any of its asserted statements supports a clash,
    so the value is 1.0 exactly when the closure is conflict-free.
    """
    frames = graph.frames()
    if not frames:
        raise EmptyTargetError("no frames")
    dirty_set, found = _dirty(graph, schema, contradiction_predicates)
    clean = sum(1 for f in frames if not any(t in dirty_set for t in f))
    details = {
        "frame_count": len(frames),
        "conflicting_frames": len(frames) - clean,
        "conflict_count": len(found),
        "evidence": list(_conflict_evidence(found)),
    }
    return clean / len(frames), details


# --- conformity and completeness -------------------------------------------


def _requirement_constraints(requirement: Graph):
    req_term = Iri(REQ_REQUIRED_TERM)
    req_prop = Iri(REQ_REQUIRED_PROPERTY)
    terms = []
    props = []
    verbatim = []
    for t in requirement:
        if t.predicate == req_term:
            terms.append(t.object)
        elif t.predicate == req_prop:
            props.append(t.object)
        else:
            verbatim.append(t)
    return terms, props, verbatim


def _constraint_hits(statement: Graph, requirement: Graph):
    terms, props, verbatim = _requirement_constraints(requirement)
    total = len(terms) + len(props) + len(verbatim)
    if total == 0:
        raise EmptyTargetError("requirement declares no constraints")
    mentioned = statement.subjects() | statement.predicates() | statement.objects()
    hits = 0
    for term in terms:
        if term in mentioned:
            hits += 1
    for prop in props:
        if prop in statement.predicates():
            hits += 1
    for t in verbatim:
        if t in statement:
            hits += 1
    return hits, total


def statement_matches_requirement(statement: Graph, requirement: Graph):
    hits, total = _constraint_hits(statement, requirement)
    return hits == total, {"satisfied": hits, "constraints": total}


def conformity_ratio(statement: Graph, requirement: Graph):
    hits, total = _constraint_hits(statement, requirement)
    return hits / total, {"satisfied": hits, "constraints": total}


def amount_of_data(graph: Graph):
    return len(graph), {}


def coverage(graph: Graph, schema: SchemaSpec):
    """Fraction of schema-typed frames carrying all required properties."""
    per_class = schema.required_properties_per_class
    if not per_class:
        raise EmptyTargetError("schema requires no properties")
    rdf_type = Iri(RDF_TYPE)
    considered = 0
    covered = 0
    for frame in graph.frames():
        types = {t.object for t in frame if t.predicate == rdf_type}
        required = set()
        for cls in types:
            required.update(per_class.get(cls, ()))
        if not required:
            continue
        considered += 1
        predicates = {t.predicate for t in frame}
        if required <= predicates:
            covered += 1
    if considered == 0:
        raise EmptyTargetError("no frames typed against the schema")
    return covered / considered, {"covered_frames": covered, "typed_frames": considered}


def coherence(graph: Graph, schema: SchemaSpec):
    """Mean per-frame fraction of required properties present."""
    per_class = schema.required_properties_per_class
    if not per_class:
        raise EmptyTargetError("schema requires no properties")
    rdf_type = Iri(RDF_TYPE)
    acc = Fraction(0)
    considered = 0
    for frame in graph.frames():
        types = {t.object for t in frame if t.predicate == rdf_type}
        required = set()
        for cls in types:
            required.update(per_class.get(cls, ()))
        if not required:
            continue
        considered += 1
        predicates = {t.predicate for t in frame}
        acc += Fraction(len(required & predicates), len(required))
    if considered == 0:
        raise EmptyTargetError("no frames typed against the schema")
    return float(acc / considered), {"typed_frames": considered}


def intensional_completeness(graph: Graph, schema: SchemaSpec):
    required = schema.required_properties()
    if not required:
        raise EmptyTargetError("schema requires no properties")
    present = sum(1 for p in required if graph.by_predicate(p))
    return present / len(required), {"present": present, "required": len(required)}


def extensional_completeness(graph: Graph, schema: SchemaSpec):
    required = schema.required_terms
    if not required:
        raise EmptyTargetError("schema requires no terms")
    mentioned = graph.subjects() | graph.predicates() | graph.objects()
    present = sum(1 for term in required if term in mentioned)
    return present / len(required), {"present": present, "required": len(required)}


def lds_completeness(graph: Graph, lds_property: Iri):
    """Fraction of frames carrying the designated relation."""
    subjects = graph.subjects()
    if not subjects:
        raise EmptyTargetError("no frames")
    with_property = {t.subject for t in graph.by_predicate(lds_property)}
    return len(subjects & with_property) / len(subjects), {"frame_count": len(subjects)}


def relevancy_ratio(graph: Graph, patterns: tuple[TriplePattern, ...]):
    """Fraction of statements matching at least one configured pattern."""
    if len(graph) == 0:
        raise EmptyTargetError("no statements to rate")
    hits = sum(1 for t in graph if any(p.matches(t) for p in patterns))
    return hits / len(graph), {"matched": hits, "patterns": len(patterns)}


# --- term representation ----------------------------------------------------


def typing_ratio(graph: Graph):
    """Fraction of frames with an explicit type."""
    subjects = graph.subjects()
    if not subjects:
        raise EmptyTargetError("no frames")
    rdf_type = Iri(RDF_TYPE)
    typed = {t.subject for t in graph.by_predicate(rdf_type)}
    return len(subjects & typed) / len(subjects), {"frame_count": len(subjects)}


def labels_ratio(graph: Graph, label_properties: tuple[str, ...] = DEFAULT_LABEL_PROPERTIES):
    subjects = graph.subjects()
    if not subjects:
        raise EmptyTargetError("no frames")
    labeled: set = set()
    for prop in label_properties:
        labeled.update(t.subject for t in graph.by_predicate(Iri(prop)))
    return len(subjects & labeled) / len(subjects), {"frame_count": len(subjects)}


def language_tag_ratio(graph: Graph):
    """Tagged fraction of plain-text literal occurrences."""
    total = 0
    tagged = 0
    for t in graph:
        o = t.object
        if not isinstance(o, Literal):
            continue
        if o.language is not None:
            total += 1
            tagged += 1
        elif o.datatype == XSD_STRING:
            total += 1
    if total == 0:
        raise EmptyTargetError("no plain-text literals")
    return tagged / total, {"plain_literals": total, "tagged": tagged}


_URI_FORBIDDEN = set(' <>"{}|\\^`')


def _well_formed_uri(value: str) -> bool:
    if not (value.startswith("http://") or value.startswith("https://")):
        return False
    if any(ch in _URI_FORBIDDEN for ch in value):
        return False
    rest = value.split("://", 1)[1]
    return bool(rest) and not rest.startswith("/")


def _all_iris(graph: Graph) -> set[Iri]:
    out = set()
    for t in graph:
        for term in t:
            if isinstance(term, Iri):
                out.add(term)
    return out


def uri_quality(
    graph: Graph,
    transport=None,
    *,
    sample_size: int = 10,
    seed: int = 0,
    timeout_ms: float = 10_000.0,
):
    """Statically well-formed fraction of the distinct IRIs used.

    With a transport, a dereferenceability sample is added to the details;
    probe trouble lands there too instead of aborting the static part.
    """
    iris = _all_iris(graph)
    if not iris:
        raise EmptyTargetError("no IRIs")
    good = sum(1 for i in iris if _well_formed_uri(i.value))
    bad = sorted((i.value for i in iris if not _well_formed_uri(i.value)))[:_EVIDENCE_CAP]
    details = {"iri_count": len(iris), "rejected": bad}
    if transport is not None:
        from .container import dereferenceability

        try:
            ratio, probe_details = dereferenceability(
                graph, transport, sample_size=sample_size, seed=seed, timeout_ms=timeout_ms
            )
        except LdqualError as exc:
            details["dereference_error"] = str(exc)
        else:
            details["dereferenceable"] = ratio
            details["dereference_sampled"] = probe_details["sampled"]
    return good / len(iris), details


_LOCAL_OK = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_TOKEN_SPLIT = re.compile(r"_|(?<=[a-z])(?=[A-Z])|(?<=[A-Za-z])(?=[0-9])")


def follows_naming_convention(local: str) -> bool:
    """Default rule set: identifier-shaped, and the last token is a word.

    The local name must start with a letter and use only letters, digits and
    underscores. Tokens split at underscores, lower-to-upper case changes and
    letter-to-digit changes; a final all-digit token (a bare counter) fails.
    """
    if not _LOCAL_OK.fullmatch(local):
        return False
    tokens = [tok for tok in _TOKEN_SPLIT.split(local) if tok]
    return bool(tokens) and not tokens[-1].isdigit()


def _local_name(value: str) -> str | None:
    for sep in ("#", "/"):
        if sep in value:
            local = value.rsplit(sep, 1)[1]
            return local or None
    return None


def naming_convention_ratio(graph: Graph):
    iris = _all_iris(graph)
    named = {i.value: loc for i in iris if (loc := _local_name(i.value)) is not None}
    if not named:
        raise EmptyTargetError("no IRIs with a local name")
    good = sum(1 for loc in named.values() if follows_naming_convention(loc))
    offenders = sorted(v for v, loc in named.items() if not follows_naming_convention(loc))
    return good / len(named), {"considered": len(named), "rejected": offenders[:_EVIDENCE_CAP]}


def link_stats(graph: Graph, local_namespaces: tuple[str, ...] = ()):
    """Outgoing-link figures for the whole graph.

    Every triple counts as an out-relation of its subject, so the out-relation
    count is the graph size. An external link is a triple whose object is an
    IRI outside every local namespace; the ratio is external links over all
    statements, 0 for an empty graph. With no configured namespaces, the
    namespaces of the graph's own subject IRIs count as local.
    """
    locals_ = tuple(local_namespaces)
    if not locals_:
        inferred = set()
        for s in graph.subjects():
            if isinstance(s, Iri):
                local = _local_name(s.value)
                inferred.add(s.value[: -len(local)] if local else s.value)
        locals_ = tuple(sorted(inferred))
    external = 0
    for t in graph:
        if not isinstance(t.object, Iri):
            continue
        if not any(t.object.value.startswith(ns) for ns in locals_):
            external += 1
    total = len(graph)
    return {
        "out_relations": external / total if total else 0.0,
        "outdegree": total,
        "external_links": external,
    }, {"local_namespaces": list(locals_)}


def provenance_check(
    graph: Graph,
    attribution_properties: tuple[str, ...] = DEFAULT_ATTRIBUTION_PROPERTIES,
    history_properties: tuple[str, ...] = DEFAULT_HISTORY_PROPERTIES,
):
    """Attribution and history cover, each as a flag, combined as a score."""
    if len(graph) == 0:
        raise EmptyTargetError("no statements")
    attribution = any(graph.by_predicate(Iri(p)) for p in attribution_properties)
    history = any(graph.by_predicate(Iri(p)) for p in history_properties)
    score = (int(attribution) + int(history)) / 2
    return {
        "score": score,
        "attribution": attribution,
        "history": history,
    }, {}


# --- redundancy -------------------------------------------------------------


def _redeclares_type_machinery(schema: SchemaSpec) -> bool:
    rdf_type = Iri(RDF_TYPE)
    for sub, supers in schema.direct_superproperties.items():
        if sub == rdf_type or rdf_type in supers:
            return True
    return rdf_type in schema.property_domains or rdf_type in schema.property_ranges


def nonredundancy_ratio(graph: Graph, schema: SchemaSpec = EMPTY_SCHEMA):
    """Fraction of asserted statements not derivable from the others."""
    if len(graph) == 0:
        raise EmptyTargetError("no statements")
    if _redeclares_type_machinery(schema):
        redundant = _redundant_by_closure(graph, schema)
    else:
        redundant = _redundant_analytically(graph, schema)
    clean = len(graph) - len(redundant)
    from ..parse import term_ntform

    shown = sorted(redundant, key=triple_sort_key)[:_EVIDENCE_CAP]
    evidence = [
        f"{term_ntform(t.subject)} {term_ntform(t.predicate)} {term_ntform(t.object)} ."
        for t in shown
    ]
    return clean / len(graph), {"redundant": len(redundant), "evidence": evidence}


def _redundant_by_closure(graph: Graph, schema: SchemaSpec) -> set[Triple]:
    # Last resort for schemas that tamper with the typing property itself:
    # recompute the closure once per statement with that statement removed.
    redundant = set()
    triples = list(graph)
    for t in triples:
        rest = Graph(u for u in triples if u != t)
        if t in closure_with_support(rest, schema):
            redundant.add(t)
    return redundant


def _redundant_analytically(graph: Graph, schema: SchemaSpec) -> set[Triple]:
    rdf_type = Iri(RDF_TYPE)
    redundant = set()
    for t in graph:
        if t.predicate == rdf_type:
            if _type_triple_redundant(t, graph, schema):
                redundant.add(t)
        elif _relation_triple_redundant(t, graph, schema):
            redundant.add(t)
    return redundant


def _relation_triple_redundant(t: Triple, graph: Graph, schema: SchemaSpec) -> bool:
    for other in graph.by_subject(t.subject):
        if other == t or other.object != t.object:
            continue
        if t.predicate in schema.superproperties_of(other.predicate) and other.predicate != t.predicate:
            return True
    return False


def _type_triple_redundant(t: Triple, graph: Graph, schema: SchemaSpec) -> bool:
    rdf_type = Iri(RDF_TYPE)
    target = t.object
    for other in graph.by_subject(t.subject):
        if other == t:
            continue
        if other.predicate == rdf_type:
            if target in schema.superclasses_of(other.object) and other.object != target:
                return True
        else:
            for prop in schema.superproperties_of(other.predicate):
                domain = schema.property_domains.get(prop)
                if domain is not None and target in schema.superclasses_of(domain):
                    return True
    for other in graph.by_object(t.subject):
        if other.predicate == rdf_type:
            continue
        for prop in schema.superproperties_of(other.predicate):
            rng = schema.property_ranges.get(prop)
            if rng is not None and target in schema.superclasses_of(rng):
                return True
    return False


# Contract name for the same measurement: the value is the non-redundant
# share of the statements, higher is better.
redundancy_ratio = nonredundancy_ratio
