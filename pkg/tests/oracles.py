"""Slow reference implementations the tests trust.

Everything here is written straight from the definitions, with no shared
code paths into the package internals: closures are per-statement fixpoints,
conflicts come from enumerating all pairs, ratios are exact Fractions.
Nothing is optimized; graphs stay small in the tests that use these.
"""

from fractions import Fraction
import re

from ldqual.rdf import BlankNode, Iri, Literal, Triple, Variable
from ldqual.vocab import RDF_TYPE

_TYPE = Iri(RDF_TYPE)

# Lexical checks re-derived from the XSD datatype definitions, not shared
# with the package. Only datatypes the strategies generate are covered.
_XSD = "http://www.w3.org/2001/XMLSchema#"
_ORACLE_DT = {
    _XSD + "integer": re.compile(r"[+-]?[0-9]+"),
    _XSD + "decimal": re.compile(r"[+-]?([0-9]+(\.[0-9]*)?|\.[0-9]+)"),
    _XSD + "boolean": re.compile(r"true|false|1|0"),
}


def bad_literal(term) -> bool:
    if not isinstance(term, Literal) or term.language is not None:
        return False
    pattern = _ORACLE_DT.get(term.datatype)
    if pattern is None:
        return False
    return pattern.fullmatch(term.lexical) is None


def naive_match(pattern, triple) -> bool:
    binding = {}
    for want, got in (
        (pattern.subject, triple.subject),
        (pattern.predicate, triple.predicate),
        (pattern.object, triple.object),
    ):
        if isinstance(want, Variable):
            if want.name in binding and binding[want.name] != got:
                return False
            binding[want.name] = got
        elif want != got:
            return False
    return True


def derive_once(triple, schema):
    """Every triple one rule application away."""
    out = []
    for p2 in schema.direct_superproperties.get(triple.predicate, ()):
        out.append(Triple(triple.subject, p2, triple.object))
    if triple.predicate == _TYPE:
        for c2 in schema.direct_superclasses.get(triple.object, ()):
            out.append(Triple(triple.subject, _TYPE, c2))
    d = schema.property_domains.get(triple.predicate)
    if d is not None:
        out.append(Triple(triple.subject, _TYPE, d))
    r = schema.property_ranges.get(triple.predicate)
    if r is not None and isinstance(triple.object, (Iri, BlankNode)):
        out.append(Triple(triple.object, _TYPE, r))
    return out


def reach_one(triple, schema) -> frozenset:
    """Closure of a single statement: worklist fixpoint."""
    seen = {triple}
    todo = [triple]
    while todo:
        t = todo.pop()
        for nt in derive_once(t, schema):
            if nt not in seen:
                seen.add(nt)
                todo.append(nt)
    return frozenset(seen)


def naive_closure(triples, schema) -> frozenset:
    out = set()
    for t in triples:
        out |= reach_one(t, schema)
    return frozenset(out)


def naive_conflict_pairs(closure, schema, contradiction_predicates):
    """Unordered conflicting pairs (t, t for datatype violations), found by
    checking every candidate combination directly."""
    closure = sorted(closure, key=repr)
    pairs = set()

    for t in closure:
        if bad_literal(t.object):
            pairs.add(frozenset((t,)))

    functional = set(schema.functional_properties)
    for i, t1 in enumerate(closure):
        for t2 in closure[i + 1 :]:
            if (
                t1.predicate in functional
                and t1.predicate == t2.predicate
                and t1.subject == t2.subject
            ):
                pairs.add(frozenset((t1, t2)))

    for a, b in schema.disjoint_class_pairs:
        typed_a = {t.subject for t in closure if t.predicate == _TYPE and t.object == a}
        typed_b = {t.subject for t in closure if t.predicate == _TYPE and t.object == b}
        for s in typed_a & typed_b:
            t1 = Triple(s, _TYPE, a)
            t2 = Triple(s, _TYPE, b)
            pairs.add(frozenset((t1, t2)))

    cps = set(contradiction_predicates)
    assertions = [t for t in closure if t.predicate in cps and t.subject != t.object]
    for assertion in assertions:
        a, b = assertion.subject, assertion.object
        for t1 in closure:
            if t1.object != a:
                continue
            for t2 in closure:
                if t2.object != b or t1 == t2:
                    continue
                if t1.subject == t2.subject and t1.predicate == t2.predicate:
                    pairs.add(frozenset((t1, t2)))

    return pairs


def dirty_asserted(graph, schema, contradiction_predicates) -> frozenset:
    """Asserted statements that feed some conflict, via per-statement reach."""
    reach = {t: reach_one(t, schema) for t in graph}
    closure = frozenset().union(*reach.values()) if reach else frozenset()
    pairs = naive_conflict_pairs(closure, schema, contradiction_predicates)
    participants = set()
    for pair in pairs:
        participants |= pair
    return frozenset(
        t for t, reached in reach.items() if reached & participants
    )


def oracle_pattern_ratio(pattern, graph, schema, contradiction_predicates) -> Fraction:
    dirty = dirty_asserted(graph, schema, contradiction_predicates)
    hits = sum(
        1 for t in graph if naive_match(pattern, t) and t not in dirty
    )
    return Fraction(hits, len(graph))


def oracle_all_ratio(graph, schema, contradiction_predicates) -> Fraction:
    dirty = dirty_asserted(graph, schema, contradiction_predicates)
    return Fraction(sum(1 for t in graph if t not in dirty), len(graph))


def oracle_pd_consistency(graph, schema, contradiction_predicates) -> Fraction:
    dirty = dirty_asserted(graph, schema, contradiction_predicates)
    frames: dict = {}
    for t in graph:
        frames.setdefault(t.subject, []).append(t)
    clean = sum(
        1 for ts in frames.values() if all(t not in dirty for t in ts)
    )
    return Fraction(clean, len(frames))


def oracle_redundant(graph, schema) -> frozenset:
    """Statements derivable from the rest of the graph."""
    triples = list(graph)
    out = set()
    for t in triples:
        rest = [u for u in triples if u != t]
        if t in naive_closure(rest, schema):
            out.add(t)
    return frozenset(out)


def oracle_coverage(graph, schema):
    """(count, ratio) over typed instances of classes with requirements."""
    instances = {}
    for t in graph:
        required = schema.required_properties_per_class.get(t.object)
        if t.predicate == _TYPE and required:
            instances.setdefault(t.subject, set()).add(t.object)
    if not instances:
        return None
    present: dict = {}
    for t in graph:
        present.setdefault(t.subject, set()).add(t.predicate)
    count = 0
    for subject, classes in instances.items():
        required = set()
        for cls in classes:
            required |= schema.required_properties_per_class[cls]
        if required <= present.get(subject, set()):
            count += 1
    return count, Fraction(count, len(instances))


def oracle_coherence(graph, schema):
    instances = {}
    for t in graph:
        required = schema.required_properties_per_class.get(t.object)
        if t.predicate == _TYPE and required:
            instances.setdefault(t.subject, set()).add(t.object)
    if not instances:
        return None
    present: dict = {}
    for t in graph:
        present.setdefault(t.subject, set()).add(t.predicate)
    total = Fraction(0)
    for subject, classes in instances.items():
        required = set()
        for cls in classes:
            required |= schema.required_properties_per_class[cls]
        if not required:
            total += 1
            continue
        have = len(required & present.get(subject, set()))
        total += Fraction(have, len(required))
    return total / len(instances)
