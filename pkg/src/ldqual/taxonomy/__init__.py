"""The quality-function taxonomy: a validated DAG of metric categories.

Categories are identified by prefixed names such as ``pm:consistency`` or
``PD:availability``. The prefix records which catalog a category comes from;
``pm`` names the integrating vocabulary itself. Alternate spellings used by
the source catalogs are kept as aliases and resolve to the canonical id.

Nodes are either function types (things that can be measured, possibly with
an evaluator bound), dimensions (criteria groupings from the quality
literature) or patterns (best-practice catalogs). The graph is a DAG with a
single root, ``pm:quality``; a node may have several parents but the three
description branches (content, medium, container) never share a descendant.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..errors import DerivationError, StructuralError, UnknownCategoryError

TAXONOMY_VERSION = "1.0"

SOURCES = ("pm", "LD", "PD", "SF", "Kahn", "LDpattern", "ODP")
KINDS = ("function-type", "dimension", "pattern")
RESULT_KINDS = ("boolean", "ratio", "score", "count", "duration", "set")
_EVALUATOR_RE = re.compile(r"^(content|medium|container|parse)\.[a-z][a-z0-9_]*$")


@dataclass(frozen=True)
class MetricCategory:
    """One node of the taxonomy."""

    id: str
    source: str
    kind: str
    parents: tuple[str, ...]
    result_kind: str | None = None
    signature: tuple[str, ...] = ()
    evaluator: str | None = None
    aliases: tuple[str, ...] = ()
    note: str | None = None
    provisional: bool = False
    label: str = field(default="", compare=False)

    @property
    def local(self) -> str:
        return self.id.split(":", 1)[1]


@dataclass(frozen=True)
class DerivedView:
    """A relation or concept name generated from a boolean function type."""

    origin: str
    kind: str
    id: str
    signature: tuple[str, ...]


# Quality nouns that have a usable adjective form. Names built from other
# nouns fall back to the has_ prefix.
_ADJECTIVES = {
    "consistency": "consistent",
    "non-redundancy": "non-redundant",
    "conformity": "conformant",
    "correctness": "correct",
}

_WRT_RE = re.compile(r"^(?P<q>.+?)_of_this_(?P<a>[^_]+)_wrt_this_(?P<b>.+)$")
_OF_RE = re.compile(r"^(?P<q>.+?)_of_(?:this_|the_)?(?P<rest>.+)$")


def _adjective_phrase(phrase: str) -> str | None:
    parts = phrase.split("_and_")
    mapped = [_ADJECTIVES.get(p) for p in parts]
    if None in mapped:
        return None
    return "_and_".join(mapped)


def _relation_local(local: str) -> str:
    m = _WRT_RE.match(local)
    if m:
        adjectives = _adjective_phrase(m.group("q"))
        if adjectives:
            return f"{m.group('a')}_{adjectives}_with_this_{m.group('b')}"
    m = _OF_RE.match(local)
    if m:
        adjectives = _adjective_phrase(m.group("q"))
        if adjectives:
            return f"{m.group('rest')}_{adjectives}"
    return "has_" + local


class TaxonomyGraph:
    """Mutable while being built, then validated and treated as read-only."""

    def __init__(self):
        self._nodes: dict[str, MetricCategory] = {}
        self._aliases: dict[str, str] = {}
        self._children: dict[str, list[str]] = {}
        self._derived: dict[tuple[str, str], DerivedView] = {}

    # -- construction --

    def add(self, node: MetricCategory) -> None:
        if node.id in self._nodes or node.id in self._aliases:
            raise StructuralError(f"duplicate category id {node.id!r}")
        self._nodes[node.id] = node
        self._children.setdefault(node.id, [])
        for parent in node.parents:
            self._children.setdefault(parent, []).append(node.id)
        for alias in node.aliases:
            self.add_alias(alias, node.id)

    def add_alias(self, alias: str, target: str) -> None:
        if alias in self._nodes or alias in self._aliases:
            raise StructuralError(f"duplicate category id {alias!r}")
        self._aliases[alias] = target

    # -- lookup --

    def __len__(self) -> int:
        return len(self._nodes)

    def __iter__(self):
        return iter(self._nodes.values())

    def __contains__(self, ident: str) -> bool:
        try:
            self.resolve(ident)
        except UnknownCategoryError:
            return False
        return True

    def ids(self) -> tuple[str, ...]:
        return tuple(self._nodes)

    def resolve(self, ident: str) -> str:
        """Canonical id for a category id or alias; bare names mean pm:."""
        if ident in self._nodes:
            return ident
        target = self._aliases.get(ident)
        if target is not None:
            return target
        if ":" not in ident and "pm:" + ident in self._nodes:
            return "pm:" + ident
        raise UnknownCategoryError(f"unknown category {ident!r}")

    def node(self, ident: str) -> MetricCategory:
        return self._nodes[self.resolve(ident)]

    def aliases_of(self, ident: str) -> tuple[str, ...]:
        canonical = self.resolve(ident)
        return tuple(a for a, t in self._aliases.items() if t == canonical)

    def children(self, ident: str) -> tuple[str, ...]:
        return tuple(self._children.get(self.resolve(ident), ()))

    def parents(self, ident: str) -> tuple[str, ...]:
        return self.node(ident).parents

    def roots(self) -> tuple[str, ...]:
        return tuple(n.id for n in self._nodes.values() if not n.parents)

    def ancestors(self, ident: str) -> frozenset[str]:
        """All strict ancestors, following every parent edge."""
        start = self.resolve(ident)
        seen: set[str] = set()
        stack = list(self._nodes[start].parents)
        while stack:
            current = stack.pop()
            if current in seen:
                continue
            seen.add(current)
            stack.extend(self._nodes[current].parents)
        return frozenset(seen)

    def descendants(self, ident: str) -> frozenset[str]:
        """All strict descendants."""
        start = self.resolve(ident)
        seen: set[str] = set()
        stack = list(self._children.get(start, ()))
        while stack:
            current = stack.pop()
            if current in seen:
                continue
            seen.add(current)
            stack.extend(self._children.get(current, ()))
        return frozenset(seen)

    def is_subtype(self, ident: str, ancestor: str) -> bool:
        """True when `ident` is `ancestor` or lies below it."""
        a = self.resolve(ident)
        b = self.resolve(ancestor)
        return a == b or b in self.ancestors(a)

    # -- derivation --

    def derive_view(self, ident: str, kind: str = "relation") -> DerivedView:
        """A relation (or concept) name for a boolean function type.

        Caches per (origin, kind); repeated calls return the same object.
        """
        if kind not in ("relation", "concept"):
            raise DerivationError(f"unknown view kind {kind!r}")
        canonical = self.resolve(ident)
        cached = self._derived.get((canonical, kind))
        if cached is not None:
            return cached
        node = self._nodes[canonical]
        if node.kind != "function-type":
            raise DerivationError(f"{canonical} is not a function type")
        if node.result_kind != "boolean":
            raise DerivationError(
                f"{canonical} has result kind {node.result_kind}; views need boolean"
            )
        prefix = canonical.split(":", 1)[0]
        local = _relation_local(node.local)
        if kind == "concept":
            local = local[0].upper() + local[1:]
        view = DerivedView(canonical, kind, f"{prefix}:{local}", node.signature)
        self._derived[(canonical, kind)] = view
        return view

    # -- validation and export --

    def validate(self) -> list[str]:
        """Structural problems, empty when the graph is sound."""
        problems: list[str] = []
        for node in self._nodes.values():
            if node.source not in SOURCES:
                problems.append(f"{node.id}: unknown source {node.source!r}")
            if node.kind not in KINDS:
                problems.append(f"{node.id}: unknown kind {node.kind!r}")
            if node.result_kind is not None and node.result_kind not in RESULT_KINDS:
                problems.append(f"{node.id}: unknown result kind {node.result_kind!r}")
            if node.evaluator is not None:
                if not _EVALUATOR_RE.match(node.evaluator):
                    problems.append(f"{node.id}: malformed evaluator {node.evaluator!r}")
                if node.result_kind is None:
                    problems.append(f"{node.id}: evaluator bound but no result kind")
            for parent in node.parents:
                if parent not in self._nodes:
                    problems.append(f"{node.id}: unknown parent {parent!r}")
        for alias, target in self._aliases.items():
            if target not in self._nodes:
                problems.append(f"alias {alias!r}: unknown target {target!r}")

        problems.extend(self._check_acyclic())

        roots = self.roots()
        if roots != ("pm:quality",):
            problems.append(f"expected the single root pm:quality, found {sorted(roots)}")
        elif len(self._reachable("pm:quality")) != len(self._nodes):
            missing = set(self._nodes) - self._reachable("pm:quality")
            problems.append(f"unreachable from the root: {sorted(missing)}")

        branches = [
            "pm:description-content_quality",
            "pm:description-medium_quality",
            "pm:description-container_quality",
        ]
        if all(b in self._nodes for b in branches):
            sets = {b: self.descendants(b) for b in branches}
            for i, a in enumerate(branches):
                for b in branches[i + 1 :]:
                    overlap = sets[a] & sets[b]
                    if overlap:
                        problems.append(f"{a} and {b} share descendants: {sorted(overlap)}")
        return problems

    def _check_acyclic(self) -> list[str]:
        WHITE, GREY, BLACK = 0, 1, 2
        color = dict.fromkeys(self._nodes, WHITE)
        problems = []
        for start in self._nodes:
            if color[start] != WHITE:
                continue
            stack: list[tuple[str, int]] = [(start, 0)]
            color[start] = GREY
            while stack:
                node, idx = stack[-1]
                kids = self._children.get(node, [])
                if idx < len(kids):
                    stack[-1] = (node, idx + 1)
                    child = kids[idx]
                    if color[child] == GREY:
                        # unwind the grey stack back to the child: that
                        # segment is the cycle itself
                        on_stack = [n for n, _ in stack]
                        loop = on_stack[on_stack.index(child) :] + [child]
                        problems.append("cycle: " + " -> ".join(repr(n) for n in loop))
                        return problems
                    if color[child] == WHITE:
                        color[child] = GREY
                        stack.append((child, 0))
                else:
                    color[node] = BLACK
                    stack.pop()
        return problems

    def _reachable(self, root: str) -> set[str]:
        seen = {root}
        stack = [root]
        while stack:
            for child in self._children.get(stack.pop(), ()):
                if child not in seen:
                    seen.add(child)
                    stack.append(child)
        return seen

    def to_json(self) -> dict:
        return {
            "version": TAXONOMY_VERSION,
            "nodes": [
                {
                    "id": n.id,
                    "label": n.label,
                    "source": n.source,
                    "kind": n.kind,
                    "parents": list(n.parents),
                    "result_kind": n.result_kind,
                    "signature": list(n.signature),
                    "evaluator": n.evaluator,
                    "aliases": sorted(self.aliases_of(n.id)),
                    "note": n.note,
                    "provisional": n.provisional,
                }
                for n in self._nodes.values()
            ],
        }


from .builtin import load_builtin  # noqa: E402  (re-export)

__all__ = [
    "TAXONOMY_VERSION",
    "MetricCategory",
    "DerivedView",
    "TaxonomyGraph",
    "load_builtin",
]
