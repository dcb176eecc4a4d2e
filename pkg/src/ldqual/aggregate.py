"""Profile-driven score aggregation over the taxonomy.

Every node owns a contribution pool: its own normalized measurement (when it
has one) plus the scores of its children, each entry carrying a weight. A
combinator (weighted mean by default, optionally min or weighted geometric
mean) folds the pool into the node's score. Nodes that are disabled, failed,
or merely declared contribute nothing, and a node with an empty pool has no
score rather than a fake one.

Weights are relative within a pool, so scaling every weight by the same
positive factor changes nothing. All scores stay in [0, 1] and raising any
contribution never lowers an ancestor.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace

from .errors import ConfigurationError, UnknownCategoryError
from .metrics.base import MetricResult
from .taxonomy import TaxonomyGraph

STATUS_MEASURED = "measured"
STATUS_AGGREGATED = "aggregated"
STATUS_DECLARED_ONLY = "declared-only"
STATUS_ERROR = "error"
STATUS_DISABLED = "disabled"

COMBINATORS = ("mean", "min", "geomean")
DIRECTIONS = ("higher-better", "lower-better")


@dataclass(frozen=True)
class Normalizer:
    """Maps a count or duration onto [0, 1] against a target level."""

    target: float
    direction: str

    def __post_init__(self):
        if self.direction not in DIRECTIONS:
            raise ConfigurationError(f"unknown normalizer direction {self.direction!r}")
        if not self.target > 0:
            raise ConfigurationError("normalizer target must be positive")

    def apply(self, value: float) -> float:
        if self.direction == "higher-better":
            return min(value / self.target, 1.0)
        if value == 0:
            return 1.0
        return min(self.target / value, 1.0)


@dataclass(frozen=True)
class Profile:
    """Weights, normalizers and combinators for one assessment run."""

    name: str
    weights: dict[str, float] = field(default_factory=dict)
    disabled: frozenset[str] = frozenset()
    normalizers: dict[str, Normalizer] = field(default_factory=dict)
    combinators: dict[str, str] = field(default_factory=dict)
    self_weights: dict[str, float] = field(default_factory=dict)

    def weight_of(self, category_id: str) -> float:
        return self.weights.get(category_id, 1.0)

    def self_weight_of(self, category_id: str) -> float:
        if category_id in self.self_weights:
            return self.self_weights[category_id]
        return self.weight_of(category_id)


# Targets a count or duration is judged against when the profile does not
# say otherwise. These are defaults, not claims about any particular domain.
_DEFAULT_NORMALIZERS = {
    "SF:amount_of_data": Normalizer(10_000, "higher-better"),
    "PD:outdegree": Normalizer(1_000, "higher-better"),
    "PD:external_links": Normalizer(100, "higher-better"),
    "PD:response_time": Normalizer(1_000.0, "lower-better"),
}

_PROFILE_KEYS = {"name", "weights", "disabled", "normalizers", "combinator", "self_weights"}


def default_profile() -> Profile:
    return Profile(name="default", normalizers=dict(_DEFAULT_NORMALIZERS))


def profile_from_dict(raw: dict, taxonomy: TaxonomyGraph | None = None) -> Profile:
    if not isinstance(raw, dict):
        raise ConfigurationError("profile must be a JSON object")
    unknown = set(raw) - _PROFILE_KEYS
    if unknown:
        raise ConfigurationError(f"unknown profile keys: {sorted(unknown)}")

    def canon(ident: str) -> str:
        return taxonomy.resolve(ident) if taxonomy is not None else ident

    def positive_weights(section: str) -> dict[str, float]:
        out = {}
        for ident, value in (raw.get(section) or {}).items():
            weight = float(value)
            if weight < 0 or math.isnan(weight) or math.isinf(weight):
                raise ConfigurationError(f"bad weight for {ident!r}: {value!r}")
            out[canon(ident)] = weight
        return out

    normalizers = {}
    for ident, spec in (raw.get("normalizers") or {}).items():
        if not isinstance(spec, dict) or set(spec) - {"target", "direction"}:
            raise ConfigurationError(f"bad normalizer for {ident!r}")
        normalizers[canon(ident)] = Normalizer(
            float(spec.get("target", 0)), spec.get("direction", "")
        )
    combinators = {}
    for ident, name in (raw.get("combinator") or {}).items():
        if name not in COMBINATORS:
            raise ConfigurationError(f"unknown combinator {name!r} for {ident!r}")
        combinators[canon(ident)] = name
    disabled = frozenset(canon(i) for i in raw.get("disabled") or ())
    return Profile(
        name=str(raw.get("name", "")),
        weights=positive_weights("weights"),
        disabled=disabled,
        normalizers=normalizers,
        combinators=combinators,
        self_weights=positive_weights("self_weights"),
    )


def profile_to_dict(profile: Profile) -> dict:
    out: dict = {"name": profile.name}
    if profile.weights:
        out["weights"] = dict(sorted(profile.weights.items()))
    if profile.disabled:
        out["disabled"] = sorted(profile.disabled)
    if profile.normalizers:
        out["normalizers"] = {
            ident: {"target": n.target, "direction": n.direction}
            for ident, n in sorted(profile.normalizers.items())
        }
    if profile.combinators:
        out["combinator"] = dict(sorted(profile.combinators.items()))
    if profile.self_weights:
        out["self_weights"] = dict(sorted(profile.self_weights.items()))
    return out


def load_profile(path, taxonomy: TaxonomyGraph | None = None) -> Profile:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            raw = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigurationError(f"profile is not valid JSON: {exc}") from None
    return profile_from_dict(raw, taxonomy)


def merge_profiles(base: Profile, override: Profile) -> Profile:
    """Key-wise override; the disabled sets are unioned, so an override can
    switch more nodes off but never back on."""
    return Profile(
        name=override.name or base.name,
        weights={**base.weights, **override.weights},
        disabled=base.disabled | override.disabled,
        normalizers={**base.normalizers, **override.normalizers},
        combinators={**base.combinators, **override.combinators},
        self_weights={**base.self_weights, **override.self_weights},
    )


def normalize(result_kind: str, value, normalizer: Normalizer | None, category_id: str):
    """Value of one measurement mapped to [0, 1], or None if unscoreable."""
    if value is None:
        return None
    if result_kind == "boolean":
        return 1.0 if value else 0.0
    if result_kind in ("ratio", "score"):
        return float(value)
    if result_kind in ("count", "duration"):
        if normalizer is None:
            raise ConfigurationError(
                f"{category_id} yields a {result_kind}; the profile must provide a normalizer"
            )
        return normalizer.apply(float(value))
    if result_kind == "set":
        return None
    raise ConfigurationError(f"unknown result kind {result_kind!r} on {category_id}")


@dataclass(frozen=True)
class NodeAssessment:
    category_id: str
    status: str
    score: float | None
    normalized_own: float | None
    results: tuple[MetricResult, ...]
    contributions: tuple[tuple[str, float, float], ...]  # (label, value, weight)


class AssessmentTree:
    """Per-node outcomes for one run, in taxonomy order."""

    def __init__(self, taxonomy: TaxonomyGraph, nodes: dict[str, NodeAssessment], profile: Profile):
        self.taxonomy = taxonomy
        self.profile = profile
        self._nodes = nodes

    def node(self, ident: str) -> NodeAssessment:
        return self._nodes[self.taxonomy.resolve(ident)]

    def score(self, ident: str) -> float | None:
        return self.node(ident).score

    def __iter__(self):
        return iter(self._nodes.values())

    def __len__(self):
        return len(self._nodes)


def _combine(kind: str, pool: list[tuple[str, float, float]]) -> float:
    values = [(v, w) for _, v, w in pool]
    if kind == "min":
        return min(v for v, _ in values)
    total = sum(w for _, w in values)
    if kind == "geomean":
        if any(v == 0.0 for v, _ in values):
            return 0.0
        return math.exp(sum(w * math.log(v) for v, w in values) / total)
    return sum(v * w for v, w in values) / total


def _postorder(taxonomy: TaxonomyGraph) -> list[str]:
    order: list[str] = []
    seen: set[str] = set()

    def visit(ident: str):
        if ident in seen:
            return
        seen.add(ident)
        for child in taxonomy.children(ident):
            visit(child)
        order.append(ident)

    for root in taxonomy.roots():
        visit(root)
    return order


def aggregate(
    taxonomy: TaxonomyGraph,
    results: dict[str, tuple[MetricResult, ...]],
    profile: Profile | None = None,
) -> AssessmentTree:
    """Fold measurements upward into one score per scoreable node.

    results maps category ids to the measurements taken for them; ids may be
    aliases. Nodes evaluated against several targets average their own
    normalized values before joining the pool.
    """
    profile = profile if profile is not None else default_profile()
    profile = _canonicalized(profile, taxonomy)
    by_node: dict[str, tuple[MetricResult, ...]] = {}
    for ident, rs in results.items():
        canonical = taxonomy.resolve(ident)
        by_node[canonical] = by_node.get(canonical, ()) + tuple(rs)

    nodes: dict[str, NodeAssessment] = {}
    for ident in _postorder(taxonomy):
        node = taxonomy.node(ident)
        own = by_node.get(ident, ())
        if ident in profile.disabled:
            nodes[ident] = NodeAssessment(ident, STATUS_DISABLED, None, None, own, ())
            continue

        good = [r for r in own if r.error is None]
        if own and not good:
            nodes[ident] = NodeAssessment(ident, STATUS_ERROR, None, None, own, ())
            continue

        normalized = []
        for r in good:
            value = normalize(
                r.result_kind, r.value, profile.normalizers.get(ident), ident
            )
            if value is not None:
                normalized.append(value)
        own_norm = sum(normalized) / len(normalized) if normalized else None

        pool: list[tuple[str, float, float]] = []
        if own_norm is not None:
            weight = profile.self_weight_of(ident)
            if weight > 0:
                pool.append(("(own)", own_norm, weight))
        for child in taxonomy.children(ident):
            child_score = nodes[child].score
            if child_score is None:
                continue
            weight = profile.weight_of(child)
            if weight > 0:
                pool.append((child, child_score, weight))

        score = _combine(profile.combinators.get(ident, "mean"), pool) if pool else None
        if good:
            status = STATUS_MEASURED
        elif any(nodes[c].score is not None for c in taxonomy.children(ident)):
            status = STATUS_AGGREGATED
        else:
            status = STATUS_DECLARED_ONLY
        nodes[ident] = NodeAssessment(ident, status, score, own_norm, own, tuple(pool))

    ordered = {n.id: nodes[n.id] for n in taxonomy}
    return AssessmentTree(taxonomy, ordered, profile)


def _canonicalized(profile: Profile, taxonomy: TaxonomyGraph) -> Profile:
    # A profile can carry beliefs about categories this taxonomy does not
    # declare (the shipped defaults do, when aggregating a custom graph);
    # those entries are inert here, not errors. Strict checking happens at
    # load time when a taxonomy is passed to profile_from_dict.
    def keep(mapping):
        out = {}
        for ident, value in mapping.items():
            try:
                out[taxonomy.resolve(ident)] = value
            except UnknownCategoryError:
                continue
        return out

    return replace(
        profile,
        weights=keep(profile.weights),
        disabled=frozenset(keep({i: None for i in profile.disabled})),
        normalizers=keep(profile.normalizers),
        combinators=keep(profile.combinators),
        self_weights=keep(profile.self_weights),
    )
