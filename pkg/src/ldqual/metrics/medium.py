"""Medium metrics: properties of the serialization formats themselves.

A FormatProfile records what a notation can do; scores are computed from the
profile, not from any document. The built-in table covers the formats the
parsers know about. A custom table can be loaded from JSON, e.g. to rate an
in-house notation; scores are normalized against the table they come from,
so readability ranks stay comparable within one table.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from ..errors import (
    ConfigurationError,
    EmptyTargetError,
    UnknownFormatError,
    UnsupportedFormatError,
)
from ..parse import FormatId, SerializationStats, serialize
from ..rdf import Dataset

EXPRESSIVENESS_FLAGS = (
    "numerical-quantifiers",
    "shortcut-constructs",
    "ontological-primitives",
    "first-order-referable-nodes",
)


@dataclass(frozen=True)
class FormatProfile:
    format_id: str
    is_standard: bool
    is_structured: bool
    separates_structure_from_presentation: bool
    user_adaptable_syntax: bool
    machine_interpretable: bool
    logic_interpretation: bool
    human_readability_rank: int
    expressiveness_flags: frozenset[str]

    def __post_init__(self):
        unknown = set(self.expressiveness_flags) - set(EXPRESSIVENESS_FLAGS)
        if unknown:
            raise ConfigurationError(f"unknown expressiveness flags: {sorted(unknown)}")
        if self.human_readability_rank < 1:
            raise ConfigurationError("human_readability_rank must be at least 1")


def _profile(format_id, rank, *, separates=False, flags=("first-order-referable-nodes",)):
    return FormatProfile(
        format_id=format_id,
        is_standard=True,
        is_structured=True,
        separates_structure_from_presentation=separates,
        user_adaptable_syntax=False,
        machine_interpretable=True,
        logic_interpretation=True,
        human_readability_rank=rank,
        expressiveness_flags=frozenset(flags),
    )


# Readability ranks order the known formats relative to each other; the
# terse line-oriented syntaxes sit between the prefix notation and XML.
DEFAULT_PROFILES: dict[str, FormatProfile] = {
    p.format_id: p
    for p in (
        _profile("turtle", 4, flags=("first-order-referable-nodes", "shortcut-constructs")),
        _profile("ntriples", 3),
        _profile("nquads", 2),
        _profile("rdfxml", 1, separates=True),
    )
}

_BOOL_COMPONENTS = (
    "is_standard",
    "is_structured",
    "separates_structure_from_presentation",
    "user_adaptable_syntax",
    "machine_interpretable",
    "logic_interpretation",
)


def load_format_profiles(path) -> dict[str, FormatProfile]:
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    formats = raw.get("formats")
    if not isinstance(formats, list) or not formats:
        raise ConfigurationError("format profile file needs a non-empty 'formats' list")
    table = {}
    for entry in formats:
        try:
            profile = FormatProfile(
                format_id=entry["format_id"],
                is_standard=bool(entry["is_standard"]),
                is_structured=bool(entry["is_structured"]),
                separates_structure_from_presentation=bool(
                    entry["separates_structure_from_presentation"]
                ),
                user_adaptable_syntax=bool(entry["user_adaptable_syntax"]),
                machine_interpretable=bool(entry["machine_interpretable"]),
                logic_interpretation=bool(entry["logic_interpretation"]),
                human_readability_rank=int(entry["human_readability_rank"]),
                expressiveness_flags=frozenset(entry.get("expressiveness_flags", ())),
            )
        except KeyError as exc:
            raise ConfigurationError(f"format profile entry is missing {exc}") from None
        if profile.format_id in table:
            raise ConfigurationError(f"duplicate format profile {profile.format_id!r}")
        table[profile.format_id] = profile
    return table


def profile_for(format_id: str, profiles: dict[str, FormatProfile] | None = None) -> FormatProfile:
    table = DEFAULT_PROFILES if profiles is None else profiles
    profile = table.get(format_id)
    if profile is None:
        raise UnknownFormatError(f"no format profile for {format_id!r}")
    return profile


def _max_rank(profiles: dict[str, FormatProfile] | None) -> int:
    table = DEFAULT_PROFILES if profiles is None else profiles
    return max(p.human_readability_rank for p in table.values())


def components(
    profile: FormatProfile, profiles: dict[str, FormatProfile] | None = None
) -> dict[str, Fraction]:
    """All scored components of a profile, each in [0, 1]."""
    out = {name: Fraction(int(getattr(profile, name))) for name in _BOOL_COMPONENTS}
    out["human_readability"] = Fraction(profile.human_readability_rank, _max_rank(profiles))
    for flag in EXPRESSIVENESS_FLAGS:
        out[flag] = Fraction(int(flag in profile.expressiveness_flags))
    return out


def format_score(
    profile: FormatProfile,
    weights: dict[str, float] | None = None,
    profiles: dict[str, FormatProfile] | None = None,
):
    """Weighted mean of the profile components, uniform weights by default."""
    comps = components(profile, profiles)
    if weights:
        unknown = set(weights) - set(comps)
        if unknown:
            raise ConfigurationError(f"unknown format score components: {sorted(unknown)}")
    acc = Fraction(0)
    total = Fraction(0)
    for name, value in comps.items():
        w = Fraction(weights[name]).limit_denominator(10**9) if weights and name in weights else Fraction(1)
        if w < 0:
            raise ConfigurationError(f"negative weight for component {name!r}")
        acc += w * value
        total += w
    if total == 0:
        raise ConfigurationError("all format score weights are zero")
    value = float(acc / total)
    details = {name: float(v) for name, v in sorted(comps.items())}
    return value, details


def readability_score(profile: FormatProfile, profiles: dict[str, FormatProfile] | None = None):
    return float(Fraction(profile.human_readability_rank, _max_rank(profiles))), {
        "rank": profile.human_readability_rank,
        "max_rank": _max_rank(profiles),
    }


def expressiveness_score(profile: FormatProfile):
    flags = sorted(profile.expressiveness_flags)
    return len(flags) / len(EXPRESSIVENESS_FLAGS), {"flags": flags}


def standard_format_flag(profile: FormatProfile):
    return profile.is_standard, {}


def structured_format_flag(profile: FormatProfile):
    return profile.is_structured, {}


def structure_presentation_flag(profile: FormatProfile):
    return profile.separates_structure_from_presentation, {}


def adaptable_syntax_flag(profile: FormatProfile):
    return profile.user_adaptable_syntax, {}


def machine_interpretable_flag(profile: FormatProfile):
    return profile.machine_interpretable, {}


def logic_interpretation_flag(profile: FormatProfile):
    return profile.logic_interpretation, {}


def logical_constructs_flag(profile: FormatProfile):
    return "numerical-quantifiers" in profile.expressiveness_flags, {}


def shortcut_constructs_flag(profile: FormatProfile):
    return "shortcut-constructs" in profile.expressiveness_flags, {}


def ontological_primitives_flag(profile: FormatProfile):
    return "ontological-primitives" in profile.expressiveness_flags, {}


def referable_entities_flag(profile: FormatProfile):
    return "first-order-referable-nodes" in profile.expressiveness_flags, {}


def concision(stats: SerializationStats):
    """Statements per byte; stays in (0, 1] since a statement spans at
    least one byte."""
    if stats.byte_count == 0:
        raise EmptyTargetError("empty document")
    return stats.triple_count / stats.byte_count, {
        "triple_count": stats.triple_count,
        "byte_count": stats.byte_count,
    }


@dataclass(frozen=True)
class SerializationRow:
    """One line of a format comparison. available is False when the format
    could not be serialized and no external byte count was supplied;
    concision is None whenever it is undefined (no bytes)."""

    format: FormatId
    byte_count: int | None
    triple_count: int | None
    concision: float | None
    available: bool


def compare_serializations(dataset: Dataset, formats, external_bytes=None):
    """Serialize the dataset in each requested format and tabulate size and
    concision, one row per format in the order given.

    Formats the serializer cannot produce get their byte counts from
    external_bytes (format id -> size of a serialization produced elsewhere)
    when present, and an unavailable row otherwise. Never raises for an
    unsupported format; that is the point of the table.
    """
    external_bytes = dict(external_bytes or {})
    triples = dataset.total_triples()
    rows = []
    for fmt in formats:
        try:
            payload = serialize(dataset, fmt)
        except UnsupportedFormatError:
            if fmt.id in external_bytes:
                size = int(external_bytes[fmt.id])
                ratio = triples / size if size > 0 else None
                rows.append(SerializationRow(fmt, size, triples, ratio, True))
            else:
                rows.append(SerializationRow(fmt, None, None, None, False))
            continue
        size = len(payload)
        ratio = triples / size if size > 0 else None
        rows.append(SerializationRow(fmt, size, triples, ratio, True))
    return rows
