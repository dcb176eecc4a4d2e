"""Container metrics: probing, availability, robustness, modular storage.

Network access goes through a ProbeTransport. The live transport is the only
one that touches the network and is never picked implicitly; tests and
reproducible runs use the scripted transport, which replays canned outcomes
with synthesized timestamps. Probe outcomes accumulate in a ProbeLog, the
shared input of the availability, response-time and robustness metrics, and
can be persisted as JSON lines.

All timestamps are unix seconds; all durations are milliseconds.
"""

from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass

from fractions import Fraction

from ..errors import ConfigurationError, EmptyTargetError, StructuralError
from ..rdf import Graph, Iri
from ..vocab import DEFAULT_ACCESS_METHOD_PROPERTIES, RDF_MEDIA_TYPES


@dataclass(frozen=True)
class ProbeOutcome:
    timestamp: float
    target: str
    success: bool
    status_class: str
    latency_ms: float
    media_type: str | None


class ProbeTransport:
    """Fetches one URL and reports what happened. Subclasses implement it."""

    def fetch(self, url: str, accept: str, timeout_ms: float) -> ProbeOutcome:
        raise NotImplementedError


class NoNetworkTransport(ProbeTransport):
    """Refuses every fetch. The default in tests: any code path that would
    hit the network fails loudly instead."""

    def fetch(self, url, accept, timeout_ms):
        raise ConfigurationError(f"live network access is disabled (probe of {url!r})")


class ScriptedTransport(ProbeTransport):
    """Replays canned outcomes per target, in order; the last entry repeats.

    Timestamps are synthesized from a start time and a fixed step per fetch,
    so successive fetches are strictly ordered. An entry scripted as a
    success whose latency exceeds the probe timeout is reported as a timeout
    failure, matching what a real client would observe.
    """

    def __init__(self, script: dict[str, list[dict]], start_time: float = 1_700_000_000.0, step_s: float = 1.0):
        self._script = {url: deque(entries) for url, entries in script.items()}
        self._last: dict[str, dict] = {}
        self._clock = float(start_time)
        self._step = float(step_s)

    @classmethod
    def from_fixture(cls, path) -> "ScriptedTransport":
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
        probes = raw.get("probes")
        if not isinstance(probes, dict):
            raise ConfigurationError("probe fixture needs a 'probes' object")
        return cls(
            probes,
            start_time=raw.get("start_time", 1_700_000_000.0),
            step_s=raw.get("step_s", 1.0),
        )

    def _next_entry(self, url: str) -> dict | None:
        pending = self._script.get(url)
        if pending:
            entry = pending.popleft()
            self._last[url] = entry
            return entry
        return self._last.get(url)

    def fetch(self, url, accept, timeout_ms):
        timestamp = self._clock
        self._clock += self._step
        entry = self._next_entry(url)
        if entry is None:
            return ProbeOutcome(timestamp, url, False, "unreachable", 0.0, None)
        success = bool(entry.get("success"))
        latency = float(entry.get("latency_ms", 0.0))
        media = entry.get("media_type")
        status = entry.get("status_class", "2xx" if success else "5xx")
        if success and latency > timeout_ms:
            return ProbeOutcome(timestamp, url, False, "timeout", float(timeout_ms), None)
        return ProbeOutcome(timestamp, url, success, status, latency, media)


class LiveTransport(ProbeTransport):
    """Actual HTTP GET. Follows up to five redirects."""

    def __init__(self):
        self._session = None

    def _ensure_session(self):
        if self._session is None:
            import requests

            self._session = requests.Session()
            self._session.max_redirects = 5
        return self._session

    def fetch(self, url, accept, timeout_ms):
        import time

        import requests

        session = self._ensure_session()
        started = time.monotonic()
        timestamp = time.time()
        try:
            response = session.get(
                url,
                headers={"Accept": accept},
                timeout=timeout_ms / 1000.0,
                allow_redirects=True,
            )
        except requests.Timeout:
            return ProbeOutcome(timestamp, url, False, "timeout", float(timeout_ms), None)
        except requests.RequestException:
            latency = (time.monotonic() - started) * 1000.0
            return ProbeOutcome(timestamp, url, False, "error", latency, None)
        latency = (time.monotonic() - started) * 1000.0
        status = f"{response.status_code // 100}xx"
        media = response.headers.get("Content-Type")
        return ProbeOutcome(
            timestamp, url, 200 <= response.status_code < 300, status, latency, media
        )


_JSONL_KEYS = ("timestamp", "target", "success", "status-class", "latency-ms", "media-type")


class ProbeLog:
    """Append-only record of probe outcomes, ordered in time per target."""

    def __init__(self, outcomes=()):
        self._outcomes: list[ProbeOutcome] = []
        self._latest: dict[str, float] = {}
        for outcome in outcomes:
            self.append(outcome)

    def append(self, outcome: ProbeOutcome) -> None:
        previous = self._latest.get(outcome.target)
        if previous is not None and outcome.timestamp < previous:
            raise StructuralError(
                f"probe log timestamps must not decrease per target ({outcome.target})"
            )
        self._latest[outcome.target] = outcome.timestamp
        self._outcomes.append(outcome)

    def extend(self, outcomes) -> None:
        for outcome in outcomes:
            self.append(outcome)

    def outcomes(self, target: str | None = None) -> tuple[ProbeOutcome, ...]:
        if target is None:
            return tuple(self._outcomes)
        return tuple(o for o in self._outcomes if o.target == target)

    def __len__(self):
        return len(self._outcomes)

    def __iter__(self):
        return iter(self._outcomes)

    def save_jsonl(self, path, append: bool = True) -> None:
        mode = "a" if append else "w"
        with open(path, mode, encoding="utf-8") as fh:
            for o in self._outcomes:
                row = {
                    "timestamp": o.timestamp,
                    "target": o.target,
                    "success": o.success,
                    "status-class": o.status_class,
                    "latency-ms": o.latency_ms,
                    "media-type": o.media_type,
                }
                fh.write(json.dumps(row, sort_keys=True) + "\n")

    @classmethod
    def load_jsonl(cls, path) -> "ProbeLog":
        log = cls()
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    row = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise ConfigurationError(f"bad probe log line {lineno}: {exc}") from None
                missing = [k for k in _JSONL_KEYS if k not in row]
                if missing:
                    raise ConfigurationError(f"probe log line {lineno} is missing {missing}")
                log.append(
                    ProbeOutcome(
                        float(row["timestamp"]),
                        str(row["target"]),
                        bool(row["success"]),
                        str(row["status-class"]),
                        float(row["latency-ms"]),
                        row["media-type"],
                    )
                )
        return log


# --- metrics ----------------------------------------------------------------


def _rdf_media(media_type: str | None) -> bool:
    if not media_type:
        return False
    return media_type.split(";", 1)[0].strip().lower() in RDF_MEDIA_TYPES


def dereferenceability(
    graph: Graph,
    transport: ProbeTransport,
    *,
    sample_size: int = 10,
    seed: int = 0,
    timeout_ms: float = 10_000.0,
    log: ProbeLog | None = None,
):
    """Sampled fraction of subject IRIs that dereference to an RDF document.

    The sample is drawn without replacement from the sorted candidate list
    with a seeded generator, so a fixed seed fixes the sample. Configuration
    errors from the transport propagate; anything else a transport throws
    counts as a failed probe.
    """
    candidates = sorted(
        {
            s.value
            for s in graph.subjects()
            if isinstance(s, Iri)
            and (s.value.startswith("http://") or s.value.startswith("https://"))
        }
    )
    if not candidates:
        raise EmptyTargetError("no dereferenceable subject IRIs")
    if sample_size < 1:
        raise ConfigurationError("sample_size must be at least 1")
    k = min(sample_size, len(candidates))
    chosen = random.Random(seed).sample(candidates, k)
    accept = ", ".join(sorted(RDF_MEDIA_TYPES))
    good = 0
    failed = set()
    for url in chosen:
        try:
            outcome = transport.fetch(url, accept, timeout_ms)
        except ConfigurationError:
            raise
        except Exception:
            outcome = ProbeOutcome(0.0, url, False, "error", 0.0, None)
        if log is not None:
            log.append(outcome)
        if outcome.success and _rdf_media(outcome.media_type):
            good += 1
        else:
            failed.add(url)
    return good / k, {
        "sampled": k,
        "candidates": len(candidates),
        "failures": sorted(failed),
    }


def availability(log: ProbeLog, target: str | None = None):
    """Successful fraction of the recorded probes."""
    outcomes = log.outcomes(target)
    if not outcomes:
        raise EmptyTargetError("no probe outcomes")
    good = sum(1 for o in outcomes if o.success)
    return good / len(outcomes), {"probes": len(outcomes), "successes": good}


def response_time_stats(log: ProbeLog, target: str | None = None):
    """Latency stats over successful probes: median, 90th percentile, max.

    The median is the lower of the two middle values; the percentile uses
    the nearest-rank rule.
    """
    latencies = sorted(o.latency_ms for o in log.outcomes(target) if o.success)
    if not latencies:
        raise EmptyTargetError("no successful probes")
    n = len(latencies)
    stats = {
        "median_ms": latencies[(n - 1) // 2],
        "p90_ms": latencies[-(-9 * n // 10) - 1],
        "max_ms": latencies[-1],
        "count": n,
    }
    return stats, {}


def robustness(log: ProbeLog, window_s: float, target: str | None = None):
    """Mean per-window availability; windows with no probes are skipped."""
    if window_s <= 0:
        raise ConfigurationError("window_s must be positive")
    outcomes = log.outcomes(target)
    if not outcomes:
        raise EmptyTargetError("no probe outcomes")
    t0 = min(o.timestamp for o in outcomes)
    buckets: dict[int, list[bool]] = {}
    for o in outcomes:
        buckets.setdefault(int((o.timestamp - t0) // window_s), []).append(o.success)
    acc = Fraction(0)
    for flags in buckets.values():
        acc += Fraction(sum(1 for s in flags if s), len(flags))
    value = float(acc / len(buckets))
    return value, {"windows": len(buckets), "probes": len(outcomes)}


def accessibility_methods(graph: Graph):
    """Access methods the dataset's own metadata declares."""
    methods = set()
    hits: dict[str, int] = {}
    for prop, method in DEFAULT_ACCESS_METHOD_PROPERTIES.items():
        count = len(graph.by_predicate(Iri(prop)))
        if count:
            methods.add(method)
            hits[prop] = hits.get(prop, 0) + count
    return tuple(sorted(methods)), {"property_hits": dict(sorted(hits.items()))}


def connectedness(first: Graph, second: Graph):
    """How well the first dataset's outward references land in the second.

    Only objects external to the first dataset count: an object that is also
    one of its own subjects is internal, and counting it could push the
    ratio past 1 when the datasets overlap.
    """
    own_subjects = first.subjects()
    external = {
        t.object for t in first if isinstance(t.object, Iri) and t.object not in own_subjects
    }
    if not external:
        raise EmptyTargetError("no external object IRIs in the first dataset")
    joined = external & second.subjects()
    return len(joined) / len(external), {
        "external_objects": len(external),
        "joined": len(joined),
    }
