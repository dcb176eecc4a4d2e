"""Command line front end.

Exit codes: 0 on success, 1 when an assessment misses the requested
threshold, 2 for usage and data errors (bad input in strict mode, bad
config, unknown categories), 3 for filesystem trouble.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .aggregate import default_profile, load_profile, merge_profiles
from .assess import AssessmentConfig, load_input, run_assessment
from .errors import ConfigurationError, EmptyTargetError, LdqualError
from .metrics.container import LiveTransport, ProbeLog, ScriptedTransport
from .rdf import Iri
from .report import build_report, dump_report, render_text
from .schema import load_schema
from .taxonomy import TaxonomyGraph, load_builtin
from .vocab import RDF_MEDIA_TYPES

EXIT_OK = 0
EXIT_THRESHOLD = 1
EXIT_ERROR = 2
EXIT_IO = 3

# The grade an assessment is judged on when --threshold is given.
THRESHOLD_NODE = "pm:description-content_quality"


def _transport_from(spec: str):
    if spec == "live":
        return LiveTransport()
    if spec.startswith("fixture:"):
        return ScriptedTransport.from_fixture(spec[len("fixture:") :])
    raise ConfigurationError(
        f"unknown probe transport {spec!r}; use 'live' or 'fixture:PATH'"
    )


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_assess(args) -> int:
    taxonomy = load_builtin()
    profile = default_profile()
    profile_path = args.profile or os.environ.get("LDQUAL_PROFILE")
    if profile_path:
        profile = merge_profiles(profile, load_profile(profile_path, taxonomy))

    config = AssessmentConfig(
        sample_size=args.sample,
        seed=args.seed,
        timeout_ms=args.timeout_ms,
        probe_window_s=args.window_s,
    )
    if args.lds_property:
        config.lds_property = Iri(args.lds_property)
    if args.contradiction_predicate:
        config.contradiction_predicates = tuple(
            Iri(p) for p in args.contradiction_predicate
        )
    if args.namespaces:
        config.local_namespaces = tuple(args.namespaces)

    schema = load_schema(args.schema) if args.schema else None

    # probing is opt-in and the transport must be named; a silent fallback
    # to live requests is exactly what must never happen
    transport = None
    if args.probe:
        if not args.probe_transport:
            raise ConfigurationError(
                "--probe needs --probe-transport (live or fixture:PATH)"
            )
        transport = _transport_from(args.probe_transport)
    probe_log = None
    if args.probe_log and os.path.exists(args.probe_log):
        probe_log = ProbeLog.load_jsonl(args.probe_log)

    paths = list(args.inputs) + list(args.input or ())
    if not paths:
        raise ConfigurationError("no inputs given; pass paths or --input")
    records = [
        load_input(path, format_id=args.format, strict=args.strict) for path in paths
    ]
    run = run_assessment(
        records,
        taxonomy=taxonomy,
        schema=schema,
        profile=profile,
        config=config,
        transport=transport,
        probe_log=probe_log,
    )
    report = build_report(run)
    if args.output == "json":
        rendered = dump_report(report)
    else:
        rendered = render_text(report, show_all=args.all)
    _emit(rendered, args.out)

    if args.threshold is not None:
        score = run.tree.score(THRESHOLD_NODE)
        if score is None or score < args.threshold:
            shown = "n/a" if score is None else f"{score:.4f}"
            print(
                f"threshold not met: {THRESHOLD_NODE} = {shown} < {args.threshold}",
                file=sys.stderr,
            )
            return EXIT_THRESHOLD
    return EXIT_OK


def _print_subtree(taxonomy: TaxonomyGraph, root: str, max_depth: int | None) -> None:
    seen: set[str] = set()

    def walk(ident: str, depth: int):
        node = taxonomy.node(ident)
        pad = "  " * depth
        if ident in seen:
            print(f"{pad}{ident} *")
            return
        seen.add(ident)
        extra = ""
        if node.result_kind:
            extra = f"  [{node.result_kind}]"
        if node.evaluator:
            extra = f"  [{node.result_kind} <- {node.evaluator}]"
        print(f"{pad}{ident}{extra}")
        if max_depth is not None and depth + 1 > max_depth:
            return
        for child in taxonomy.children(ident):
            walk(child, depth + 1)

    walk(root, 0)


def cmd_taxonomy(args) -> int:
    taxonomy = load_builtin()
    if args.json:
        print(json.dumps(taxonomy.to_json(), indent=2, ensure_ascii=False))
        return EXIT_OK
    root = taxonomy.resolve(args.root) if args.root else "pm:quality"
    _print_subtree(taxonomy, root, args.depth)
    return EXIT_OK


def cmd_explain(args) -> int:
    taxonomy = load_builtin()
    canonical = taxonomy.resolve(args.category)
    node = taxonomy.node(canonical)
    info = {
        "id": node.id,
        "label": node.label,
        "source": node.source,
        "kind": node.kind,
        "result_kind": node.result_kind,
        "signature": list(node.signature),
        "parents": list(node.parents),
        "children": list(taxonomy.children(canonical)),
        "aliases": sorted(taxonomy.aliases_of(canonical)),
        "evaluator": node.evaluator,
        "provisional": node.provisional,
    }
    if node.note:
        info["note"] = node.note
    if node.evaluator:
        info["status"] = "evaluator-bound"
    elif info["children"]:
        info["status"] = "aggregates its children"
    else:
        info["status"] = "declared-only: no evaluator is bound"
        info["why"] = node.note or (
            "the category needs context the toolkit does not ingest"
        )
    if node.kind == "function-type" and node.result_kind == "boolean":
        info["derived_relation"] = taxonomy.derive_view(canonical, "relation").id
        info["derived_concept"] = taxonomy.derive_view(canonical, "concept").id

    profile = default_profile()
    defaults: dict = {"weight": profile.weight_of(canonical)}
    if canonical in profile.normalizers:
        norm = profile.normalizers[canonical]
        defaults["normalizer"] = {"target": norm.target, "direction": norm.direction}
    defaults["combinator"] = profile.combinators.get(canonical, "mean")
    if canonical in profile.disabled:
        defaults["disabled"] = True
    info["profile_defaults"] = defaults

    if args.json:
        print(json.dumps(info, indent=2, sort_keys=True, ensure_ascii=False))
        return EXIT_OK
    print(f"{info['id']}  ({info['source']}, {info['kind']})")
    for key in (
        "label",
        "result_kind",
        "signature",
        "parents",
        "children",
        "aliases",
        "evaluator",
        "status",
        "why",
        "note",
        "derived_relation",
        "derived_concept",
    ):
        value = info.get(key)
        if value in (None, [], ()):
            continue
        if isinstance(value, list):
            value = ", ".join(value)
        print(f"  {key}: {value}")
    norm = defaults.get("normalizer")
    line = f"  default weight: {defaults['weight']}, combinator: {defaults['combinator']}"
    if norm:
        line += f", normalizer: {norm['target']} ({norm['direction']})"
    print(line)
    if info["provisional"]:
        print("  provisional: yes")
    return EXIT_OK


def _probe_targets(args) -> list[str]:
    targets = list(args.urls)
    derived: set[str] = set()
    for path in args.input or ():
        record = load_input(path)
        for s in record.dataset.default_graph.subjects():
            if isinstance(s, Iri) and s.value.startswith(("http://", "https://")):
                derived.add(s.value)
    targets.extend(sorted(derived))
    # dedupe, keep first-seen order so explicit urls stay in front
    seen: set[str] = set()
    ordered = [t for t in targets if not (t in seen or seen.add(t))]
    if not ordered:
        raise EmptyTargetError("no probe targets; pass URLs or --input with http subjects")
    return ordered


def cmd_probe(args) -> int:
    transport = _transport_from(args.transport)
    targets = _probe_targets(args)
    accept = ", ".join(sorted(RDF_MEDIA_TYPES))
    fresh = ProbeLog()
    for _ in range(args.count):
        for url in targets:
            fresh.append(transport.fetch(url, accept, args.timeout_ms))
    if args.log:
        history = (
            ProbeLog.load_jsonl(args.log) if os.path.exists(args.log) else ProbeLog()
        )
        # only the new outcomes land in the file, but the stats below cover
        # the whole accumulated log
        fresh.save_jsonl(args.log, append=True)
        merged = sorted(
            list(history.outcomes()) + list(fresh.outcomes()),
            key=lambda o: o.timestamp,
        )
        log = ProbeLog(merged)
    else:
        log = fresh

    summary = {}
    for url in targets:
        outcomes = log.outcomes(url)
        good = [o for o in outcomes if o.success]
        entry = {
            "probes": len(outcomes),
            "availability": len(good) / len(outcomes) if outcomes else None,
        }
        if good:
            latencies = sorted(o.latency_ms for o in good)
            entry["median_ms"] = latencies[(len(latencies) - 1) // 2]
        if args.window_s:
            from .metrics.container import robustness

            try:
                entry["robustness"], _ = robustness(log, args.window_s, target=url)
            except LdqualError:
                entry["robustness"] = None
        summary[url] = entry

    if args.json:
        print(json.dumps(summary, indent=2, sort_keys=True, ensure_ascii=False))
        return EXIT_OK
    for url in targets:
        entry = summary[url]
        avail = entry["availability"]
        line = f"{url}: {entry['probes']} probes"
        line += f", availability {avail:.2f}" if avail is not None else ", no outcomes"
        if "median_ms" in entry:
            line += f", median {entry['median_ms']:.1f} ms"
        if entry.get("robustness") is not None:
            line += f", robustness {entry['robustness']:.2f}"
        print(line)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ldqual", description="Linked data quality assessment"
    )
    parser.add_argument("--version", action="version", version=f"ldqual {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("assess", help="assess one or more RDF inputs")
    p.add_argument("inputs", nargs="*", help="input files (N-Triples, N-Quads, Turtle)")
    p.add_argument(
        "--input", action="append", help="input file (repeatable; same as positional)"
    )
    p.add_argument("--format", help="force a format id instead of detecting")
    p.add_argument("--strict", action="store_true", help="fail on the first parse error")
    p.add_argument("--schema", help="schema file with requirements and axioms")
    p.add_argument("--profile", help="profile JSON (or set LDQUAL_PROFILE)")
    p.add_argument(
        "--output", choices=("json", "text"), default="text", help="report form"
    )
    p.add_argument("--all", action="store_true", help="text report lists every node")
    p.add_argument("--out", help="write the report to a file instead of stdout")
    p.add_argument("--threshold", type=float, help="minimum content-quality score")
    p.add_argument("--probe", action="store_true", help="run container probes")
    p.add_argument(
        "--probe-transport", help="'live' or 'fixture:PATH'; required with --probe"
    )
    p.add_argument("--probe-log", help="existing probe JSONL to feed probe metrics")
    p.add_argument("--lds-property", help="property for LDS completeness")
    p.add_argument(
        "--contradiction-predicate",
        action="append",
        help="predicate whose values contradict each other (repeatable)",
    )
    p.add_argument(
        "--namespaces",
        action="append",
        metavar="PREFIX",
        help="namespace treated as internal for link metrics (repeatable)",
    )
    p.add_argument("--sample", type=int, default=10, help="probe sample size")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timeout-ms", type=float, default=10_000.0)
    p.add_argument("--window-s", type=float, default=60.0)
    p.set_defaults(func=cmd_assess)

    p = sub.add_parser("taxonomy", help="print the quality function taxonomy")
    p.add_argument("root", nargs="?", help="subtree root (default: the root)")
    p.add_argument("--depth", type=int, help="levels to show")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_taxonomy)

    p = sub.add_parser("explain", help="describe one category")
    p.add_argument("category", help="category id or alias")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_explain)

    p = sub.add_parser("probe", help="probe container endpoints and log outcomes")
    p.add_argument("urls", nargs="*")
    p.add_argument(
        "--input", action="append", help="derive targets from this file's subject IRIs"
    )
    p.add_argument(
        "--transport", required=True, help="'live' or 'fixture:PATH'; always explicit"
    )
    p.add_argument("--count", type=int, default=1, help="probes per URL")
    p.add_argument("--log", help="JSONL file to append outcomes to")
    p.add_argument("--window-s", type=float, help="also report windowed robustness")
    p.add_argument("--timeout-ms", type=float, default=10_000.0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_probe)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LdqualError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
