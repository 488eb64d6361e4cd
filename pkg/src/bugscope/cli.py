"""Command-line front end.

Every verb prints one JSON document (or a flat text projection of it).  Apart
from the ``meta`` block, which carries a timestamp and wall-clock time, the
output depends only on the inputs and options.

Exit codes: 0 success, 1 negative outcome (a failed ``--expect`` or a failed
lemma), 2 input error, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from datetime import datetime, timezone
from fractions import Fraction

from . import __version__
from .centrality import betweenness_exact, parse_rational, rational_str
from .certify import is_cobug
from .constructions import FAMILIES, build
from .errors import BugscopeError, CapExceededError, GraphFormatError
from .graph import diameter
from .io import read_graph, to_edge_list, to_graph6
from .search import SearchConfig, exhaustive_bug_scan, exotic_search
from .verify import run_lemmas

SCHEMA = "bugscope/1"
EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3
#: graph6 needs about n^2/12 bytes; larger graphs are written as edge lists.
GRAPH6_MAX_N = 20000

log = logging.getLogger("bugscope")


class Negative(Exception):
    """Raised after output is written when the outcome is negative."""


# ---------------------------------------------------------------------------
# verbs
# ---------------------------------------------------------------------------

def cmd_analyze(args):
    g = read_graph(args.path)
    prof = betweenness_exact(g)
    out = {"n": g.n, "edges": g.m, "diameter": diameter(g)}
    out.update(prof.to_dict())
    return out


def cmd_certify(args):
    g = read_graph(args.path)
    report = is_cobug(g, with_structure=not args.no_structure)
    out = report.to_dict()
    failed = []
    if args.expect_cobug and not report.is_cobug:
        failed.append("expected a coBUG")
    if args.expect_not_cobug and report.is_cobug:
        failed.append("expected not a coBUG")
    if args.expect_exotic and not report.exotic:
        failed.append("expected an exotic coBUG")
    if args.expect_not_exotic and report.exotic:
        failed.append("expected a non-exotic verdict")
    if args.expect_betweenness is not None:
        want = parse_rational(args.expect_betweenness)
        if report.betweenness_value != want:
            failed.append(f"expected betweenness {rational_str(want)}")
    if failed:
        out["expectations_failed"] = failed
    return out, bool(failed)


def parse_family_params(tokens):
    """``["3", "2"]``, ``["4,4"]`` and ``["4", "4"]`` all read as integer lists."""
    values = []
    for tok in tokens:
        for part in tok.replace(",", " ").split():
            try:
                values.append(int(part))
            except ValueError:
                raise GraphFormatError(f"family parameter {part!r} is not an integer") from None
    return values


def cmd_construct(args):
    params = parse_family_params(args.params)
    c = build(args.family, params)
    out = c.to_dict()
    fmt = args.graph_format
    if fmt is None:
        fmt = "edges" if args.family == "inflated" or c.graph.n > GRAPH6_MAX_N else "graph6"
    if fmt == "graph6" and c.graph.n > GRAPH6_MAX_N:
        raise CapExceededError(f"graph6 output is limited to n <= {GRAPH6_MAX_N}; use --graph-format edges")
    if args.graph_out:
        text = to_graph6(c.graph) + "\n" if fmt == "graph6" else to_edge_list(c.graph)
        with open(args.graph_out, "w") as fh:
            fh.write(text)
        out["graph_file"] = args.graph_out
        out["graph_format"] = fmt
    elif fmt == "graph6":
        out["graph6"] = to_graph6(c.graph)
    if args.certify:
        report = is_cobug(c.graph, with_structure=False)
        out["certification"] = report.to_dict()
        out["prediction_matches"] = report.is_cobug and report.betweenness_value == c.predicted_betweenness
        return out, not out["prediction_matches"]
    return out, False


def cmd_search(args):
    cfg = SearchConfig(
        ell_min=args.ell_min,
        ell_max=args.ell_max,
        component_vertex_cap=args.cap,
        n_cap=args.n_cap,
        max_nonstar_components=args.max_nonstar,
        low_betweenness_only=not args.allow_betweenness_one,
        corpus=args.corpus,
        workers=args.jobs,
    )
    result = exotic_search(cfg)
    out = result.to_dict()
    out["accounted"] = result.accounts_for_everything()
    return out, result.wall_clock


def cmd_verify(args):
    report = run_lemmas(args.n_max, args.ell_max, cap=args.cap, progress=log.info)
    return report.to_dict(), not report.all_passed


def cmd_scan(args):
    entries = exhaustive_bug_scan(args.n_max)
    return {
        "n_max": args.n_max,
        "count": len(entries),
        "bugs": [e.to_dict() for e in entries],
        "values": sorted({rational_str(e.value) for e in entries}, key=Fraction),
    }


# ---------------------------------------------------------------------------
# plumbing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="bugscope",
        description="Exact certification and search for betweenness-uniform graphs and their complements.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="write the report here instead of stdout")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--jobs", type=int, default=os.cpu_count() or 1, help="worker processes")
    common.add_argument("--deterministic", action="store_true", help="force single-process execution")
    common.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="verb", required=True)

    a = sub.add_parser("analyze", parents=[common], help="exact betweenness of a connected graph")
    a.add_argument("path", help="graph6 or edge-list file")

    c = sub.add_parser("certify", parents=[common], help="decide whether the complement is a BUG")
    c.add_argument("path", help="graph6 or edge-list file")
    c.add_argument("--no-structure", action="store_true", help="skip per-component structural verdicts")
    c.add_argument("--expect-cobug", action="store_true")
    c.add_argument("--expect-not-cobug", action="store_true")
    c.add_argument("--expect-exotic", action="store_true")
    c.add_argument("--expect-not-exotic", action="store_true")
    c.add_argument("--expect-betweenness", metavar="P/Q")

    k = sub.add_parser("construct", parents=[common], help="generate a coBUG family member")
    k.add_argument("family", choices=FAMILIES)
    k.add_argument("params", nargs="*", help="integers, space or comma separated")
    k.add_argument("--graph-out", help="file for the generated graph")
    k.add_argument("--graph-format", choices=("graph6", "edges"))
    k.add_argument("--certify", action="store_true", help="certify the generated graph too")

    s = sub.add_parser("search", parents=[common], help="exhaustive search for exotic coBUGs")
    s.add_argument("--ell-min", type=int, default=0)
    s.add_argument("--ell-max", type=int, default=8)
    s.add_argument("--cap", type=int, default=8, help="largest non-star component")
    s.add_argument("--n-cap", type=int, default=200, help="largest host size")
    s.add_argument("--max-nonstar", type=int, choices=(1, 2), default=1)
    s.add_argument("--allow-betweenness-one", action="store_true",
                   help="skip the low-betweenness filters and report every coBUG found")
    s.add_argument("--corpus", help="graph6 file with components beyond the built-in enumerator")

    v = sub.add_parser("verify-lemmas", parents=[common], help="exhaustive lemma checks")
    v.add_argument("--n-max", type=int, default=7)
    v.add_argument("--ell-max", type=int, default=8)
    v.add_argument("--cap", type=int, help="component cap for star exclusions (default n-max)")

    sc = sub.add_parser("scan", parents=[common], help="list every connected BUG up to n-max vertices")
    sc.add_argument("--n-max", type=int, default=7)
    return p


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for key, val in obj.items():
            yield from _flatten(val, f"{prefix}{key}.")
    elif isinstance(obj, list) and obj and isinstance(obj[0], (dict, list)):
        for i, val in enumerate(obj):
            yield from _flatten(val, f"{prefix}{i}.")
    else:
        val = ", ".join(map(str, obj)) if isinstance(obj, list) else obj
        yield f"{prefix[:-1]}: {val}"


def render(doc: dict, fmt: str) -> str:
    if fmt == "text":
        return "\n".join(_flatten(doc)) + "\n"
    return json.dumps(doc, indent=2) + "\n"


def _json_safe(obj):
    if isinstance(obj, float) and obj == float("inf"):
        return "inf"
    if isinstance(obj, dict):
        return {k: _json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_safe(v) for v in obj]
    return obj


HANDLERS = {
    "analyze": cmd_analyze,
    "certify": cmd_certify,
    "construct": cmd_construct,
    "search": cmd_search,
    "verify-lemmas": cmd_verify,
    "scan": cmd_scan,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    if args.deterministic:
        args.jobs = 1
    started = time.perf_counter()
    stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")

    negative = False
    try:
        value = HANDLERS[args.verb](args)
    except CapExceededError as exc:
        print(f"bugscope: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (BugscopeError, OSError) as exc:
        print(f"bugscope: {exc}", file=sys.stderr)
        return EXIT_INPUT

    if args.verb == "search":
        value, _ = value
    elif isinstance(value, tuple):
        value, negative = value
    doc = {
        "schema": SCHEMA,
        "command": args.verb,
        "result": _json_safe(value),
        "meta": {
            "timestamp": stamp,
            "wall_clock_seconds": round(time.perf_counter() - started, 3),
            "version": __version__,
        },
    }
    text = render(doc, args.format)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_NEGATIVE if negative else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
