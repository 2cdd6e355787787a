"""Command-line front end.

Verbs: params, pack, cover, construct, verify, probe. Machine-readable
JSON goes to stdout (one compact object per line); human summaries go to
stderr. Exit codes: 0 success/YES, 1 NO or probe violation, 2 input error,
3 precondition error, 4 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import extremal, probes
from .graphs import (
    GraphFormatError,
    PreconditionError,
    blow_up,
    complete_multipartite,
    parse_graph6,
    parse_graph_text,
    to_graph6,
)
from .packing import DEFAULT_BUDGET, Verdict, copy_covering_vertex, has_perfect_packing, verify_packing
from .parameters import full_report

EXIT_OK = 0
EXIT_NO = 1
EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_UNKNOWN = 4


def _emit(obj) -> None:
    print(json.dumps(obj, separators=(",", ":"), sort_keys=False))


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


def _load_graph(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    return parse_graph_text(text)


def _load_json(path: str) -> dict:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    return json.loads(text)


def cmd_params(args) -> int:
    report = full_report(_load_graph(args.graph))
    _emit(report.to_json_dict())
    return EXIT_OK


def cmd_pack(args) -> int:
    g = _load_graph(args.graph)
    h = _load_graph(args.packing_graph)
    result = has_perfect_packing(g, h, args.budget)
    print(result.verdict.value.upper())
    _note(f"packing search explored {result.nodes} nodes")
    if args.find and result.verdict is Verdict.YES:
        assert verify_packing(g, h, result.certificate)
        _emit(result.to_json_dict())
    if result.verdict is Verdict.YES:
        return EXIT_OK
    if result.verdict is Verdict.NO:
        return EXIT_NO
    return EXIT_UNKNOWN


def cmd_cover(args) -> int:
    g = _load_graph(args.graph)
    h = _load_graph(args.packing_graph)
    if not 0 <= args.w < g.n:
        raise GraphFormatError(f"vertex {args.w} out of range for order {g.n}")
    result = copy_covering_vertex(g, h, args.w, args.budget)
    _note(f"anchored search explored {result.nodes} nodes")
    if result.verdict is Verdict.YES:
        _emit(result.embedding.to_json())
        return EXIT_OK
    if result.verdict is Verdict.NO:
        print("NONE")
        return EXIT_NO
    print("UNKNOWN")
    return EXIT_UNKNOWN


def _parse_sizes(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise PreconditionError(f"bad size list {text!r}") from None


def cmd_construct(args) -> int:
    family = args.family
    if family == "prop1":
        _require(args, "r", "n")
        inst = extremal.construct_prop1(args.r, args.n)
        meta = inst.to_json_dict()
        graph = inst.graph
    elif family == "prop2":
        _require(args, "r", "m", "h_order", "t")
        inst = extremal.construct_prop2(args.r, args.m, args.h_order, args.t)
        meta = inst.to_json_dict()
        graph = inst.graph
    elif family == "prop2-padded":
        _require(args, "r", "m", "h_order", "n")
        inst = extremal.construct_prop2_padded(args.r, args.m, args.h_order, args.n)
        meta = inst.to_json_dict()
        graph = inst.graph
    elif family == "fdiamond":
        graph = extremal.construct_fdiamond()
        meta = {"graph6": to_graph6(graph), "family": family, "params": {}}
    elif family == "hdiamond":
        _require(args, "k", "r", "sizes")
        sizes = _parse_sizes(args.sizes)
        graph = extremal.construct_hdiamond(args.k, args.r, sizes)
        meta = {
            "graph6": to_graph6(graph),
            "family": family,
            "params": {"k": args.k, "r": args.r, "sizes": sizes},
        }
    elif family == "multipartite":
        _require(args, "sizes")
        sizes = _parse_sizes(args.sizes)
        graph, partition = complete_multipartite(sizes)
        meta = {
            "graph6": to_graph6(graph),
            "family": family,
            "params": {"sizes": sizes},
            "classes": [sorted(c) for c in partition.classes],
        }
    elif family == "blowup":
        _require(args, "graph", "t")
        base = _load_graph(args.graph)
        graph = blow_up(base, args.t)
        meta = {"graph6": to_graph6(graph), "family": family, "params": {"t": args.t}}
    else:  # pragma: no cover - argparse restricts choices
        raise PreconditionError(f"unknown family {family!r}")
    print(to_graph6(graph))
    _emit(meta)
    _note(f"{family}: {graph.n} vertices, {graph.edge_count()} edges")
    return EXIT_OK


def _require(args, *names: str) -> None:
    for name in names:
        if getattr(args, name, None) is None:
            raise PreconditionError(f"--{name.replace('_', '-')} is required here")


def cmd_verify(args) -> int:
    payload = _load_json(args.instance)
    try:
        inst = extremal.ExtremalInstance(
            graph=parse_graph6(payload["graph6"]),
            w=int(payload["w"]),
            claimed_ore_bound=Fraction(
                int(payload["claimed_bound"]["num"]),
                int(payload["claimed_bound"]["den"]),
            ),
            family=str(payload["family"]),
            params={k: int(v) for k, v in payload["params"].items()},
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphFormatError(f"bad instance JSON: {exc}") from None
    h = _load_graph(args.packing_graph)
    report = extremal.verify_lower_bound(inst, h, args.budget)
    _emit(report.to_json_dict())
    if report.no_cover is Verdict.UNKNOWN:
        return EXIT_UNKNOWN
    return EXIT_OK if report.all_ok else EXIT_NO


def cmd_probe(args) -> int:
    config = probes.ProbeConfig(
        family=args.family,
        n=args.n,
        samples=args.samples,
        seed=args.seed,
        r=args.r,
        budget=args.budget,
    )
    summary = probes.run_probe(config)
    _emit(summary.to_json_dict())
    _note(
        f"{args.family}: {summary.condition_hits} hypothesis hits in "
        f"{summary.samples} samples, {summary.violations} violations"
    )
    for g6 in summary.violation_graphs:
        _note(f"violation: {g6}")
    if summary.violations:
        return EXIT_NO
    if summary.unknowns:
        return EXIT_UNKNOWN
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orepack",
        description="Exact toolkit for perfect-packing parameters under "
        "Ore-type degree conditions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="compute the parameter report of a graph")
    p.add_argument("graph", help="graph file (graph6 or edge list), '-' for stdin")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("pack", help="decide whether G has a perfect H-packing")
    p.add_argument("graph", help="host graph G")
    p.add_argument("packing_graph", help="packed graph H")
    p.add_argument("--find", action="store_true", help="print a verified certificate")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_pack)

    p = sub.add_parser("cover", help="find a copy of H covering vertex w of G")
    p.add_argument("graph")
    p.add_argument("packing_graph")
    p.add_argument("w", type=int)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("construct", help="emit a named construction")
    p.add_argument(
        "family",
        choices=[
            "prop1",
            "prop2",
            "prop2-padded",
            "fdiamond",
            "hdiamond",
            "multipartite",
            "blowup",
        ],
    )
    p.add_argument("--r", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--h-order", dest="h_order", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--sizes", help="comma-separated class sizes")
    p.add_argument("--graph", help="base graph for blowup")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="re-check a construction against an H")
    p.add_argument("instance", help="instance JSON file, '-' for stdin")
    p.add_argument("packing_graph")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("probe", help="randomized check of a packing theorem")
    p.add_argument("--family", required=True, choices=list(probes.PROBE_FAMILIES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_probe)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, OSError, json.JSONDecodeError) as exc:
        _note(f"input error: {exc}")
        return EXIT_INPUT
    except PreconditionError as exc:
        _note(f"precondition error: {exc}")
        return EXIT_PRECONDITION


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
