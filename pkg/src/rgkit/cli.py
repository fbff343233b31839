"""Command-line front end.

Exit codes: 0 success, 1 property violation or negative decision, 2 usage
error (malformed sequences, bad graph JSON, I/O problems).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cliques import (
    COLUMN_NAMES,
    clique_number_of_realization,
    filter_overlap_solutions,
    in_clique,
    solve_overlap_system,
    TriangleWitness,
)
from .core import (
    AlternatingFourCycle,
    DegreeSequence,
    LabeledGraph,
    graph_from_json_dict,
    graph_to_json_dict,
)
from .dial import DialEmbedding, find_dial_embedding, max_dial_size
from .errors import LimitExceededError, NotGraphicError, RgkitError
from .realization import DEFAULT_LIMIT, enumerate_realizations
from .realization_graph import (
    build_realization_graph,
    is_connected,
    realization_graph_to_json_dict,
    to_dot,
)
from .sweep import KNOWN_CHECKS, SweepConfig, run_sweep
from .tyshkevich import decompose, is_complete_realization_graph


def _default_limit() -> int:
    raw = os.environ.get("RGKIT_LIMIT")
    if raw is None:
        return DEFAULT_LIMIT
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"RGKIT_LIMIT must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError(f"RGKIT_LIMIT must be positive, got {value}")
    return value


def _parse_sequence(text: str) -> DegreeSequence:
    return DegreeSequence.parse(text)


def _load_graph(path: str) -> LabeledGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return graph_from_json_dict(json.load(fh))


def _edge_string(g: LabeledGraph) -> str:
    if not g.edges:
        return "-"
    return " ".join(f"{a + 1}-{b + 1}" for a, b in g.encoding)


def _witness_json(witness) -> dict | None:
    if witness is None:
        return None
    if isinstance(witness, DialEmbedding):
        return {
            "u": witness.hub_u + 1,
            "v": witness.hub_v + 1,
            "needle": witness.needle_spoke + 1,
            "spokes": [s + 1 for s in witness.other_spokes],
        }
    if isinstance(witness, TriangleWitness):
        return {"kind": witness.kind, "vertices": [v + 1 for v in witness.vertices]}
    if isinstance(witness, AlternatingFourCycle):
        return {"cycle": [v + 1 for v in witness.vertices]}
    return {"repr": repr(witness)}


def _cmd_enum(args) -> int:
    d = _parse_sequence(args.sequence)
    rs = enumerate_realizations(d, args.limit)
    if args.count:
        print(len(rs))
        return 0
    if args.json:
        payload = {
            "sequence": list(d.terms),
            "count": len(rs),
            "realizations": [graph_to_json_dict(g) for g in rs],
        }
        print(json.dumps(payload, sort_keys=True))
        return 0
    print(f"{d.display()}: {len(rs)} realizations")
    for g in rs:
        print(_edge_string(g))
    return 0


def _cmd_graph(args) -> int:
    d = _parse_sequence(args.sequence)
    rg = build_realization_graph(d, args.limit)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(to_dot(rg))
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(realization_graph_to_json_dict(rg), fh, sort_keys=True)
            fh.write("\n")
    print(
        f"G{d.display()}: {rg.node_count} nodes, {len(rg.edges)} edges, "
        f"degree sequence {rg.node_degree_sequence().display()}, "
        f"connected={is_connected(rg)}"
    )
    return 0


def _cmd_dial(args) -> int:
    g = _load_graph(args.graph)
    if args.n is not None:
        emb = find_dial_embedding(g, args.n)
        if emb is None:
            print("absent")
            return 1
        print(json.dumps(_witness_json(emb), sort_keys=True))
        return 0
    print(max_dial_size(g))
    return 0


def _cmd_clique(args) -> int:
    g = _load_graph(args.graph)
    if args.n is not None:
        result = in_clique(g, args.n)
        payload = {
            "n": args.n,
            "member": result.member,
            "witness": _witness_json(result.witness),
        }
        print(json.dumps(payload, sort_keys=True))
        return 0 if result.member else 1
    report = clique_number_of_realization(g, verify=args.verify, limit=args.limit)
    payload = {
        "predicted": report.clique_number_predicted,
        "witness": _witness_json(report.witness),
        "oracle": report.clique_number_oracle,
    }
    print(json.dumps(payload, sort_keys=True))
    if args.verify and report.clique_number_oracle != report.clique_number_predicted:
        print("violation: prediction disagrees with oracle", file=sys.stderr)
        return 1
    return 0


def _cmd_venn_table(args) -> int:
    rows = solve_overlap_system()
    survivors = filter_overlap_solutions(rows)
    if args.json:
        payload = {
            "columns": list(COLUMN_NAMES),
            "rows": [list(r.row_strings()) for r in rows],
            "survivors": [rows.index(s) + 1 for s in survivors],
        }
        print(json.dumps(payload, sort_keys=True))
        return 0
    widths = [max(len(name), 4) for name in COLUMN_NAMES]
    print("  ".join(name.rjust(w) for name, w in zip(COLUMN_NAMES, widths)))
    for row in rows:
        cells = row.row_strings()
        marker = "  <- survivor" if row in survivors else ""
        print("  ".join(c.rjust(w) for c, w in zip(cells, widths)) + marker)
    return 0


def _cmd_decompose(args) -> int:
    d = _parse_sequence(args.sequence)
    print(decompose(d).display())
    return 0


def _cmd_complete(args) -> int:
    d = _parse_sequence(args.sequence)
    witness = is_complete_realization_graph(d)
    if witness is None:
        print("not complete")
        return 1
    t = witness.prefix.display() if witness.prefix else "(omitted)"
    t2 = witness.suffix.display() if witness.suffix else "(omitted)"
    print(
        f"complete: K_{witness.order}; "
        f"t = {t}, alpha = {witness.alpha.display()} [{witness.spokes} spokes], "
        f"t' = {t2}"
    )
    return 0


def _cmd_sweep(args) -> int:
    checks = frozenset(args.checks.split(",")) if args.checks else frozenset(KNOWN_CHECKS)
    sizes = tuple(int(t) for t in args.clique_sizes.split(","))
    cfg = SweepConfig(
        max_vertices=args.max_vertices,
        max_realizations=args.max_realizations,
        clique_sizes=sizes,
        checks=checks,
    )
    report = run_sweep(
        cfg, workers=args.workers, sink=lambda rec: print(json.dumps(rec, sort_keys=True))
    )
    print(json.dumps({"summary": report.summary, "ok": report.ok}, sort_keys=True))
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rgkit",
        description="Degree sequences, 2-switch realization graphs, dial "
        "configurations, and Tyshkevich decomposition.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enum", help="enumerate all labeled realizations")
    p.add_argument("sequence", help='degree sequence, e.g. "2,2,2,1,1" or "6,4^6"')
    p.add_argument("--limit", type=int, default=None)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true")
    group.add_argument("--count", action="store_true")
    p.set_defaults(func=_cmd_enum)

    p = sub.add_parser("graph", help="build the realization graph")
    p.add_argument("sequence")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--dot", metavar="FILE", help="write DOT output")
    p.add_argument("--json", metavar="FILE", help="write JSON output")
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("dial", help="find dial configurations in one graph")
    p.add_argument("graph", help="graph JSON file")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--n", type=int, help="look for a dial of this size")
    group.add_argument("--max", action="store_true", help="print the largest dial size (default)")
    p.set_defaults(func=_cmd_dial)

    p = sub.add_parser("clique", help="clique membership / clique number of a realization")
    p.add_argument("graph", help="graph JSON file")
    p.add_argument("--n", type=int, help="test membership in a clique of this size")
    p.add_argument("--verify", action="store_true", help="cross-check against the exact oracle")
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=_cmd_clique)

    p = sub.add_parser("venn-table", help="print the 4-clique edge-overlap solution table")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_venn_table)

    p = sub.add_parser("decompose", help="canonical decomposition of a sequence")
    p.add_argument("sequence")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("complete", help="decide whether the realization graph is complete")
    p.add_argument("sequence")
    p.set_defaults(func=_cmd_complete)

    p = sub.add_parser("sweep", help="oracle verification sweep over all graphic sequences")
    p.add_argument("--max-vertices", type=int, default=6)
    p.add_argument("--max-realizations", type=int, default=500)
    p.add_argument("--clique-sizes", default="4,5,6")
    p.add_argument("--checks", default=None, help=f"comma list from {','.join(KNOWN_CHECKS)}")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "limit", 0) is None:
        try:
            args.limit = _default_limit()
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except NotGraphicError as exc:
        print(f"not graphic: {exc}", file=sys.stderr)
        return 1
    except LimitExceededError as exc:
        print(f"limit exceeded: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, json.JSONDecodeError, RgkitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
