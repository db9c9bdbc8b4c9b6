"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 unknown node id, 3 ``dsep`` found
a connecting path, 4 network too large for the oracle, 5 fast engine and
oracle disagree.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bayes_ball, bench, document, oracle
from .bayes_ball import Query
from .decision import DiagramError, InfluenceDiagram, decision_requisites, format_table, restart_requisites
from .dot import export_dot
from .generate import GenParams, random_network
from .graph import GraphError, Network, UnknownNodeError, sorted_ids

EXIT_OK, EXIT_INVALID, EXIT_UNKNOWN, EXIT_CONNECTED, EXIT_GUARD, EXIT_MISMATCH = range(6)


def _ids(text: str | None) -> list[str]:
    if not text:
        return []
    return [part.strip() for part in text.split(",") if part.strip()]


def _load(path: str):
    return document.load(path)


def _network(model) -> Network:
    return model.net.masked if isinstance(model, InfluenceDiagram) else model


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_query(args) -> int:
    net = _network(_load(args.file))
    q = Query(_ids(args.targets), _ids(args.given))
    trace = (lambda ev: print(ev, file=sys.stderr)) if args.trace else None
    marks = bayes_ball.run(net, q, trace=trace)
    result = bayes_ball.requisites(net, q, marks)
    payload = {
        "irrelevant": sorted_ids(result.irrelevant),
        "requisite_probability": sorted_ids(result.requisite_probability),
        "requisite_observations": sorted_ids(result.requisite_observations),
        "counters": {"visits_executed": marks.visits_executed, "arc_traversals": marks.arc_traversals},
    }
    if args.dot:
        Path(args.dot).write_text(export_dot(net, marks))
    code = EXIT_OK
    if args.oracle:
        expected = {
            "irrelevant": oracle.oracle_irrelevant(net, q.targets, q.observed),
            "visited": oracle.oracle_visited(net, q.targets, q.observed),
            "requisite_probability": oracle.oracle_requisite_probability(net, q.targets, q.observed),
        }
        actual = {"irrelevant": result.irrelevant, "visited": frozenset(marks.visited), "requisite_probability": result.requisite_probability}
        diff = {
            key: {"engine_only": sorted_ids(actual[key] - expected[key]), "oracle_only": sorted_ids(expected[key] - actual[key])}
            for key in expected
            if actual[key] != expected[key]
        }
        payload["oracle"] = "disagree" if diff else "agree"
        if diff:
            print(json.dumps({"oracle_diff": diff}, indent=2), file=sys.stderr)
            code = EXIT_MISMATCH
    print(json.dumps(payload, indent=2))
    return code


def cmd_dsep(args) -> int:
    net = _network(_load(args.file))
    separated = bayes_ball.is_irrelevant(net, _ids(args.j), _ids(args.l), _ids(args.given))
    print("d-separated" if separated else "connected")
    return EXIT_OK if separated else EXIT_CONNECTED


def _stage_rows(result) -> list[dict]:
    return [
        {
            "i": s.index,
            "decision": s.decision,
            "requisite_observations": sorted_ids(s.requisite_observations),
            "requisite_probability": sorted_ids(s.requisite_probability),
            "irrelevant": s.irrelevant,
        }
        for s in result.stages
    ]


def cmd_decision(args) -> int:
    model = _load(args.file)
    if not isinstance(model, InfluenceDiagram):
        print("error: document has no decision_order; not an influence diagram", file=sys.stderr)
        return EXIT_INVALID
    if not model.decision_order:
        # nothing to sweep: a single query of the requested targets given the evidence
        net = model.net.masked
        targets = _ids(args.targets) or list(model.values)
        q = Query(targets, model.evidence)
        marks = bayes_ball.run(net, q)
        res = bayes_ball.requisites(net, q, marks)
        rows = [{"i": 0, "decision": None, "requisite_observations": sorted_ids(res.requisite_observations),
                 "requisite_probability": sorted_ids(res.requisite_probability), "irrelevant": False}]
        if args.json:
            print(json.dumps({"stages": rows, "value_aggregation": model.value_aggregation}, indent=2))
        else:
            print("i  N_e^i  N_p^i")
            print(f"0  {', '.join(rows[0]['requisite_observations']) or '-'}  {', '.join(rows[0]['requisite_probability']) or '-'}")
        return EXIT_OK
    result = decision_requisites(model)
    code = EXIT_OK
    if args.oracle:
        reference = restart_requisites(model)
        if reference.table() != result.table():
            print("error: resumed sweep and restarted stages disagree", file=sys.stderr)
            print(format_table(reference, sort=sorted_ids), file=sys.stderr)
            code = EXIT_MISMATCH
    if args.json:
        print(json.dumps({
            "stages": _stage_rows(result),
            "irrelevant_decisions": list(result.irrelevant_decisions),
            "value_aggregation": result.value_aggregation,
        }, indent=2))
    else:
        print(format_table(result, sort=sorted_ids))
    return code


def cmd_gen(args) -> int:
    params = GenParams(args.nodes, args.arc_prob, args.det_frac, args.obs_frac, args.seed)
    _write(document.serialize(random_network(params)), args.output)
    return EXIT_OK


def cmd_dot(args) -> int:
    net = _network(_load(args.file))
    marks = None
    if args.targets is not None:
        marks = bayes_ball.run(net, Query(_ids(args.targets), _ids(args.given)))
    _write(export_dot(net, marks, observed=_ids(args.given) if marks is None else None), args.output)
    return EXIT_OK


def cmd_bench(args) -> int:
    sizes = args.chain or [1000, 10000, 100000]
    rows = []
    for n in sizes:
        blocked, open_ = bench.chain_pair(n)
        rows.append({"n": n, "blocked": blocked.as_dict(), "unblocked": open_.as_dict()})
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        print(f"{'n':>8} {'arcs':>8} {'blocked visits':>15} {'prefix arcs':>12} {'ratio':>6} {'open visits':>12}")
        for r in rows:
            b, o = r["blocked"], r["unblocked"]
            print(f"{r['n']:>8} {b['arcs']:>8} {b['visits_executed']:>15} {b['visited_arcs']:>12} "
                  f"{b['visits_executed'] / max(1, b['visited_arcs']):>6.3f} {o['visits_executed']:>12}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bayesball", description="Irrelevance and requisite information in belief networks and influence diagrams.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("query", help="irrelevant and requisite sets for targets given observations")
    p.add_argument("file")
    p.add_argument("--targets", required=True)
    p.add_argument("--given", default="")
    p.add_argument("--oracle", action="store_true", help="cross-check against brute-force trail enumeration")
    p.add_argument("--trace", action="store_true", help="print one line per visit on stderr")
    p.add_argument("--dot", metavar="OUT", help="write the marked network as DOT")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("dsep", help="test whether --l is irrelevant to --j given --given")
    p.add_argument("file")
    p.add_argument("--j", required=True)
    p.add_argument("--l", required=True)
    p.add_argument("--given", default="")
    p.set_defaults(func=cmd_dsep)

    p = sub.add_parser("decision", help="per-decision requisite sets of an influence diagram")
    p.add_argument("file")
    p.add_argument("--oracle", action="store_true", help="compare with stage-by-stage restarts")
    p.add_argument("--targets", help="targets when the diagram has no decisions (default: value nodes)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decision)

    p = sub.add_parser("gen", help="write a random network document")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--arc-prob", type=float, default=0.25)
    p.add_argument("--det-frac", type=float, default=0.0)
    p.add_argument("--obs-frac", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("dot", help="render a network as Graphviz DOT")
    p.add_argument("file")
    p.add_argument("--targets", help="run a query and draw its marks")
    p.add_argument("--given", default="")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("bench", help="visit counts on chains with and without a midpoint observation")
    p.add_argument("--chain", type=int, action="append", metavar="N")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UnknownNodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except oracle.OracleSizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (document.DocumentError, document.NetworkValidationError, DiagramError, GraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
