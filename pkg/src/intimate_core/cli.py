"""Command-line front end: ``index``, ``query``, ``gen``, ``bench``, ``oracle``.

Exit codes: 0 success (feasible), 1 infeasible query, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import __version__
from .bench import PROTOCOLS, protocol_workload, run_workload, write_bench_csv
from .core import core_decompose, load_or_build_index, save_index
from .errors import BudgetExceeded, FormatError, ParseError, UnknownNode, WeightError
from .generate import MODELS, generate_graph
from .graph import format_edge_list, load_graph
from .oracle import oracle_min_group
from .refine import RefineConfig
from .search import STRATEGIES, QuerySpec, search

EXIT_OK, EXIT_INFEASIBLE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _positive_int(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _id_list(text):
    try:
        ids = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not ids:
        raise argparse.ArgumentTypeError("query set is empty")
    return ids


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="intimate-core", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("index", help="build the coreness index of an edge list")
    s.add_argument("graph")
    s.add_argument("index")

    s = sub.add_parser("query", help="answer one intimate-core group query")
    s.add_argument("graph")
    s.add_argument("index")
    s.add_argument("--q", type=_id_list, required=True, help="comma-separated query node ids")
    s.add_argument("--k", type=_positive_int, required=True)
    s.add_argument("--strategy", choices=STRATEGIES, default="tree-path")
    s.add_argument("--epsilon", type=float, default=0.1)
    s.add_argument("--scorer", choices=("sum", "max"), default="sum")
    s.add_argument("--max-depth", type=int, default=None)

    s = sub.add_parser("gen", help="write a seeded synthetic edge list")
    s.add_argument("--nodes", type=_positive_int, required=True)
    s.add_argument("--model", choices=MODELS, default="powerlaw")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--weights", default="uniform01", help="uniform01 or integer:lo:hi")
    s.add_argument("--p", type=float, default=0.05, help="edge probability (gnp)")
    s.add_argument("--avg-degree", type=float, default=10.0, help="mean expected degree (powerlaw)")
    s.add_argument("--exponent", type=float, default=2.5, help="degree exponent (powerlaw)")
    s.add_argument("--out", default=None, help="output path (default: stdout)")

    s = sub.add_parser("bench", help="run a benchmark protocol and write CSV")
    s.add_argument("graph")
    s.add_argument("index")
    s.add_argument("--protocol", choices=PROTOCOLS, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", required=True)
    s.add_argument("--timings", default=None, help="timing CSV path (default: <out>.timings.csv)")
    s.add_argument("--queries", type=_positive_int, default=100, help="queries per parameter setting")
    s.add_argument("--strategies", default=",".join(STRATEGIES))
    s.add_argument("--epsilon", type=float, default=0.1)
    s.add_argument("--k", type=_positive_int, default=None, help="override the protocol's fixed k")
    s.add_argument("--q-size", type=_positive_int, default=None, help="override the fixed |Q|")

    s = sub.add_parser("oracle", help="exact answer by brute force (<= 16 nodes)")
    s.add_argument("graph")
    s.add_argument("--q", type=_id_list, required=True)
    s.add_argument("--k", type=_positive_int, required=True)
    s.add_argument("--budget", type=int, default=16)
    return p


def _query_ids(g, labels):
    if len(set(labels)) != len(labels):
        raise UsageError("query contains duplicate node ids")
    return [g.node_of(lab) for lab in labels]


def result_to_json(g, res) -> dict:
    lab = g.labels
    if not res.feasible:
        return {"feasible": False, "reason": res.reason, "members": [], "edges": [],
                "weight": None, "stats": res.stats.as_dict()}
    h = res.subgraph
    return {
        "feasible": True,
        "members": [lab[v] for v in sorted(h.members)],
        "edges": [[lab[u], lab[v], w] for u, v, w in h.edges()],
        "weight": res.weight,
        "stats": res.stats.as_dict(),
    }


def cmd_index(args):
    g = load_graph(args.graph)
    save_index(core_decompose(g), args.index)
    return EXIT_OK


def cmd_query(args):
    g = load_graph(args.graph)
    idx = load_or_build_index(g, args.index)
    try:
        cfg = RefineConfig(epsilon=args.epsilon, scorer=args.scorer)
        spec = QuerySpec(tuple(_query_ids(g, args.q)), args.k, args.strategy, cfg, args.max_depth)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    res = search(g, idx, spec)
    json.dump(result_to_json(g, res), sys.stdout)
    sys.stdout.write("\n")
    return EXIT_OK if res.feasible else EXIT_INFEASIBLE


def cmd_gen(args):
    try:
        g = generate_graph(args.model, args.nodes, args.seed, args.weights,
                           p=args.p, avg_degree=args.avg_degree, exponent=args.exponent)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = format_edge_list(g)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_bench(args):
    strategies = [s for s in args.strategies.split(",") if s]
    bad = [s for s in strategies if s not in STRATEGIES]
    if bad or not strategies:
        raise UsageError(f"unknown strategies {bad}; choose from {STRATEGIES}")
    try:
        cfg = RefineConfig(epsilon=args.epsilon)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    g = load_graph(args.graph)
    idx = load_or_build_index(g, args.index)
    workload = protocol_workload(idx, args.protocol, args.seed, args.queries, k=args.k, q_size=args.q_size)
    records = run_workload(g, idx, workload, strategies, cfg)
    meta = {
        "protocol": args.protocol,
        "seed": args.seed,
        "queries": args.queries,
        "epsilon": args.epsilon,
        "graph": g.content_hash,
    }
    write_bench_csv(records, args.out, meta, args.timings or f"{args.out}.timings.csv")
    return EXIT_OK


def cmd_oracle(args):
    g = load_graph(args.graph)
    Q = _query_ids(g, args.q)
    try:
        found = oracle_min_group(g, Q, args.k, args.budget)
    except BudgetExceeded as exc:
        raise UsageError(str(exc)) from None
    if found is None:
        out = {"feasible": False, "members": [], "weight": None}
    else:
        w, members = found
        out = {"feasible": True, "members": [g.label_of(v) for v in sorted(members)], "weight": w}
    json.dump(out, sys.stdout)
    sys.stdout.write("\n")
    return EXIT_OK if found is not None else EXIT_INFEASIBLE


COMMANDS = {
    "index": cmd_index,
    "query": cmd_query,
    "gen": cmd_gen,
    "bench": cmd_bench,
    "oracle": cmd_oracle,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except (OSError, ParseError, WeightError, FormatError, UnknownNode, UsageError) as exc:
        print(f"intimate-core {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
