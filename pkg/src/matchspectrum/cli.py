"""``matchspectrum`` command line: count, cutdist, transform, bench, verify."""

from __future__ import annotations

import argparse
import json
import sys

from .bench import records_to_csv, run_bench, run_verification
from .config import CapExceededError, GraphParseError, IntegrityError
from .cutdist import OpStats, cut_distribution, plan_split
from .gf2 import distribution_to_json
from .graph import parse_graph, serialize_graph, to_odd_graph
from .matching import count_perfect_matchings


def _read_graph(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return parse_graph(text)


def _u1(text: str | None):
    if not text:
        return None
    return [int(x) for x in text.split(",") if x.strip()]


def cmd_count(args) -> int:
    g = _read_graph(args.input)
    result = count_perfect_matchings(g, args.engine, strategy=args.strategy, U1=_u1(args.u1), checked=args.checked)
    if args.format == "csv":
        print("count,algorithm,transformed,target_weight")
        print(f"{result.count},{result.algorithm},{result.transformed},{'' if result.target_weight is None else result.target_weight}")
    else:
        print(result.to_json())
    return 0


def cmd_cutdist(args) -> int:
    g = _read_graph(args.input)
    engine = args.engine
    plan = None
    if engine == "auto":
        engine = "halfenum"
    if engine == "split":
        plan = plan_split(g, args.strategy, _u1(args.u1))
    W = cut_distribution(g, engine, plan, checked=args.checked, stats=OpStats())
    if args.format == "csv":
        print("weight,count")
        for k, w in enumerate(W):
            print(f"{k},{w}")
    else:
        print(distribution_to_json(W))
    return 0


def cmd_transform(args) -> int:
    g = _read_graph(args.input)
    res = to_odd_graph(g, force=args.force)
    out = serialize_graph(res.graph, "json" if args.format == "json" else "edge-list")
    sys.stdout.write(out if out.endswith("\n") else out + "\n")
    return 0


def cmd_bench(args) -> int:
    n_values = [int(x) for x in args.n.split(",")]
    engines = [e for e in args.engines.split(",") if e]
    records = run_bench(n_values, args.degree, args.instances, args.seed, engines, args.strategy)
    if args.format == "json":
        text = json.dumps([r.__dict__ for r in records], indent=1) + "\n"
    else:
        text = records_to_csv(records)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    ok = run_verification(args.seed, args.max_n, args.trials)
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="matchspectrum", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def graph_args(sp, engines, default):
        sp.add_argument("--input", required=True, help="edge-list or JSON graph file, '-' for stdin")
        sp.add_argument("--engine", choices=engines, default=default)
        sp.add_argument("--u1", help="explicit split plan: comma-separated left indices")
        sp.add_argument("--strategy", choices=["paper", "greedy"], default="paper")
        sp.add_argument("--checked", action="store_true", help="assert no mass is shifted out of range")
        sp.add_argument("--format", choices=["json", "csv"], default="json")

    sp = sub.add_parser("count", help="count perfect matchings")
    graph_args(sp, ["bruteforce", "halfenum", "split", "auto", "ryser", "enumerate"], "auto")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("cutdist", help="print the partition cut-weight distribution")
    graph_args(sp, ["bruteforce", "halfenum", "split", "auto"], "halfenum")
    sp.set_defaults(func=cmd_cutdist)

    sp = sub.add_parser("transform", help="print the odd-degree transformed graph")
    sp.add_argument("--input", required=True)
    sp.add_argument("--force", action="store_true", help="transform even if already odd")
    sp.add_argument("--format", choices=["edge-list", "json"], default="edge-list")
    sp.set_defaults(func=cmd_transform)

    sp = sub.add_parser("bench", help="CSV of engine work counters on seeded random graphs")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--n", default="16", help="comma-separated side sizes")
    sp.add_argument("--degree", type=float, default=3.0)
    sp.add_argument("--instances", type=int, default=10)
    sp.add_argument("--engines", default="halfenum,split")
    sp.add_argument("--engine", dest="engines", help="alias of --engines")
    sp.add_argument("--strategy", choices=["paper", "greedy"], default="paper")
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    sp.add_argument("--output", help="also write the report to this path")
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("verify", help="cross-check engines and oracles on seeded graphs")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-n", type=int, default=6)
    sp.add_argument("--trials", type=int, default=50)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphParseError, CapExceededError, IntegrityError, ValueError, OSError) as exc:
        print(f"matchspectrum: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
