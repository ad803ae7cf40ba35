"""Command-line interface.

Exit codes: 0 ok, 1 usage error, 2 input error, 3 budget/timeout.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bench import STATUS_OK, STATUS_TIMEOUT, bench, records_to_csv
from .errors import BudgetExceededError, EdgeListParseError, UndefinedScoreError
from .cores import core_decomposition, peak_decomposition
from .graph import Graph, load_edge_list_path
from .metrics import (community_accuracy, global_metrics, load_ground_truth,
                      local_metrics)
from .registry import parse_params
from .toolkit import RunConfig, report_to_json, result_from_report, run_model
from .trusses import tripeak_decomposition, truss_decomposition

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); keep our code scheme
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cohesion",
                     description="Cohesive subgraph discovery toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[], help="run one model")
    p.add_argument("--model", required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--param", "-p", action="append", default=[],
                   metavar="NAME=VALUE")
    p.add_argument("--output")
    p.add_argument("--metrics", default="",
                   help="comma-separated levels: local,global")
    p.add_argument("--truth")
    p.add_argument("--budget", type=float, help="time budget in seconds")
    p.add_argument("--enum-budget", type=int, default=10_000_000)

    p = sub.add_parser("decompose", help="full decomposition labels")
    p.add_argument("--kind", required=True,
                   choices=["core", "truss", "peak", "tripeak"])
    p.add_argument("--input", required=True)
    p.add_argument("--output")

    p = sub.add_parser("metrics", help="score a stored result")
    p.add_argument("--level", required=True, choices=["local", "global"])
    p.add_argument("--result", required=True)
    p.add_argument("--input", required=True)

    p = sub.add_parser("community-eval", help="accuracy against ground truth")
    p.add_argument("--result", required=True)
    p.add_argument("--truth", required=True)

    p = sub.add_parser("bench", help="timing sweeps over datasets")
    p.add_argument("--inputs", nargs="+", required=True)
    p.add_argument("--models", nargs="+", required=True)
    p.add_argument("--sweep", action="store_true")
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--budget", type=float)
    p.add_argument("--out", required=True)
    return parser


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _cmd_compute(args) -> int:
    params = parse_params(args.model, args.param)
    levels = tuple(s for s in args.metrics.split(",") if s)
    for level in levels:
        if level not in ("local", "global"):
            raise UsageError(f"unknown metric level {level!r}")
    config = RunConfig(model=args.model, params=params,
                       input_path=args.input, output_path=args.output,
                       metric_levels=levels, truth_path=args.truth,
                       time_budget=args.budget,
                       enumeration_budget=args.enum_budget)
    report = run_model(config)
    if not args.output:
        sys.stdout.write(report_to_json(report))
    if report["status"] != STATUS_OK:
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_decompose(args) -> int:
    g = load_edge_list_path(args.input)
    if args.kind in ("core", "peak"):
        fn = core_decomposition if args.kind == "core" else peak_decomposition
        labels = {g.label(v): c for v, c in fn(g).items()}
        doc = {"kind": args.kind, "node_values": labels}
    else:
        fn = truss_decomposition if args.kind == "truss" else tripeak_decomposition
        doc = {"kind": args.kind,
               "edge_values": [[g.label(u), g.label(v), t]
                               for (u, v), t in sorted(fn(g).items())]}
    _emit(json.dumps(doc, sort_keys=True, indent=2) + "\n", args.output)
    return EXIT_OK


def _cmd_metrics(args) -> int:
    g = load_edge_list_path(args.input)
    with open(args.result, encoding="utf-8") as f:
        stored = json.load(f)
    result, labels = result_from_report(stored)
    if list(labels) != list(g.labels):
        raise ValueError("result file does not match the input graph")
    rep = global_metrics(g, result) if args.level == "global" else \
        local_metrics(g, result)
    doc = {"level": rep.level, "values": rep.values,
           "model": result.model, "params": result.params}
    sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    return EXIT_OK


def _cmd_community_eval(args) -> int:
    with open(args.result, encoding="utf-8") as f:
        stored = json.load(f)
    result, labels = result_from_report(stored)
    # label universe only; accuracy needs node identities, not edges
    universe = Graph(list(labels), [[] for _ in labels])
    with open(args.truth, "rb") as f:
        truth = load_ground_truth(f, universe)
    scores = community_accuracy(universe, result, truth)
    doc = {"nmi": scores.nmi, "ari": scores.ari, "f1": scores.f1,
           "model": result.model, "params": result.params}
    sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    return EXIT_OK


def _cmd_bench(args) -> int:
    records = bench(args.inputs, args.models, sweep=args.sweep,
                    repeat=args.repeat, budget=args.budget)
    _emit(records_to_csv(records), args.out)
    if any(r.status == STATUS_TIMEOUT for r in records):
        return EXIT_BUDGET
    return EXIT_OK


_COMMANDS = {
    "compute": _cmd_compute,
    "decompose": _cmd_decompose,
    "metrics": _cmd_metrics,
    "community-eval": _cmd_community_eval,
    "bench": _cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except UndefinedScoreError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (EdgeListParseError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
