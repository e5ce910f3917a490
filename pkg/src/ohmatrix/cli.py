"""Command line interface: matrices, duals, walks, and the verification suite.

Exit codes: 0 on success (or all checks passing), 1 when validation or
verification finds a failure, 2 for usage and input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .core import incidence_dual, switch, validate
from .matrices import (
    adjacency_matrix,
    degree_matrix,
    dual_laplacian,
    incidence_matrix,
    laplacian,
)
from .signed import from_hypergraph, line_graph, to_hypergraph
from .walks import (
    EnumerationLimitError,
    EnumerationLimits,
    enumerate_walks,
    walk_counts,
    walk_matrix,
    walk_sign,
    weak_walk_matrix,
)
from .io import (
    InstanceFormatError,
    parse_instance,
    parse_switching,
    random_bidirected_instance,
    random_instance,
    serialize_instance,
    serialize_matrix,
)
from .verify import VerifyOptions, format_report, run_verify_suite

_MATRIX_BUILDERS = {
    "incidence": incidence_matrix,
    "adjacency": adjacency_matrix,
    "degree": degree_matrix,
    "laplacian": laplacian,
    "dual-laplacian": dual_laplacian,
}


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _load_instance(path: str, *, require_valid: bool = True):
    return parse_instance(_read_text(path), require_valid=require_valid)


def cmd_validate(args) -> int:
    g = _load_instance(args.instance, require_valid=False)
    problems = validate(g)
    if problems:
        for p in problems:
            print(p)
        return 1
    print("OK")
    return 0


def cmd_matrix(args) -> int:
    g = _load_instance(args.instance)
    m = _MATRIX_BUILDERS[args.kind](g)
    print(serialize_matrix(m, args.format), end="")
    return 0


def cmd_dual(args) -> int:
    g = _load_instance(args.instance)
    print(serialize_instance(incidence_dual(g)), end="")
    return 0


def cmd_switch(args) -> int:
    g = _load_instance(args.instance)
    theta = parse_switching(_read_text(args.theta))
    print(serialize_instance(switch(g, theta)), end="")
    return 0


def cmd_walks(args) -> int:
    g = _load_instance(args.instance)
    limits = EnumerationLimits(max_incidences=args.max_incidences, max_walks=args.max_walks)
    walks = enumerate_walks(g, args.src, args.dst, args.n, weak=args.weak, limits=limits)
    counts = walk_counts(g, args.src, args.dst, args.n, weak=args.weak, limits=limits)
    doc = {
        "from": args.src,
        "to": args.dst,
        "half_length_numerator": args.n,
        "weak": args.weak,
        "counts": {
            "total": counts.total,
            "positive": counts.positive,
            "negative": counts.negative,
            "signed_net": counts.signed_net,
        },
        "walks": [
            {
                "anchors": list(w.anchors),
                "incidences": [
                    {"v": i.vertex, "e": i.edge, "k": i.mult_index, "sign": i.sign}
                    for i in w.incidences
                ],
                "sign": walk_sign(g, w),
            }
            for w in walks
        ],
    }
    print(json.dumps(doc, indent=2))
    return 0


def cmd_walk_matrix(args) -> int:
    g = _load_instance(args.instance)
    limits = EnumerationLimits(max_incidences=args.max_incidences, max_walks=args.max_walks)
    build = weak_walk_matrix if args.weak else walk_matrix
    m = build(g, args.rows, args.cols, args.n, limits=limits)
    print(serialize_matrix(m, args.format), end="")
    return 0


def cmd_linegraph(args) -> int:
    g = _load_instance(args.instance)
    lam = line_graph(from_hypergraph(g))
    print(serialize_instance(to_hypergraph(lam)), end="")
    return 0


def cmd_random(args) -> int:
    if args.bidirected:
        g = random_bidirected_instance(args.seed, args.vertices, args.edges)
    else:
        g = random_instance(
            args.seed,
            args.vertices,
            args.edges,
            args.max_edge_size,
            simple=not args.non_simple,
            non_simple_rate=args.non_simple_rate,
            min_edge_size=args.min_edge_size,
        )
    print(serialize_instance(g), end="")
    return 0


def cmd_verify(args) -> int:
    options = VerifyOptions(
        trials=args.trials,
        max_vertices=args.max_vertices,
        max_edges=args.max_edges,
        max_edge_size=args.max_edge_size,
        max_walk_incidences=args.max_walk_incidences,
        switching_trials=args.switching_trials,
        limits=EnumerationLimits(
            max_incidences=max(args.max_walk_incidences, 12), max_walks=args.max_walks
        ),
        self_test=args.self_test,
    )
    instance = _load_instance(args.instance) if args.instance else None
    report = run_verify_suite(instance, seed=args.seed, options=options)
    print(format_report(report), end="")
    return 0 if report.passed() else 1


def _add_instance_argument(parser) -> None:
    parser.add_argument("instance", help="instance file path, or - for stdin")


def _add_limit_arguments(parser) -> None:
    parser.add_argument("--max-incidences", type=int, default=12,
                        help="ceiling on the incidence count (default 12)")
    parser.add_argument("--max-walks", type=int, default=1_000_000,
                        help="ceiling on generated walks per search (default 1000000)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ohmatrix",
        description="Exact matrices, walks, and duality for oriented hypergraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the structural invariants of an instance")
    _add_instance_argument(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("matrix", help="print a matrix of the instance")
    p.add_argument("kind", choices=sorted(_MATRIX_BUILDERS))
    _add_instance_argument(p)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("dual", help="print the incidence dual instance")
    _add_instance_argument(p)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("switch", help="apply a vertex switching function")
    _add_instance_argument(p)
    p.add_argument("--theta", required=True, help="JSON file mapping vertices to +1/-1")
    p.set_defaults(func=cmd_switch)

    p = sub.add_parser("walks", help="enumerate walks between two anchors")
    _add_instance_argument(p)
    p.add_argument("--from", dest="src", required=True, help="start anchor label")
    p.add_argument("--to", dest="dst", required=True, help="end anchor label")
    p.add_argument("--n", type=int, required=True, help="incidence count (twice the length)")
    p.add_argument("--weak", action="store_true", help="allow immediate returns")
    _add_limit_arguments(p)
    p.set_defaults(func=cmd_walks)

    p = sub.add_parser("walk-matrix", help="signed net walk counts between anchor families")
    _add_instance_argument(p)
    p.add_argument("--rows", choices=("V", "E"), required=True)
    p.add_argument("--cols", choices=("V", "E"), required=True)
    p.add_argument("--n", type=int, required=True, help="incidence count (twice the length)")
    p.add_argument("--weak", action="store_true", help="count weak walks")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_limit_arguments(p)
    p.set_defaults(func=cmd_walk_matrix)

    p = sub.add_parser("linegraph", help="line graph of a two-incidence instance")
    _add_instance_argument(p)
    p.set_defaults(func=cmd_linegraph)

    p = sub.add_parser("random", help="generate a random instance")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--max-edge-size", type=int, default=3)
    p.add_argument("--min-edge-size", type=int, default=1)
    p.add_argument("--non-simple", action="store_true",
                   help="allow repeated incidences of one (vertex, edge) pair")
    p.add_argument("--non-simple-rate", type=float, default=0.3,
                   help="per-slot duplication probability with --non-simple")
    p.add_argument("--bidirected", action="store_true",
                   help="two distinct endpoints per edge, no repeated pairs")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("verify", help="run the identity verification suite")
    p.add_argument("instance", nargs="?", default=None,
                   help="optional instance file; otherwise a seeded random family")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-vertices", type=int, default=8)
    p.add_argument("--max-edges", type=int, default=8)
    p.add_argument("--max-edge-size", type=int, default=4)
    p.add_argument("--max-walk-incidences", type=int, default=8)
    p.add_argument("--switching-trials", type=int, default=20)
    p.add_argument("--max-walks", type=int, default=1_000_000,
                   help="ceiling on generated walks per search (default 1000000)")
    p.add_argument("--self-test", action="store_true",
                   help="also check that the harness detects a corrupted matrix")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InstanceFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EnumerationLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
