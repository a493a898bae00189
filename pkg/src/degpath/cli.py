"""Command-line interface.

Exit codes: 0 success, 1 property false (a witness was found), 2 usage or
input error, 3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from .errors import DegpathError
from .extremal import SearchConfig, enumerate_exact, search_lower_bound
from .graph import Graph, complete_bipartite, complete_graph, half_graph
from .graph6 import graph6_decode, graph6_encode
from .predicate import find_equal_degree_path
from .structure import LambdaParams, audit_dudv, decompose, lambda_closed, lambda_oracle

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


def _threads(value: Optional[int]) -> int:
    if value is not None:
        return max(1, value)
    env = os.environ.get("DEGPATH_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise DegpathError(f"DEGPATH_THREADS must be an integer, got {env!r}")
    return os.cpu_count() or 1


def _graphs(args: argparse.Namespace) -> list[tuple[str, Graph]]:
    if args.g6 is not None:
        lines = [args.g6]
    else:
        try:
            text = Path(args.file).read_text(encoding="utf-8")
        except OSError as exc:
            raise DegpathError(f"cannot read {args.file}: {exc}")
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    return [(line, graph6_decode(line)) for line in lines]


def _cmd_check(args: argparse.Namespace) -> int:
    graphs = _graphs(args)
    status = EXIT_OK
    for text, g in graphs:
        w = find_equal_degree_path(g, args.l)
        if w is not None:
            assert w.is_valid_in(g) and w.length == args.l, w
            status = EXIT_FALSE
        if args.g6 is not None:
            print("AVOIDS" if w is None else f"CONTAINS\n{w}")
        else:
            print(f"{text}\tAVOIDS" if w is None else f"{text}\tCONTAINS\t{w}")
    return status


def _cmd_extremal(args: argparse.Namespace) -> int:
    if args.exact:
        report = enumerate_exact(args.n, args.l, workers=args.threads)
    else:
        cfg = SearchConfig(
            seed=args.seed,
            restarts=args.restarts,
            moves_per_restart=args.moves,
            patience=args.patience,
        )
        report = search_lower_bound(args.n, args.l, cfg, workers=args.threads)
    for g6 in report.extremal_graphs:
        g = graph6_decode(g6)
        assert g.num_edges == report.p and find_equal_degree_path(g, args.l) is None, g6
    sys.stdout.write(report.tsv())
    if args.out:
        Path(args.out).write_text(report.sidecar(), encoding="utf-8")
    seed = "" if report.seed is None else f" seed={report.seed}"
    print(f"examined={report.graphs_examined} seconds={report.seconds:.3f}{seed}", file=sys.stderr)
    return EXIT_OK


def _cmd_lambda(args: argparse.Namespace) -> int:
    p = LambdaParams(args.nu, args.delta, args.beta, args.b)
    value = lambda_closed(p)
    print(f"lambda\t{value}")
    if args.oracle:
        brute = lambda_oracle(p)
        print(f"oracle\t{brute}")
        print(f"agree\t{str(brute == value).lower()}")
        if brute != value:
            return EXIT_INTERNAL
    return EXIT_OK


def _cmd_decompose(args: argparse.Namespace) -> int:
    g = graph6_decode(args.g6)
    d = decompose(g, args.u, args.v)
    print(f"adjacent\t{d.adjacent}")
    print(f"only_u\t{len(d.only_u)}")
    print(f"only_v\t{len(d.only_v)}")
    print(f"common\t{len(d.common)}")
    print(f"neither\t{len(d.neither)}")
    verdict = "OK" if d.identity_holds() else "FAIL"
    print(
        f"identity\t{len(d.common)} = {d.degree_u} + {d.degree_v} + {len(d.neither)}"
        f" - {d.n} + {2 * (1 - d.adjacent)}\t{verdict}"
    )
    return EXIT_OK if verdict == "OK" else EXIT_INTERNAL


def _cmd_audit(args: argparse.Namespace) -> int:
    status = EXIT_OK
    for text, g in _graphs(args):
        report = audit_dudv(g)
        if report.violations:
            status = EXIT_INTERNAL
        applicable = str(report.applicable).lower()
        if args.g6 is not None:
            print(f"applicable\t{applicable}")
            print(f"violations\t{len(report.violations)}")
        else:
            print(f"{text}\t{applicable}\t{len(report.violations)}")
        for u, v, w in report.violations:
            print(f"violation {u} {v} {w}", file=sys.stderr)
    return status


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.knm:
        g = complete_bipartite(*args.knm)
    elif args.half is not None:
        g = half_graph(args.half)
    else:
        g = complete_graph(args.kn)
    print(graph6_encode(g).decode("ascii"))
    return EXIT_OK


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--g6", help="graph in graph6 format")
    src.add_argument("--file", help="file with one graph6 string per line")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="degpath", description=__doc__.splitlines()[0])
    parser.add_argument("--threads", type=int, default=None, help="worker cap (default: $DEGPATH_THREADS or all cores)")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="look for an equal-degree path of length L")
    p.add_argument("--l", type=int, required=True)
    _add_graph_source(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("extremal", help="compute p_L(N) exactly or a heuristic lower bound")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exact", action="store_true")
    mode.add_argument("--search", action="store_true")
    defaults = SearchConfig()
    p.add_argument("--seed", type=int, default=defaults.seed)
    p.add_argument("--restarts", type=int, default=defaults.restarts)
    p.add_argument("--moves", type=int, default=defaults.moves_per_restart)
    p.add_argument("--patience", type=int, default=defaults.patience)
    p.add_argument("--out", help="write extremal graphs (graph6, one per line) here")
    p.set_defaults(func=_cmd_extremal)

    p = sub.add_parser("lambda", help="evaluate the lambda degree-sum bound")
    for name in ("nu", "delta", "beta", "b"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="also run the exhaustive oracle")
    p.set_defaults(func=_cmd_lambda)

    p = sub.add_parser("decompose", help="neighbourhood split of a vertex pair")
    p.add_argument("--g6", required=True)
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("audit-dudv", help="common-neighbour degree audit (l = 5)")
    _add_graph_source(p)
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("gen", help="emit a construction in graph6")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--knm", type=int, nargs=2, metavar=("A", "B"))
    which.add_argument("--half", type=int, metavar="N")
    which.add_argument("--kn", type=int, metavar="N")
    p.set_defaults(func=_cmd_gen)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        args.threads = _threads(args.threads)
        return args.func(args)
    except DegpathError as exc:
        print(f"degpath: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"degpath: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def run() -> None:
    sys.exit(main())
