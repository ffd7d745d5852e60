"""
Command-line front end.

    python main.py build -g graph.txt -o oracle.pkl
    python main.py query -g graph.txt -f 2,5 -s 3 -t 4
    python main.py count --oracle oracle.pkl -f 2,4,6 --json
    python main.py verify --corpus default --threads 4
    python main.py bench --sizes 1000 2000 4000 --threads 3
"""
import argparse
import logging
import sys
from typing import List, Optional, Tuple

from connectivity_oracle import MAX_FAILURES
from utils.errors import OracleError
from utils.log import level_from_verbosity, setup_logging

from .commands import COMMANDS, FAULT_NAMES, query_pairs

logger = logging.getLogger(__name__)


def failure_list(text: str) -> Tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated vertex list: {text!r}")
    if len(values) > MAX_FAILURES:
        raise argparse.ArgumentTypeError(f"at most {MAX_FAILURES} failures")
    if not values:
        raise argparse.ArgumentTypeError("at least 1 failure")
    return values


def vertex_pair(text: str) -> Tuple[int, int]:
    try:
        s, t = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected s,t, got {text!r}")
    return s, t


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ftconn", description="Connectivity oracle for up to three vertex failures")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0)
    common.add_argument("--quiet", action="store_true")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("-g", "--graph", help="graph file ('n m' header, then 'u v' lines)")
    source.add_argument("--oracle", help="oracle pickled by 'build -o'")
    source.add_argument("--debug-checks", action="store_true")

    failures = argparse.ArgumentParser(add_help=False)
    failures.add_argument("-f", "--failures", type=failure_list, required=True, help="comma-separated vertices")

    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", parents=[common, source], help="preprocess a graph")
    build.add_argument("-o", "--output", help="pickle the oracle here")

    query = sub.add_parser("query", parents=[common, source, failures], help="are s and t connected?")
    query.add_argument("-s", "--source", type=int)
    query.add_argument("-t", "--target", type=int)
    query.add_argument("-q", "--pair", dest="pairs", type=vertex_pair, action="append", help="s,t (repeatable)")

    sub.add_parser("count", parents=[common, source, failures], help="number of components")
    sub.add_parser("cut", parents=[common, source, failures], help="does removing F disconnect the graph?")

    verify = sub.add_parser("verify", parents=[common], help="differential check against BFS")
    verify.add_argument("--corpus", default="default", choices=["smoke", "default", "large", "coverage"])
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--threads", type=int, default=1)
    verify.add_argument("--exhaustive-limit", type=int, default=16)
    verify.add_argument("--samples", type=int, default=500)
    verify.add_argument("--no-shrink", action="store_true")
    verify.add_argument("--cross-check", action="store_true")
    verify.add_argument("--mutations", nargs="+", choices=FAULT_NAMES + ["all"])
    verify.add_argument("-o", "--output", help="write the JSON report here")

    bench = sub.add_parser("bench", parents=[common], help="scaling benchmark")
    bench.add_argument("--sizes", type=int, nargs="+", default=[1_000, 2_000, 4_000])
    bench.add_argument("--edge-factor", type=int, default=3)
    bench.add_argument("--queries", type=int, default=2_000)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--threads", type=int, default=1)
    bench.add_argument("-o", "--output", help="write the JSON report here")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(level_from_verbosity(args.verbose, args.quiet))

    if args.command in ("build", "query", "count", "cut"):
        if not args.graph and not args.oracle:
            parser.error("one of -g/--graph or --oracle is required")
        if args.command == "build" and not args.graph:
            parser.error("build needs -g/--graph")
    if args.command == "query":
        if (args.source is None) != (args.target is None):
            parser.error("-s and -t go together")
        if not query_pairs(args):
            parser.error("give -s/-t or at least one -q s,t")

    try:
        return COMMANDS[args.command](args)
    except (OracleError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
