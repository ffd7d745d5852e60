"""Subcommand handlers; each returns the process exit status."""
import json
import logging
import os
from typing import List, Tuple

from connectivity_oracle import ConnectivityOracle
from graph_core import read_graph_file
from utils.config import BenchConfig, OracleConfig, VerifyConfig
from utils.file_handler import json_converter, load_oracle, save_oracle, save_report
from verify import build_corpus, mutation_sweep, run_bench, run_differential
from verify.faults import FAULTS

logger = logging.getLogger(__name__)


def _emit(args, payload: dict, text: str) -> None:
    print(json.dumps(payload, default=json_converter) if args.json else text)


def _save(report: dict, path: str) -> None:
    folder, name = os.path.split(path)
    save_report(report, filename=name, folder=folder or ".")


def _oracle_config(args) -> OracleConfig:
    return OracleConfig(debug_checks=getattr(args, "debug_checks", False),
                        cross_check=getattr(args, "cross_check", False))


def load_or_build(args) -> ConnectivityOracle:
    """The oracle named by ``--oracle``, or a fresh one built from ``-g``."""
    if args.oracle:
        return load_oracle(args.oracle)
    return ConnectivityOracle.preprocess(read_graph_file(args.graph), config=_oracle_config(args))


def cmd_build(args) -> int:
    oracle = ConnectivityOracle.preprocess(read_graph_file(args.graph), config=_oracle_config(args))
    if args.output:
        save_oracle(oracle, args.output)
    payload = {
        "n": oracle.graph.n,
        "m": oracle.graph.m,
        "split_vertices": oracle.tree.n,
        "table_words": oracle.table_words(),
        "timings": {k: round(v, 4) for k, v in oracle.timings.items()},
    }
    _emit(args, payload, f"built oracle: n={payload['n']} m={payload['m']} "
                         f"split={payload['split_vertices']} words={payload['table_words']}")
    return 0


def query_pairs(args) -> List[Tuple[int, int]]:
    pairs = list(args.pairs or [])
    if args.source is not None and args.target is not None:
        pairs.insert(0, (args.source, args.target))
    return pairs


def cmd_query(args) -> int:
    oracle = load_or_build(args)
    pairs = query_pairs(args)
    answers = oracle.connected_many(args.failures, pairs)
    for (s, t), ok in zip(pairs, answers):
        _emit(args, {"connected": ok}, "connected" if ok else "disconnected")
        logger.debug("F=%s %d-%d: %s", args.failures, s, t, ok)
    return 0


def cmd_count(args) -> int:
    count = load_or_build(args).count_components(args.failures)
    _emit(args, {"components": count}, str(count))
    return 0


def cmd_cut(args) -> int:
    cut = load_or_build(args).is_cut(args.failures)
    _emit(args, {"cut": cut}, "cut" if cut else "not a cut")
    return 0


def cmd_verify(args) -> int:
    config = VerifyConfig(seed=args.seed, threads=args.threads, exhaustive_limit=args.exhaustive_limit,
                          samples_per_graph=args.samples, shrink=not args.no_shrink)
    corpus = build_corpus(args.corpus, args.seed)
    if args.mutations:
        names = None if args.mutations == ["all"] else args.mutations
        caught = mutation_sweep(corpus, config, names)
        missed = [name for name, ok in caught.items() if not ok]
        _emit(args, {"mutations": caught}, "\n".join(
            f"{name:<26} {'caught' if ok else 'MISSED'}" for name, ok in caught.items()))
        return 1 if missed else 0

    report = run_differential(corpus, config, OracleConfig(cross_check=args.cross_check))
    if args.output:
        _save(report, args.output)
    text = (f"corpus {report['corpus']}: {report['graphs']} graphs, {report['checks']} checks, "
            f"{report['mismatches']} mismatches, {report['disagreements']} rule disagreements")
    if report["counterexample"]:
        text += "\ncounterexample: " + json.dumps(report["counterexample"])
    _emit(args, report, text)
    return 1 if report["mismatches"] else 0


def cmd_bench(args) -> int:
    config = BenchConfig(sizes=tuple(args.sizes), edge_factor=args.edge_factor,
                         queries=args.queries, seed=args.seed, threads=args.threads)
    report = run_bench(config)
    if args.output:
        _save(report, args.output)
    lines = [f"{'n':>8} {'build s':>9} {'median us':>10} {'p99 us':>9} {'words/n':>8}"]
    for row in report["rows"]:
        lines.append(f"{row['n']:>8} {row['preprocess_s']:>9.3f} {row['query_median_us']:>10.1f} "
                     f"{row['query_p99_us']:>9.1f} {row['words_per_vertex']:>8.1f}")
    _emit(args, report, "\n".join(lines))
    return 0


COMMANDS = {
    "build": cmd_build,
    "query": cmd_query,
    "count": cmd_count,
    "cut": cmd_cut,
    "verify": cmd_verify,
    "bench": cmd_bench,
}

FAULT_NAMES = sorted(FAULTS)
