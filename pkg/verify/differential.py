"""
Differential driver: the oracle against breadth-first search.

Graphs with at most ``exhaustive_limit`` vertices are checked on every failure
set of size 1 to 3 and every surviving pair; larger graphs on random samples.
Every failure set is also checked for its component count and cut answer.
"""
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from connectivity_oracle import CaseCounter, ConnectivityOracle
from graph_core import Graph
from utils.config import OracleConfig, VerifyConfig

from .brute import BruteOracle
from .faults import FAULTS, oracle_class
from .generators import Corpus
from .shrink import shrink_counterexample

logger = logging.getLogger(__name__)


@dataclass
class Counterexample:
    tag: str
    n: int
    edges: List[Tuple[int, int]]
    failures: Tuple[int, ...]
    x: Optional[int]
    y: Optional[int]
    query: str
    oracle_answer: object
    brute_answer: object
    labels: List[str] = field(default_factory=list)


@dataclass
class GraphResult:
    checks: int = 0
    failure_sets: int = 0
    counterexample: Optional[Counterexample] = None
    disagreements: int = 0


def _failure_sets(n: int, config: VerifyConfig, rng: np.random.Generator) -> Iterable[Tuple[int, ...]]:
    if n <= config.exhaustive_limit:
        for k in range(1, min(3, n - 1) + 1):
            yield from combinations(range(1, n + 1), k)
        return
    for _ in range(config.samples_per_graph):
        k = int(rng.integers(1, min(3, n - 1) + 1))
        yield tuple(int(v) + 1 for v in rng.choice(n, size=k, replace=False))


def _refs(oracle: ConnectivityOracle, ctx, vertices: Iterable[int]) -> Dict[int, object]:
    return {v: oracle.locate(ctx, oracle.base_number(v)) for v in vertices}


def _first_pair_mismatch(refs, labels, pairs):
    checked = 0
    for x, y in pairs:
        checked += 1
        if (refs[x] == refs[y]) != (labels[x] == labels[y]):
            return checked, (x, y)
    return checked, None


def check_graph(tag: str, graph: Graph, config: VerifyConfig, oracle_config: OracleConfig,
                counter: Optional[CaseCounter] = None, seed: int = 0,
                fault: Optional[str] = None) -> GraphResult:
    """Check one graph; stops at its first mismatch."""
    rng = np.random.default_rng(seed)
    oracle = oracle_class(fault).preprocess(graph, config=oracle_config, counter=counter)
    brute = BruteOracle(graph)
    result = GraphResult()
    exhaustive = graph.n <= config.exhaustive_limit
    for failures in _failure_sets(graph.n, config, rng):
        result.failure_sets += 1
        ctx = oracle.resolve(failures)
        result.disagreements += len(ctx.disagreements)
        labels = brute.labels(failures)
        alive = [v for v in range(1, graph.n + 1) if v not in failures]

        got, want = oracle.count_resolved(ctx), brute.count_components(failures)
        result.checks += 1
        if got != want:
            result.counterexample = Counterexample(tag, graph.n, list(graph.edges), tuple(failures), None, None,
                                                   "count", got, want, list(ctx.labels))
            return result
        if len(alive) < 2:
            continue
        if exhaustive:
            pairs = list(combinations(alive, 2))
            refs = _refs(oracle, ctx, alive)
        else:
            pairs = [tuple(int(alive[i]) for i in rng.choice(len(alive), size=2, replace=False))]
            refs = _refs(oracle, ctx, pairs[0])
        checked, bad = _first_pair_mismatch(refs, labels, pairs)
        result.checks += checked
        if bad is not None:
            x, y = bad
            result.counterexample = Counterexample(tag, graph.n, list(graph.edges), tuple(failures), x, y,
                                                   "connected", refs[x] == refs[y], labels[x] == labels[y],
                                                   list(ctx.labels))
            return result
    return result


def _still_fails(oracle_config: OracleConfig, fault: Optional[str]):
    def check(graph, failures, x, y):
        oracle = oracle_class(fault).preprocess(graph, config=oracle_config)
        brute = BruteOracle(graph)
        if x is None:
            return oracle.count_components(failures) != brute.count_components(failures)
        return oracle.connected(failures, x, y) != brute.connected(failures, x, y)
    return check


def run_differential(corpus: Corpus, config: Optional[VerifyConfig] = None,
                     oracle_config: Optional[OracleConfig] = None, fault: Optional[str] = None) -> dict:
    """
    Check every graph of ``corpus``.

    Returns
    -------
    dict
        JSON-ready report: totals, the first counterexample (shrunk when
        ``config.shrink``), case-label counts and disagreements between the case rules and the
        rectangle checks.
    """
    config = config or VerifyConfig()
    oracle_config = oracle_config or OracleConfig()
    counter = CaseCounter()
    start = time.perf_counter()

    def unit(entry):
        return check_graph(entry.tag, entry.graph, config, oracle_config, counter,
                           seed=config.seed + entry.seed, fault=fault)

    results: List[GraphResult] = []
    first: Optional[Counterexample] = None
    with ThreadPoolExecutor(max_workers=config.threads) as pool:
        # the builtin map is lazy, so a single-threaded run stops at the first mismatch
        runner = pool.map if config.threads > 1 else map
        for entry, res in zip(corpus.entries, runner(unit, corpus.entries)):
            results.append(res)
            if res.counterexample is not None and first is None:
                first = res.counterexample
                logger.warning("mismatch on %s graph (n=%d): %s F=%s x=%s y=%s oracle=%s brute=%s [%s]",
                               entry.tag, entry.graph.n, first.query, first.failures, first.x, first.y,
                               first.oracle_answer, first.brute_answer, ", ".join(first.labels))
                if config.stop_on_first:
                    break

    if first is not None and config.shrink:
        graph = Graph(first.n, tuple(first.edges))
        g, f, x, y = shrink_counterexample(graph, first.failures, first.x, first.y,
                                           _still_fails(oracle_config, fault))
        first = Counterexample(first.tag, g.n, list(g.edges), f, x, y, first.query,
                               *_answers(g, f, x, y, oracle_config, fault))

    mismatches = sum(1 for r in results if r.counterexample is not None)
    report = {
        "corpus": corpus.name,
        "seed": corpus.seed,
        "graphs": len(results),
        "failure_sets": sum(r.failure_sets for r in results),
        "checks": sum(r.checks for r in results),
        "mismatches": mismatches,
        "disagreements": sum(r.disagreements for r in results),
        "mutation": fault,
        "counterexample": asdict(first) if first is not None else None,
        "labels": dict(sorted(counter.as_dict().items())),
        "elapsed": round(time.perf_counter() - start, 3),
    }
    logger.info("differential run on %s: %d graphs, %d checks, %d mismatches",
                corpus.name, report["graphs"], report["checks"], mismatches)
    return report


def _answers(graph, failures, x, y, oracle_config, fault):
    oracle = oracle_class(fault).preprocess(graph, config=oracle_config)
    ctx = oracle.resolve(failures)
    brute = BruteOracle(graph)
    if x is None:
        return oracle.count_resolved(ctx), brute.count_components(failures), list(ctx.labels)
    return oracle.connected(failures, x, y), brute.connected(failures, x, y), list(ctx.labels)


def mutation_sweep(corpus: Corpus, config: Optional[VerifyConfig] = None,
                   mutations: Optional[Iterable[str]] = None) -> Dict[str, bool]:
    """Run the corpus once per named mutation; maps each name to whether it was caught."""
    config = config or VerifyConfig()
    quick = VerifyConfig(exhaustive_limit=config.exhaustive_limit, samples_per_graph=config.samples_per_graph,
                         seed=config.seed, threads=config.threads, shrink=False, stop_on_first=True)
    caught = {}
    for name in mutations or FAULTS:
        report = run_differential(corpus, quick, fault=name)
        caught[name] = report["mismatches"] > 0
        logger.info("mutation %-24s %s", name, "caught" if caught[name] else "MISSED")
    return caught
