import pytest

from graph_core import Graph
from utils.config import OracleConfig, VerifyConfig
from utils.errors import ConfigError
from verify import build_corpus, check_graph, path_with_chords, run_differential, shrink_counterexample


def test_smoke_corpus_has_no_mismatch():
    report = run_differential(build_corpus("smoke", seed=1), VerifyConfig(),
                              OracleConfig(cross_check=True))
    assert report["mismatches"] == 0
    assert report["disagreements"] == 0
    assert report["counterexample"] is None
    assert report["checks"] > 0
    assert report["labels"]["single"] > 0


def test_threads_give_the_same_totals():
    corpus = build_corpus("smoke", seed=2)
    one = run_differential(corpus, VerifyConfig(threads=1))
    four = run_differential(corpus, VerifyConfig(threads=4))
    for key in ("graphs", "failure_sets", "checks", "mismatches"):
        assert one[key] == four[key]
    assert one["labels"] == four["labels"]


def test_mutation_produces_counterexample():
    report = run_differential(build_corpus("smoke", seed=0), VerifyConfig(), fault="skip_isolated_count")
    assert report["mismatches"] == 1
    example = report["counterexample"]
    assert example["query"] in ("count", "connected")
    assert example["oracle_answer"] != example["brute_answer"]


def test_check_graph_counts_every_failure_set():
    result = check_graph("cycle", path_with_chords(5, [(5, 1)]), VerifyConfig(), OracleConfig())
    assert result.counterexample is None
    assert result.failure_sets == 5 + 10 + 10


def test_corpus_is_reproducible():
    first, second = build_corpus("default", seed=3), build_corpus("default", seed=3)
    assert [e.graph.edges for e in first] == [e.graph.edges for e in second]


def test_unknown_corpus():
    with pytest.raises(ConfigError):
        build_corpus("huge")


def test_shrink_keeps_pinned_vertices():
    cycle = path_with_chords(8, [(8, 1)])
    graph, failures, x, y = shrink_counterexample(cycle, (2,), 1, 3, lambda g, f, a, b: g.n >= 4)
    assert isinstance(graph, Graph)
    assert (graph.n, graph.m) == (4, 3)
    assert (failures, x, y) == ((2,), 1, 3)


@pytest.mark.slow
def test_default_corpus_has_no_mismatch():
    report = run_differential(build_corpus("default", seed=0), VerifyConfig(threads=4))
    assert report["mismatches"] == 0


@pytest.mark.slow
def test_large_corpus_has_no_mismatch():
    report = run_differential(build_corpus("large", seed=0), VerifyConfig(samples_per_graph=200, threads=4))
    assert report["mismatches"] == 0
