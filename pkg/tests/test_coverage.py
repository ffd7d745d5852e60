import pytest

from connectivity_oracle import CaseCounter, chain_labels, preprocess
from utils.config import OracleConfig
from verify import COVERAGE_GADGETS, BruteOracle, coverage_gadget


@pytest.mark.parametrize("name", sorted(COVERAGE_GADGETS))
def test_gadget_reaches_its_case(name):
    graph, failures = coverage_gadget(name)
    oracle = preprocess(graph, config=OracleConfig(cross_check=True))
    ctx = oracle.resolve(failures)
    assert ctx.configuration == "triple/chain"
    assert set(COVERAGE_GADGETS[name].labels) <= set(ctx.labels)
    assert ctx.disagreements == []


@pytest.mark.parametrize("name", sorted(COVERAGE_GADGETS))
def test_gadget_answers_match_bfs(name):
    graph, failures = coverage_gadget(name)
    oracle = preprocess(graph)
    brute = BruteOracle(graph)
    assert oracle.count_components(failures) == brute.count_components(failures)
    alive = [v for v in range(1, graph.n + 1) if v not in failures]
    pairs = [(x, y) for x in alive for y in alive if x < y]
    assert oracle.connected_many(failures, pairs) == [brute.connected(failures, x, y) for x, y in pairs]


def test_gadgets_cover_every_chain_label():
    counter = CaseCounter()
    for name in COVERAGE_GADGETS:
        graph, failures = coverage_gadget(name)
        preprocess(graph, counter=counter).resolve(failures)
    assert counter.missing(chain_labels()) == []


def test_counting_argument_runs_under_w(caplog):
    graph, failures = coverage_gadget("below_w/w/counting")
    oracle = preprocess(graph, config=OracleConfig(cross_check=True))
    ctx = oracle.resolve(failures)
    assert "counting/under_w_child" in ctx.labels
    # B and C both reach 8, which hangs below w
    assert oracle.connected(failures, 4, 6)
    assert not [r for r in caplog.records if r.levelname == "ERROR"]
