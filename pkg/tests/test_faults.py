import pytest

from connectivity_oracle import ConnectivityOracle, preprocess
from utils.errors import ConfigError
from verify import build_corpus, mutation_sweep, path_with_chords
from verify.faults import FAULTS, faulty, oracle_class


def test_unknown_fault_is_rejected():
    with pytest.raises(ConfigError):
        oracle_class("flip_everything")


def test_no_fault_is_the_plain_oracle():
    assert oracle_class(None) is ConnectivityOracle


def test_faults_are_oracle_subclasses():
    for fault in FAULTS.values():
        assert issubclass(fault.oracle_class, ConnectivityOracle)
        assert fault.description


def test_negated_pair_rule_joins_separated_pieces(c6):
    assert not preprocess(c6).connected([2, 5], 1, 3)
    assert faulty(c6, "pair_rule_negated").connected([2, 5], 1, 3)


def test_skipping_isolated_count_undercounts():
    graph = path_with_chords(3)
    assert preprocess(graph).count_components([2]) == 2
    assert faulty(graph, "skip_isolated_count").count_components([2]) == 1


def test_ignoring_survivors_isolates_hanging_subtrees(c6):
    assert preprocess(c6).connected([3], 1, 5)
    assert not faulty(c6, "ignore_survivors").connected([3], 1, 5)


@pytest.mark.slow
def test_default_corpus_catches_every_fault():
    caught = mutation_sweep(build_corpus("default", seed=0))
    assert [name for name, hit in caught.items() if not hit] == []
