import pickle

import pytest
from hypothesis import given, settings

from connectivity_oracle import CaseCounter, InternalGroup, IsolatedHanging, MAX_FAILURES, preprocess
from connectivity_oracle.counting import count_isolated, isolated_roots
from graph_core import load_graph
from utils.config import OracleConfig
from utils.errors import FailureSetError, TableLookupError, VertexError
from utils.file_handler import load_oracle, save_oracle
from verify import BruteOracle, brute_connected, brute_count, coverage_gadget, path_with_chords

from .strategies import graphs_with_failures

CROSS_CHECK = OracleConfig(cross_check=True)


# --- EXAMPLES ---

def test_cycle_split_in_two(oracle_for, c6):
    oracle = oracle_for(c6)
    assert oracle.connected([2, 5], 3, 4)
    assert not oracle.connected([2, 5], 1, 3)
    assert oracle.connected([2, 5], 1, 6)
    assert oracle.count_components([2, 5]) == 2
    assert oracle.is_cut([2, 5])


def test_cycle_alternate_failures(oracle_for, c6, c7):
    assert oracle_for(c6).count_components([2, 4, 6]) == 3
    assert oracle_for(c7).count_components([2, 4, 6]) == 3


def test_chord_merges_two_pieces(oracle_for, c7_chord):
    oracle = oracle_for(c7_chord)
    assert oracle.count_components([2, 4, 6]) == 2
    assert oracle.connected([2, 4, 6], 1, 5)
    assert not oracle.connected([2, 4, 6], 3, 5)


def test_clique_never_splits(oracle_for, k4):
    oracle = oracle_for(k4)
    assert oracle.count_components([2, 3, 4]) == 1
    assert not oracle.is_cut([1])
    assert not oracle.is_cut([1, 2])


def test_path_middle_vertex_is_cut(oracle_for):
    oracle = oracle_for(path_with_chords(3))
    assert oracle.is_cut([2])
    assert not oracle.is_cut([1])
    assert oracle.count_components([2]) == 2


def test_single_failure_leaving_one_vertex(oracle_for):
    oracle = oracle_for(path_with_chords(3))
    assert oracle.count_components([1, 2]) == 1


def test_locate_internal_and_hanging(oracle_for, path5):
    oracle = oracle_for(path5)
    ctx = oracle.resolve([2, 4])
    assert isinstance(oracle.locate(ctx, oracle.base_number(3)), InternalGroup)
    assert isinstance(oracle.locate(ctx, oracle.base_number(1)), InternalGroup)
    assert oracle.locate(ctx, oracle.base_number(3)) != oracle.locate(ctx, oracle.base_number(1))
    assert isinstance(oracle.locate(ctx, oracle.base_number(5)), IsolatedHanging)
    assert ctx.configuration == "pair/related"


def test_connected_many_matches_single_queries(oracle_for, c7_chord):
    oracle = oracle_for(c7_chord)
    pairs = [(1, 3), (1, 5), (3, 5), (7, 1)]
    assert oracle.connected_many([2, 4, 6], pairs) == [oracle.connected([2, 4, 6], x, y) for x, y in pairs]


def test_labels_are_recorded(oracle_for, c6):
    counter = CaseCounter()
    oracle = oracle_for(c6, counter=counter)
    oracle.count_components([2, 5])
    oracle.count_components([3])
    assert counter["pair/related"] + counter["pair/unrelated"] == 1
    assert counter["single"] == 1


# --- ERRORS ---

@pytest.mark.parametrize("failures", [[], [1, 2, 3, 4], [2, 2], [0], [7]])
def test_invalid_failure_sets(oracle_for, c6, failures):
    with pytest.raises(FailureSetError):
        oracle_for(c6).count_components(failures)


def test_query_vertex_errors(oracle_for, c6):
    oracle = oracle_for(c6)
    with pytest.raises(VertexError):
        oracle.connected([2], 2, 3)
    with pytest.raises(VertexError):
        oracle.connected([2], 3, 9)


def test_max_failures():
    assert MAX_FAILURES == 3


# --- STATE ---

def test_queries_do_not_interfere(oracle_for, c7_chord):
    oracle = oracle_for(c7_chord)
    first = oracle.connected([2, 4, 6], 3, 5)
    oracle.count_components([1])
    oracle.connected([3, 5], 4, 6)
    assert oracle.connected([2, 4, 6], 3, 5) == first


def test_pickle_round_trip(tmp_path, c7_chord):
    oracle = preprocess(c7_chord, counter=CaseCounter())
    path = save_oracle(oracle, str(tmp_path / "c7.oracle"))
    loaded = load_oracle(path)
    assert loaded.counter is None
    assert loaded.count_components([2, 4, 6]) == 2
    assert loaded.connected([2, 4, 6], 1, 5)
    assert pickle.loads(pickle.dumps(oracle)).table_words() == oracle.table_words()


def test_load_missing_oracle(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_oracle(str(tmp_path / "missing.oracle"))


# --- AGAINST BFS ---

@given(graphs_with_failures(max_n=12))
@settings(max_examples=150, deadline=None)
def test_matches_bfs(case):
    graph, failures, x, y = case
    oracle = preprocess(graph, config=CROSS_CHECK)
    assert oracle.connected(failures, x, y) == brute_connected(graph, failures, x, y)
    assert oracle.count_components(failures) == brute_count(graph, failures)
    ctx = oracle.resolve(failures)
    assert ctx.disagreements == []


@given(graphs_with_failures(min_n=5, max_n=10))
@settings(max_examples=60, deadline=None)
def test_every_pair_matches_bfs(case):
    graph, failures, _, _ = case
    oracle = preprocess(graph, config=CROSS_CHECK)
    brute = BruteOracle(graph)
    alive = [v for v in range(1, graph.n + 1) if v not in failures]
    pairs = [(x, y) for x in alive for y in alive if x < y]
    want = [brute.connected(failures, x, y) for x, y in pairs]
    assert oracle.connected_many(failures, pairs) == want
    assert oracle.is_cut(failures) == brute.is_cut(failures)


@given(graphs_with_failures(max_n=12))
@settings(max_examples=80, deadline=None)
def test_isolated_count_matches_direct_inspection(case):
    graph, failures, _, _ = case
    oracle = preprocess(graph)
    ctx = oracle.resolve(failures)
    assert count_isolated(oracle, ctx) == len(isolated_roots(oracle, ctx))


def test_isolated_count_skips_the_equal_key_run(monkeypatch):
    # the 26 leaves under 2 share one survivor key; only the blocked child of 2 is looked up
    graph = load_graph([(1, 2), (2, 3), (3, 4)] + [(2, leaf) for leaf in range(5, 31)], 30)
    failures = (2, 3)
    oracle = preprocess(graph)
    ctx = oracle.resolve(failures)
    lookups = []
    lows = oracle.params.lows
    monkeypatch.setattr(oracle.params, "lows", lambda v: lookups.append(v) or lows(v))
    assert count_isolated(oracle, ctx) == 27
    assert len(lookups) <= 2
    assert oracle.count_resolved(ctx) == brute_count(graph, failures)


# --- CASE RULES ALONE ---

@given(graphs_with_failures(max_n=12))
@settings(max_examples=150, deadline=None)
def test_case_rules_alone_match_bfs(case):
    graph, failures, x, y = case
    oracle = preprocess(graph)
    assert oracle.rectangle_checks is None
    assert oracle.connected(failures, x, y) == brute_connected(graph, failures, x, y)
    assert oracle.count_components(failures) == brute_count(graph, failures)


def test_case_rules_read_the_tables(monkeypatch):
    graph, failures = coverage_gadget("below_w/w/counting")
    oracle = preprocess(graph)
    monkeypatch.setattr(oracle.tables, "items74", {})
    with pytest.raises(TableLookupError) as err:
        oracle.resolve(failures)
    assert err.value.table == "items74"
