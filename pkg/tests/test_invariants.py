from hypothesis import given, settings

from connectivity_oracle import preprocess
from graph_core import VertexKind, View
from utils.config import OracleConfig
from verify import find_violations, summarize

from .strategies import connected_graphs


@given(connected_graphs(max_n=14))
@settings(max_examples=40, deadline=None)
def test_fresh_oracles_have_no_violations(graph):
    assert find_violations(preprocess(graph)) == []


def test_debug_checks_build(c7_chord, caplog):
    oracle = preprocess(c7_chord, config=OracleConfig(debug_checks=True))
    assert oracle.count_components([2, 4, 6]) == 2
    assert not [r for r in caplog.records if r.levelname == "ERROR"]


def test_broken_split_is_reported(c6, caplog):
    oracle = preprocess(c6)
    oracle.kinds[1] = VertexKind.REAL
    violations = find_violations(oracle)
    assert summarize(violations).get("SPLIT", 0) >= 1
    assert any(r.levelname == "ERROR" for r in caplog.records)


def test_broken_tree_is_reported(c6):
    oracle = preprocess(c6)
    oracle.param_views[View.BASE].tree.nd[1] -= 1
    assert "TREE" in summarize(find_violations(oracle))
