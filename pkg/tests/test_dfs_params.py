import numpy as np
import pytest
from hypothesis import given, settings

from dfs_params import VERTEX_FIELDS, compute_high_points, compute_scalar_params
from graph_core import BOTTOM, View, run_dfs, split_transform
from verify import brute_extreme_points, brute_next_mp, brute_scalar_params

from .conftest import Built
from .strategies import connected_graphs


def test_params_of_vertex_5(tree_a):
    p = compute_scalar_params(tree_a).as_dict(5)
    assert p == {"l1": 1, "l2": 2, "low1": 1, "low2": 2, "low3": BOTTOM, "high1": 2, "high2": 1,
                 "bp_count": 2, "sum_y": 3, "num_low": 1, "num_high": 1}


def test_params_of_vertex_3(tree_a):
    p = compute_scalar_params(tree_a).as_dict(3)
    assert (p["low1"], p["low2"], p["high1"], p["high2"]) == (1, BOTTOM, 1, BOTTOM)
    assert (p["bp_count"], p["sum_y"], p["num_low"], p["num_high"]) == (2, 2, 2, 2)


def test_params_of_vertex_2_empty(tree_a):
    p = compute_scalar_params(tree_a).as_dict(2)
    assert all(value == 0 for value in p.values())


def test_extreme_points_tree_a(tree_a):
    b = Built(tree_a)
    assert b.extremes.lp[View.BASE][3] == 4
    assert b.extremes.rp[View.BASE][3] == 5
    assert b.extremes.mp[3] == 3


def test_next_mp_chain(tree_b):
    b = Built(tree_b)
    assert b.extremes.mp[3] == b.extremes.mp[4] == 4
    assert b.extremes.next_mp[4] == 3
    assert b.extremes.next_mp[3] == BOTTOM


def test_empty_bp_has_no_extremes(tree_a):
    b = Built(tree_a)
    assert b.extremes.lp[View.BASE][2] == b.extremes.rp[View.BASE][2] == b.extremes.mp[2] == BOTTOM


def split_tree(graph):
    tg = split_transform(graph)
    return run_dfs(tg, start=tg.root)


@given(connected_graphs(max_n=12))
@settings(max_examples=60, deadline=None)
def test_scalar_params_match_definitions(graph):
    for tree in (run_dfs(graph), split_tree(graph)):
        fast, slow = compute_scalar_params(tree), brute_scalar_params(tree)
        for name in VERTEX_FIELDS + ("bp_count", "sum_y", "num_low", "num_high"):
            assert np.array_equal(getattr(fast, name), getattr(slow, name)), name


@given(connected_graphs(max_n=12))
@settings(max_examples=40, deadline=None)
def test_high_points_match_definitions(graph):
    tree = split_tree(graph)
    high1, high2 = compute_high_points(tree)
    slow = brute_scalar_params(tree)
    assert np.array_equal(high1, slow.high1)
    assert np.array_equal(high2, slow.high2)


@given(connected_graphs(max_n=11))
@settings(max_examples=40, deadline=None)
def test_extreme_points_match_definitions_in_every_view(graph):
    b = Built(split_tree(graph))
    for view, pv in b.param_views.items():
        lp, rp, mp = brute_extreme_points(pv.tree)
        assert np.array_equal(pv.lp, lp), view
        assert np.array_equal(pv.rp, rp), view
        assert np.array_equal(pv.mp, mp), view
    assert np.array_equal(b.extremes.next_mp, brute_next_mp(b.extremes.mp))


@given(connected_graphs(max_n=11))
@settings(max_examples=40, deadline=None)
def test_params_invariant_across_views(graph):
    b = Built(split_tree(graph))
    base = b.param_views[View.BASE].params
    for view in (View.LOW_INC, View.HIGH_DEC):
        pv = b.param_views[view]
        for v in range(1, pv.n + 1):
            original = pv.untranslate(v)
            assert pv.params.bp_count[v] == base.bp_count[original]
            assert pv.params.sum_y[v] == base.sum_y[original]
            assert pv.untranslate(int(pv.params.low1[v])) == base.low1[original]
            assert pv.untranslate(int(pv.mp[v])) == b.extremes.mp[original]


@pytest.mark.parametrize("seed", range(3))
def test_mp_chains_and_nesting(seed):
    from verify import random_connected

    graph = random_connected(40, 90, np.random.default_rng(seed))
    b = Built(split_tree(graph))
    tree, mp, next_mp = b.tree, b.extremes.mp, b.extremes.next_mp
    for v in range(1, tree.n + 1):
        if next_mp[v] != BOTTOM:
            assert tree.is_proper_ancestor(int(next_mp[v]), v)
        for c in tree.path_to_root(v)[1:]:
            if mp[c] != BOTTOM and mp[v] != BOTTOM and tree.is_ancestor(v, int(mp[c])):
                assert tree.is_ancestor(int(mp[v]), int(mp[c]))
