import logging

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from batch_solvers import (
    NO_QUERY,
    Direction,
    DisjointSet,
    SegmentQuery,
    SubtreeExtremeQuery,
    batch_segment_points,
    batch_skip_points,
    batch_subtree_extremes,
    build_query_forest,
    validate_nested,
)
from dfs_params import compute_scalar_params
from graph_core import BOTTOM, run_dfs, split_transform
from utils.errors import NestednessError, PreconditionError
from verify import brute_segment_points, brute_skip_point, brute_subtree_extreme, random_connected

from .conftest import make_tree
from .strategies import connected_graphs


def l1_of(tree):
    return compute_scalar_params(tree).l1


def test_disjoint_set_representative():
    dsu = DisjointSet(5)
    dsu.unite(0, 1, 4)
    dsu.unite(2, 1, 2)
    assert dsu.representative(0) == dsu.representative(2) == 2
    assert dsu.find(0) == dsu.find(1)
    assert dsu.representative(3) == 3
    assert dsu.operations > 0


# --- SUBTREE EXTREMES ---

def test_subtree_extremes_examples(tree_a):
    queries = [SubtreeExtremeQuery(3, 5), SubtreeExtremeQuery(3, 3), SubtreeExtremeQuery(5, 5),
               SubtreeExtremeQuery(2, 2), SubtreeExtremeQuery(3, 3, Direction.RIGHT)]
    assert batch_subtree_extremes(tree_a, l1_of(tree_a), queries) == [5, 4, 5, BOTTOM, 5]


def test_subtree_extremes_rejects_non_descendant(tree_a):
    with pytest.raises(PreconditionError):
        batch_subtree_extremes(tree_a, l1_of(tree_a), [SubtreeExtremeQuery(4, 5)])


@given(connected_graphs(max_n=14), st.data())
@settings(max_examples=60, deadline=None)
def test_subtree_extremes_match_scan(graph, data):
    tg = split_transform(graph)
    tree = run_dfs(tg, start=tg.root)
    queries = []
    for _ in range(20):
        v = data.draw(st.integers(1, tree.n))
        d = data.draw(st.integers(v, tree.last(v)))
        queries.append(SubtreeExtremeQuery(v, d, data.draw(st.sampled_from(list(Direction)))))
    got = batch_subtree_extremes(tree, l1_of(tree), queries)
    want = [brute_subtree_extreme(tree, q.v, q.d, q.direction == Direction.RIGHT) for q in queries]
    assert got == want


# --- SKIP POINTS ---

def test_skip_points_examples(tree_a):
    z = [BOTTOM] * (tree_a.n + 1)
    z[5] = z[4] = 1
    left = batch_skip_points(tree_a, z, Direction.LEFT)
    assert left[5] == 5
    assert left[4] == BOTTOM


def test_skip_points_without_forbidden_vertices_are_extreme_points(tree_a):
    z = [BOTTOM] * (tree_a.n + 1)
    left = batch_skip_points(tree_a, z, Direction.LEFT)
    right = batch_skip_points(tree_a, z, Direction.RIGHT)
    assert (left[3], right[3]) == (4, 5)


@given(connected_graphs(max_n=14), st.data())
@settings(max_examples=60, deadline=None)
def test_skip_points_match_scan(graph, data):
    tg = split_transform(graph)
    tree = run_dfs(tg, start=tg.root)
    z = [BOTTOM]
    for v in range(1, tree.n + 1):
        ancestors = tree.path_to_root(v)[1:]
        z.append(data.draw(st.sampled_from(ancestors + [BOTTOM])) if ancestors else BOTTOM)
    for direction in Direction:
        got = batch_skip_points(tree, z, direction)
        for v in range(1, tree.n + 1):
            assert got[v] == brute_skip_point(tree, v, z[v], direction == Direction.RIGHT)


# --- SEGMENT POINTS ---

def test_segment_points_examples(tree_a):
    assert batch_segment_points(tree_a, [SegmentQuery(3, 2, 1)]) == [(4, 5)]
    assert batch_segment_points(tree_a, [SegmentQuery(5, 2, 2)]) == [(5, 5)]
    assert batch_segment_points(tree_a, [SegmentQuery(4, 4, 4)]) == [(BOTTOM, BOTTOM)]


@pytest.fixture
def path5_tree():
    return make_tree([0, 0, 1, 2, 3, 4], [(5, 1), (4, 2), (5, 3)])


def test_query_forest_disjoint_roots(path5_tree):
    forest = build_query_forest(path5_tree, [SegmentQuery(5, 2, 1), SegmentQuery(5, 4, 3)])
    assert forest.roots() == [0, 1]


def test_query_forest_links_when_inner_z_is_above(path5_tree):
    forest = build_query_forest(path5_tree, [SegmentQuery(5, 3, 1), SegmentQuery(4, 2, 2)])
    assert forest.parent == [NO_QUERY, 0]


def test_query_forest_inner_root_when_inner_z_is_below(path5_tree):
    forest = build_query_forest(path5_tree, [SegmentQuery(4, 3, 1), SegmentQuery(5, 2, 2)])
    assert forest.parent == [NO_QUERY, NO_QUERY]


def test_validate_nested_rejects_overlap(path5_tree):
    with pytest.raises(NestednessError) as info:
        validate_nested(path5_tree, [SegmentQuery(5, 3, 1), SegmentQuery(5, 4, 2)])
    assert info.value.pair == (0, 1)


def test_batch_with_debug_validates(path5_tree):
    with pytest.raises(NestednessError):
        batch_segment_points(path5_tree, [SegmentQuery(5, 3, 1), SegmentQuery(5, 4, 2)], debug=True)


@given(connected_graphs(max_n=14), st.data())
@settings(max_examples=60, deadline=None)
def test_segment_points_match_scan(graph, data):
    tree = run_dfs(graph)
    # singleton segments on distinct vertices always form a nested batch
    picks = data.draw(st.lists(st.integers(1, tree.n), min_size=1, max_size=8, unique=True))
    queries = []
    for u in picks:
        z = data.draw(st.integers(u, tree.last(u)))
        queries.append(SegmentQuery(z, u, u))
    assert batch_segment_points(tree, queries, debug=True) == \
        [brute_segment_points(tree, *q) for q in queries]
    z = data.draw(st.integers(1, tree.n))
    path = tree.path_to_root(z)
    u = data.draw(st.sampled_from(path))
    v = data.draw(st.sampled_from(tree.path_to_root(u)))
    assert batch_segment_points(tree, [SegmentQuery(z, u, v)]) == [brute_segment_points(tree, z, u, v)]


@pytest.mark.parametrize("seed", range(3))
def test_skip_points_dsu_work_is_linear(seed, caplog):
    graph = random_connected(300, 900, np.random.default_rng(seed))
    tree = run_dfs(graph)
    z = [BOTTOM] + [int(tree.parent[v]) for v in range(1, tree.n + 1)]
    with caplog.at_level(logging.DEBUG, logger="batch_solvers.skip_points"):
        batch_skip_points(tree, z)
    operations = int(caplog.records[-1].getMessage().rsplit(":", 1)[1].split()[0])
    assert operations <= 8 * (tree.n + tree.m_back)
