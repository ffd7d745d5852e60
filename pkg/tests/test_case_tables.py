import pytest
from hypothesis import given, settings

from case_tables import LowTriple, survivor_key
from graph_core import BOTTOM, View, run_dfs, split_transform
from utils.errors import PreconditionError
from verify import (
    brute_extreme_high,
    brute_extreme_points,
    brute_items74,
    brute_items76,
    brute_lemma53_query,
    brute_lemma54_query,
    brute_lemma55_anchor,
    brute_low_children,
    brute_lowest_child,
    brute_nca,
    brute_scalar_params,
    brute_segment_points,
    brute_skip_point,
    brute_subtree_extreme,
    brute_survivors,
    brute_three_low,
)

from .conftest import Built
from .strategies import connected_graphs


def test_three_low_of_tree_c(tree_c):
    tables = Built(tree_c).tables
    assert tables.three_low[3] == LowTriple(1, BOTTOM, 3, 5, BOTTOM)


def test_survivors_of_tree_c(tree_c):
    tables = Built(tree_c).tables
    assert tables.survivors_of(5) == (1, 3, BOTTOM)
    assert tables.survivors_of(6) == (1, BOTTOM, BOTTOM)
    assert tables.survivors_of(2) == (BOTTOM, BOTTOM, BOTTOM)


def test_lemma56_on_chain(tree_b):
    tables = Built(tree_b).tables
    # Mp(3) = Mp(4) = 4 but 3 is the parent of 4
    with pytest.raises(PreconditionError):
        tables.lemma56_query(View.BASE, 3, 4)


def test_lemma56_rejects_different_maximum_points(tree_a):
    tables = Built(tree_a).tables
    with pytest.raises(PreconditionError):
        tables.lemma56_query(View.BASE, 1, 5)


def test_sorted_children_follow_survivor_keys(tree_c):
    tables = Built(tree_c).tables
    assert tables.sorted_children[4] == [5, 6]
    assert tables.sorted_keys[4] == sorted(tables.sorted_keys[4])
    assert survivor_key([1, 3, BOTTOM], 6) < survivor_key([1, BOTTOM, BOTTOM], 6)


def test_words_are_counted(tree_c):
    assert Built(tree_c).tables.words() > 0


def split_tree(graph):
    tg = split_transform(graph)
    return run_dfs(tg, start=tg.root)


@given(connected_graphs(max_n=12))
@settings(max_examples=50, deadline=None)
def test_child_scans_match_definitions(graph):
    for tree in (run_dfs(graph), split_tree(graph)):
        b = Built(tree)
        high = b.param_views[View.HIGH_DEC]
        low = b.param_views[View.LOW_INC]
        base = high.untranslate
        for d in range(1, high.n + 1):
            w = int(high.mp[d])
            if w == BOTTOM:
                assert base(d) not in b.tables.three_low
                continue
            want = brute_three_low(high.tree, high.params, high.mp, d)
            assert tuple(b.tables.three_low[base(d)][:3]) == tuple(base(v) for v in want)
            lowest = brute_lowest_child(high.tree, high.params, w)
            if lowest == BOTTOM:
                assert base(d) not in b.tables.three_low_primed
            else:
                want = brute_three_low(high.tree, high.params, high.mp, d, excluded=lowest)
                assert tuple(b.tables.three_low_primed[base(d)][:3]) == tuple(base(v) for v in want)
            assert tuple(b.tables.items74[base(d)]) == brute_items74(high.tree, high.params, high.mp, d)
        for c in range(1, low.n + 1):
            w = int(low.mp[c])
            if w == BOTTOM:
                continue
            want = brute_extreme_high(low.tree, low.params, w, low.parent(c))
            assert tuple(b.tables.extreme_high_mw[low.untranslate(c)]) == \
                tuple(low.untranslate(v) for v in want)


@given(connected_graphs(max_n=12))
@settings(max_examples=50, deadline=None)
def test_survivors_match_definitions(graph):
    tree = split_tree(graph)
    tables = Built(tree).tables
    for c in range(1, tree.n + 1):
        assert tables.survivors_of(c) == brute_survivors(tree, c)


@given(connected_graphs(max_n=12))
@settings(max_examples=50, deadline=None)
def test_lemma56_matches_scan(graph):
    b = Built(split_tree(graph))
    for view in View:
        pv = b.param_views[view]
        for d in range(1, pv.n + 1):
            for c in pv.tree.path_to_root(d)[2:]:
                if pv.mp[d] == BOTTOM or pv.mp[c] != pv.mp[d] or c >= pv.parent(d):
                    continue
                grand = pv.parent(pv.parent(d))
                want = brute_segment_points(pv.tree, d, grand, c)
                got = b.tables.lemma56_query(view, pv.untranslate(c), pv.untranslate(d))
                assert got == tuple(pv.untranslate(v) for v in want)


def _both_trees(graph):
    return run_dfs(graph), split_tree(graph)


def _assert_segment(b, entry, query):
    """``entry`` holds the segment points of the base-numbered ``(z, u, v)`` on both views."""
    z, u, v = query
    for view, got in ((View.HIGH_DEC, entry.high_dec), (View.LOW_INC, entry.low_inc)):
        pv = b.param_views[view]
        want = brute_segment_points(pv.tree, pv.translate(z), pv.translate(u), pv.translate(v))
        assert got == tuple(pv.untranslate(x) for x in want)


@given(connected_graphs(max_n=12))
@settings(max_examples=50, deadline=None)
def test_lemma53_families_match_definitions(graph):
    for tree in _both_trees(graph):
        b = Built(tree)
        high, low = b.param_views[View.HIGH_DEC], b.param_views[View.LOW_INC]
        for table, pv, extreme in (("lemma53_lp", high, high.lp), ("lemma53_rp", high, high.rp),
                                   ("lemma53_low_rp", low, low.rp)):
            entries = getattr(b.tables, table)
            for d in range(1, pv.n + 1):
                query = brute_lemma53_query(pv.tree, pv.params, extreme, pv.mp, d)
                key = pv.untranslate(d)
                if query is None:
                    assert key not in entries, table
                    continue
                query = tuple(pv.untranslate(x) for x in query)
                assert entries[key].anchor == query[2]
                _assert_segment(b, entries[key], query)


@given(connected_graphs(max_n=12))
@settings(max_examples=50, deadline=None)
def test_lemma54_family_matches_definition(graph):
    for tree in _both_trees(graph):
        b = Built(tree)
        low = b.param_views[View.LOW_INC]
        for d in range(1, low.n + 1):
            query = brute_lemma54_query(low.tree, low.params, low.mp, d)
            key = low.untranslate(d)
            if query is None:
                assert key not in b.tables.lemma54
                continue
            query = tuple(low.untranslate(x) for x in query)
            assert b.tables.lemma54[key].anchor == query[2]
            _assert_segment(b, b.tables.lemma54[key], query)


@given(connected_graphs(max_n=12))
@settings(max_examples=50, deadline=None)
def test_lemma55_and_a2_match_definitions(graph):
    for tree in _both_trees(graph):
        b = Built(tree)
        low = b.param_views[View.LOW_INC]
        base = low.untranslate
        for c in range(1, low.n + 1):
            anchor = brute_lemma55_anchor(low.tree, low.params, low.mp, c)
            if anchor == BOTTOM:
                assert base(c) not in b.tables.lemma55
                assert base(c) not in b.tables.extreme_high_a2
                continue
            entry = b.tables.lemma55[base(c)]
            assert entry.anchor == base(anchor)
            _assert_segment(b, entry, (base(anchor), base(low.parent(int(low.mp[c]))), base(c)))

            left = brute_subtree_extreme(low.tree, c, anchor)
            right = brute_subtree_extreme(low.tree, c, anchor, rightmost=True)
            w = brute_nca(low.tree, left, right)
            a2 = b.tables.extreme_high_a2[base(c)]
            assert (a2.left, a2.right, a2.w) == (base(left), base(right), base(w))
            want = brute_extreme_high(low.tree, low.params, w, low.parent(c))
            assert tuple(a2.params) == tuple(base(x) for x in want)


@given(connected_graphs(max_n=12))
@settings(max_examples=50, deadline=None)
def test_skip_tables_match_definitions(graph):
    for tree in _both_trees(graph):
        b = Built(tree)
        high = b.param_views[View.HIGH_DEC]
        l1 = brute_scalar_params(high.tree).l1
        lp, rp, _ = brute_extreme_points(high.tree)
        for v in range(1, high.n + 1):
            z_left = int(l1[lp[v]]) if lp[v] != BOTTOM else BOTTOM
            z_right = int(l1[rp[v]]) if rp[v] != BOTTOM else BOTTOM
            left = brute_skip_point(high.tree, v, z_left)
            right = brute_skip_point(high.tree, v, z_right, rightmost=True)
            assert b.tables.skip_l1_of_lp[high.untranslate(v)] == high.untranslate(left)
            assert b.tables.skip_r1_of_rp[high.untranslate(v)] == high.untranslate(right)


@given(connected_graphs(max_n=12))
@settings(max_examples=50, deadline=None)
def test_first_two_low_children_match_definition(graph):
    for tree in _both_trees(graph):
        b = Built(tree)
        high, low = b.param_views[View.HIGH_DEC], b.param_views[View.LOW_INC]
        table = b.tables.first_two_low_children
        for c in range(1, low.n + 1):
            kids = brute_low_children(low.tree, low.params, low.mp, c)
            key = low.untranslate(c)
            if kids is None:
                assert key not in table
                continue
            entry = table[key]
            first, second = (low.untranslate(k) for k in kids)
            assert (entry.first, entry.second) == (first, second)
            v = high.translate(key)
            for d, points in ((first, entry.first_points), (second, entry.second_points)):
                want = (brute_subtree_extreme(high.tree, v, high.translate(d)),
                        brute_subtree_extreme(high.tree, v, high.translate(d), rightmost=True))
                assert points == tuple(high.untranslate(x) for x in want)


@given(connected_graphs(max_n=12))
@settings(max_examples=50, deadline=None)
def test_items76_match_definition(graph):
    for tree in _both_trees(graph):
        b = Built(tree)
        high, low = b.param_views[View.HIGH_DEC], b.param_views[View.LOW_INC]
        for d in range(1, low.n + 1):
            key = low.untranslate(d)
            w0 = int(low.mp[d])
            if w0 == BOTTOM or len(low.tree.children[w0]) < 2:
                assert key not in b.tables.items76
                continue
            second = low.untranslate(low.tree.children[w0][1])
            want = brute_items76(high.tree, high.params, high.translate(key), high.translate(second))
            if want is None:
                assert key not in b.tables.items76
                continue
            left, right, w, item1a, item1b, item2 = want
            u = high.untranslate
            assert tuple(b.tables.items76[key]) == (second, u(left), u(right), u(w), item1a, item1b, item2)
