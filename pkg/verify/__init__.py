"""
Ground truth, graph generators and the differential test driver.
"""
from .brute import BruteOracle, brute_connected, brute_count
from .brute_params import (
    bp_edges,
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
    brute_next_mp,
    brute_scalar_params,
    brute_segment_points,
    brute_skip_point,
    brute_subtree_extreme,
    brute_survivors,
    brute_three_low,
)
from .generators import (
    COVERAGE_GADGETS,
    Corpus,
    CorpusEntry,
    book,
    build_corpus,
    clique,
    coverage_gadget,
    cycle_with_chords,
    gen_adversarial,
    nested_cuts,
    path_with_chords,
    random_connected,
    theta,
    tree_plus_matching,
)
from .shrink import shrink_counterexample
from .faults import FAULTS, faulty, oracle_class
from .differential import Counterexample, check_graph, mutation_sweep, run_differential
from .invariants import find_violations, summarize
from .bench import run_bench

__all__ = [
    'BruteOracle',
    'brute_connected',
    'brute_count',
    'bp_edges',
    'brute_extreme_high',
    'brute_extreme_points',
    'brute_items74',
    'brute_items76',
    'brute_lemma53_query',
    'brute_lemma54_query',
    'brute_lemma55_anchor',
    'brute_low_children',
    'brute_lowest_child',
    'brute_nca',
    'brute_next_mp',
    'brute_scalar_params',
    'brute_segment_points',
    'brute_skip_point',
    'brute_subtree_extreme',
    'brute_survivors',
    'brute_three_low',
    'COVERAGE_GADGETS',
    'Corpus',
    'CorpusEntry',
    'book',
    'build_corpus',
    'clique',
    'coverage_gadget',
    'cycle_with_chords',
    'gen_adversarial',
    'nested_cuts',
    'path_with_chords',
    'random_connected',
    'theta',
    'tree_plus_matching',
    'shrink_counterexample',
    'FAULTS',
    'faulty',
    'oracle_class',
    'Counterexample',
    'check_graph',
    'mutation_sweep',
    'run_differential',
    'find_violations',
    'summarize',
    'run_bench',
]
