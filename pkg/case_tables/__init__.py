"""
Per-vertex tables for the failure-case analysis: skipping points, segment
points of the lemma families, the equal-``Mp`` chain oracle and children scans.
"""
from .child_scans import (
    LowTriple,
    HighTriple,
    A2Entry,
    Items74,
    Items76,
    unique_lowest_child,
    survivor_key,
)
from .lemma_families import SegmentEntry, LowChildrenEntry
from .chain_oracle import MpChainOracle
from .tables import CaseTables, build_case_tables, lemma56_query

__all__ = [
    'LowTriple',
    'HighTriple',
    'A2Entry',
    'Items74',
    'Items76',
    'unique_lowest_child',
    'survivor_key',
    'SegmentEntry',
    'LowChildrenEntry',
    'MpChainOracle',
    'CaseTables',
    'build_case_tables',
    'lemma56_query',
]
