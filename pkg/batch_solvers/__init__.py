"""
Offline batch algorithms driven by disjoint-set unions: subtree extreme
points, skipping points and extreme points over nested segments.
"""
from .disjoint_set import DisjointSet
from .subtree_extremes import Direction, SubtreeExtremeQuery, batch_subtree_extremes
from .skip_points import batch_skip_points
from .segment_points import (
    NO_QUERY,
    SegmentQuery,
    QueryForest,
    build_query_forest,
    validate_nested,
    batch_segment_points,
)

__all__ = [
    'DisjointSet',
    'Direction',
    'SubtreeExtremeQuery',
    'batch_subtree_extremes',
    'batch_skip_points',
    'NO_QUERY',
    'SegmentQuery',
    'QueryForest',
    'build_query_forest',
    'validate_nested',
    'batch_segment_points',
]
