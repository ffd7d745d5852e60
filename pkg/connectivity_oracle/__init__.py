"""
Query engine: resolve a failure set into internal components, connect them and
answer connectivity, cut and component-count queries.
"""
from .context import Component, ComponentRef, FailureContext, InternalGroup, IsolatedHanging, Segment
from .instrumentation import (
    CONFIGURATION_LABELS,
    COUNTING_LABELS,
    MP_LOCATIONS,
    MP_PAIRS,
    SUBCASE_LABELS,
    CaseCounter,
    chain_labels,
)
from .oracle import MAX_FAILURES, ConnectivityOracle, preprocess

__all__ = [
    'Component',
    'ComponentRef',
    'FailureContext',
    'InternalGroup',
    'IsolatedHanging',
    'Segment',
    'CONFIGURATION_LABELS',
    'COUNTING_LABELS',
    'MP_LOCATIONS',
    'MP_PAIRS',
    'SUBCASE_LABELS',
    'CaseCounter',
    'chain_labels',
    'MAX_FAILURES',
    'ConnectivityOracle',
    'preprocess',
]
