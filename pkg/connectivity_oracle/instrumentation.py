"""Counting which failure configurations and sub-cases the resolver went through."""
import threading
from collections import Counter
from typing import Dict, Iterable, List

MP_LOCATIONS = ("bottom", "in_B", "v", "hanging_v", "in_C", "w", "below_w")

CONFIGURATION_LABELS = (
    "single",
    "pair/unrelated",
    "pair/related",
    "triple/unrelated",
    "triple/pair_plus_one",
    "triple/fork/different_children",
    "triple/fork/same_child",
)

COUNTING_LABELS = ("counting/in_C", "counting/under_w_child")

# (location of Mp(c), location of Mp(d)) pairs with a rule of their own
MP_PAIRS = (
    ("bottom", "bottom"), ("bottom", "below_w"), ("bottom", "w"), ("bottom", "in_C"),
    ("in_B", "below_w"), ("in_B", "w"), ("in_B", "in_C"),
    ("hanging_v", "below_w"), ("hanging_v", "in_C"),
    ("below_w", "below_w"), ("below_w", "w"), ("below_w", "in_C"),
    ("w", "w"), ("w", "in_C"),
    ("in_C", "in_C"),
)

SUBCASE_LABELS = (
    "chain/v/other_child",
    "chain/v/no_edges",
    "chain/v/b_only",
    "chain/v/through_d",
    "chain/v/through_d/c_reaches_b",
    "chain/v/through_d/c_misses_b",
    "chain/v/u_only",
    "chain/v/a_only",
    "chain/w/first_high_in_C",
    "chain/in_C/same_mp",
    "chain/in_C/low_r_is_u",
    "chain/in_C/low_r_in_C",
    "chain/in_C/second_low_is_u",
    "chain/in_C/second_child_in_C",
    "chain/in_C/second_child_above_w",
)


class CaseCounter:
    """Thread-safe multiset of case labels."""

    def __init__(self):
        self._counts: Counter = Counter()
        self._lock = threading.Lock()

    def record(self, labels: Iterable[str]) -> None:
        with self._lock:
            self._counts.update(labels)

    def __getitem__(self, label: str) -> int:
        with self._lock:
            return self._counts[label]

    def merge(self, other: "CaseCounter") -> None:
        self.record(other.as_dict())

    def as_dict(self) -> Dict[str, int]:
        with self._lock:
            return dict(self._counts)

    def missing(self, expected: Iterable[str]):
        seen = self.as_dict()
        return [label for label in expected if not seen.get(label)]


def chain_labels() -> List[str]:
    """Every chain label the coverage gadgets must reach."""
    labels = [f"chain/mp_c={loc}" for loc in MP_LOCATIONS]
    labels += [f"chain/mp_c={c}/mp_d={d}" for c, d in MP_PAIRS]
    return labels + list(SUBCASE_LABELS) + list(COUNTING_LABELS)
