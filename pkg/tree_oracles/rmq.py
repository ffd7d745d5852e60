"""Preprocessing to answer range-minimum (or range-maximum) queries in constant time."""
import numpy as np

from utils.errors import PreconditionError


def _ilog2(value: int) -> int:
    """Integral part of the base-2 logarithm of a positive integer."""
    return value.bit_length() - 1


class RmqIndex:
    """
    Sparse table over a fixed integer array.

    ``query(i, j)`` returns the index of the minimum (``mode="min"``) or maximum
    (``mode="max"``) of ``values[i..j]`` (inclusive); ties go to the smallest
    index. Complexity: O(N log N) build, O(1) query.
    """

    def __init__(self, values, mode="min"):
        if mode not in ("min", "max"):
            raise ValueError(f"mode must be 'min' or 'max', not {mode!r}")
        self.mode = mode
        self.values = np.asarray(values, dtype=np.int64)
        self._keyed = self.values if mode == "min" else -self.values
        n = len(self.values)
        # table[k][i] is the winning index of values[i : i + 2**k]
        self.table = [np.arange(n, dtype=np.int64)]
        k = 1
        while (1 << k) <= n:
            prev = self.table[-1]
            width = n - (1 << k) + 1
            left = prev[:width]
            right = prev[(1 << (k - 1)):(1 << (k - 1)) + width]
            self.table.append(np.where(self._keyed[left] <= self._keyed[right], left, right))
            k += 1

    def __len__(self):
        return len(self.values)

    def query(self, i: int, j: int) -> int:
        if not 0 <= i <= j < len(self.values):
            raise PreconditionError(f"invalid range [{i}, {j}] for {len(self.values)} values")
        k = _ilog2(j - i + 1)
        a = int(self.table[k][i])
        b = int(self.table[k][j - (1 << k) + 1])
        return a if self._keyed[a] <= self._keyed[b] else b

    def value(self, i: int, j: int) -> int:
        return int(self.values[self.query(i, j)])
