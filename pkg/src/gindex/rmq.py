"""Sparse-table range min/max queries over a static array."""

from __future__ import annotations

import numpy as np


class SparseTable:
    """O(n log n) preprocessing, O(1) argmin/argmax range queries.

    Ties break toward the leftmost index, which keeps every consumer
    deterministic.
    """

    def __init__(self, values, mode: str = "min"):
        if mode not in ("min", "max"):
            raise ValueError("mode must be 'min' or 'max'")
        vals = np.asarray(values, dtype=np.int64)
        n = len(vals)
        self.values = vals
        self.mode = mode
        self.n = n
        levels = max(1, n.bit_length())
        self._idx = [np.arange(n, dtype=np.int64)]
        for k in range(1, levels):
            half = 1 << (k - 1)
            prev = self._idx[k - 1]
            m = n - (1 << k) + 1
            if m <= 0:
                break
            left = prev[:m]
            right = prev[half : half + m]
            if mode == "min":
                take_left = vals[left] <= vals[right]
            else:
                take_left = vals[left] >= vals[right]
            self._idx.append(np.where(take_left, left, right))

    def query_index(self, i: int, j: int) -> int:
        """Index of the min/max of values[i..j] (0-based, inclusive)."""
        if i > j or i < 0 or j >= self.n:
            raise IndexError(f"bad range [{i}, {j}] for array of length {self.n}")
        k = (j - i + 1).bit_length() - 1
        a = int(self._idx[k][i])
        b = int(self._idx[k][j - (1 << k) + 1])
        va, vb = self.values[a], self.values[b]
        if self.mode == "min":
            if vb < va or (vb == va and b < a):
                return b
            return a
        if vb > va or (vb == va and b < a):
            return b
        return a

    def query(self, i: int, j: int) -> int:
        return int(self.values[self.query_index(i, j)])
