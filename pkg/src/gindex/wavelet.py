"""Wavelet tree over a permutation, with orthogonal range reporting.

Stores seq[x] = y for a bijection between x-ranks and y-ranks and reports
every point inside a rectangle in O(log n) time per point: positions inside
a fully-covered node are walked down to recover y and up to recover x.
"""

from __future__ import annotations

import numpy as np


class _Node:
    __slots__ = ("lo", "hi", "mid", "bits", "zpos", "opos", "left", "right")

    def __init__(self, lo, hi):
        self.lo = lo
        self.hi = hi
        self.mid = (lo + hi) // 2
        self.bits = None
        self.zpos = None
        self.opos = None
        self.left = None
        self.right = None


class WaveletGrid:
    def __init__(self, seq):
        """seq[x-1] = y for x = 1..n; values must be a permutation of 1..n."""
        self.n = len(seq)
        arr = np.asarray(seq, dtype=np.int64)
        if self.n and (np.sort(arr) != np.arange(1, self.n + 1)).any():
            raise ValueError("sequence must be a permutation of 1..n")
        self.seq = arr
        self.root = self._build(arr, 1, self.n) if self.n else None

    def _build(self, vals, lo, hi):
        node = _Node(lo, hi)
        if lo == hi:
            return node
        bits = (vals > node.mid).astype(np.uint8)
        node.bits = bits
        node.zpos = np.flatnonzero(bits == 0)
        node.opos = np.flatnonzero(bits == 1)
        node.left = self._build(vals[bits == 0], lo, node.mid)
        node.right = self._build(vals[bits == 1], node.mid + 1, hi)
        return node

    def _emit(self, chain, node, k):
        """Recover (x, y) of the k-th element of ``node``'s subsequence.

        ``chain`` holds (parent, went_right) pairs from the root down to
        ``node``.
        """
        nd, kk = node, k
        while nd.bits is not None:
            if nd.bits[kk]:
                kk = int(np.searchsorted(nd.opos, kk))
                nd = nd.right
            else:
                kk = int(np.searchsorted(nd.zpos, kk))
                nd = nd.left
        y = nd.lo
        kk2 = k
        for parent, went_right in reversed(chain):
            kk2 = int(parent.opos[kk2]) if went_right else int(parent.zpos[kk2])
        x = kk2 + 1
        return x, y

    def report(self, x1, x2, y1, y2):
        """All points (x, y) with x1 <= x <= x2 and y1 <= y <= y2, 1-based."""
        out = []
        if self.n == 0 or x1 > x2 or y1 > y2:
            return out
        x1 = max(x1, 1)
        x2 = min(x2, self.n)
        if x1 > x2:
            return out

        def rec(node, a, b, chain):
            if a >= b or node is None or node.hi < y1 or node.lo > y2:
                return
            if y1 <= node.lo and node.hi <= y2:
                for k in range(a, b):
                    out.append(self._emit(chain, node, k))
                return
            la = int(np.searchsorted(node.zpos, a))
            lb = int(np.searchsorted(node.zpos, b))
            rec(node.left, la, lb, chain + [(node, False)])
            rec(node.right, a - la, b - lb, chain + [(node, True)])

        rec(self.root, x1 - 1, x2, [])
        return out
