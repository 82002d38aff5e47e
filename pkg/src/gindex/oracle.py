"""Brute-force reference implementations used to cross-check the index.

Everything here is deliberately simple and slow: linear scans and direct
definitions only, so the fast structures can be tested against it.
"""

from __future__ import annotations

from bisect import bisect_left


def naive_occurrences(text: bytes, pattern: bytes) -> list[int]:
    """All 1-based starting positions of ``pattern`` in ``text``."""
    if not pattern:
        raise ValueError("pattern must be non-empty")
    out = []
    t = text.find(pattern)
    while t != -1:
        out.append(t + 1)
        t = text.find(pattern, t + 1)
    return out


def classify_occurrences(text: bytes, pattern: bytes, leaf_starts: list[int]):
    """Split occurrences into (primary, secondary) with respect to the leaf
    partition given by its sorted 1-based block starting positions.

    An occurrence at t is primary when it crosses a block boundary, i.e.
    some block starts strictly inside it (in positions t+1 .. t+m-1); a
    length-1 occurrence is primary when a block starts exactly at it.
    """
    m = len(pattern)
    starts = set(leaf_starts)
    primary, secondary = [], []
    for t in naive_occurrences(text, pattern):
        if m == 1:
            crossing = t in starts
        else:
            k = bisect_left(leaf_starts, t + 1)
            crossing = k < len(leaf_starts) and leaf_starts[k] <= t + m - 1
        (primary if crossing else secondary).append(t)
    return primary, secondary


def naive_prefix_range(sorted_elems: list[bytes], pattern: bytes):
    """1-based inclusive range of elements with ``pattern`` as a prefix, or
    None when there is no such element."""
    lo = hi = None
    for i, e in enumerate(sorted_elems):
        if e.startswith(pattern):
            if lo is None:
                lo = i
            hi = i
    if lo is None:
        return None
    return lo + 1, hi + 1


def distinct_substrings(text: bytes, max_len: int) -> list[bytes]:
    """All distinct substrings of ``text`` with length in [1..max_len]."""
    seen = set()
    n = len(text)
    for length in range(1, min(max_len, n) + 1):
        for i in range(n - length + 1):
            seen.add(text[i:i + length])
    return sorted(seen)
