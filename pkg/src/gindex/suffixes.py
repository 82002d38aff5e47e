"""Suffix array, inverse, and LCP array used by the build pipeline."""

from __future__ import annotations

import numpy as np


def suffix_array(s: bytes) -> np.ndarray:
    """Suffix array of ``s`` (0-based start positions) by prefix doubling."""
    n = len(s)
    if n == 0:
        return np.empty(0, dtype=np.int64)
    rank = np.frombuffer(s, dtype=np.uint8).astype(np.int64)
    sa = np.argsort(rank, kind="stable")
    tmp = np.empty(n, dtype=np.int64)
    k = 1
    while True:
        # sort by (rank[i], rank[i+k]), missing second key treated as -1
        second = np.full(n, -1, dtype=np.int64)
        second[: n - k] = rank[k:]
        sa = np.lexsort((second, rank))
        tmp[sa[0]] = 0
        prev_r = rank[sa[:-1]]
        cur_r = rank[sa[1:]]
        prev_s = second[sa[:-1]]
        cur_s = second[sa[1:]]
        tmp[sa[1:]] = np.cumsum((cur_r != prev_r) | (cur_s != prev_s))
        rank = tmp.copy()
        if rank[sa[-1]] == n - 1:
            return sa
        k *= 2


def inverse_array(sa: np.ndarray) -> np.ndarray:
    isa = np.empty(len(sa), dtype=np.int64)
    isa[sa] = np.arange(len(sa), dtype=np.int64)
    return isa


def lcp_array(s: bytes, sa: np.ndarray, isa: np.ndarray) -> np.ndarray:
    """Kasai LCP array: lcp[k] = lcp(suffix sa[k-1], suffix sa[k]); lcp[0] = 0."""
    n = len(s)
    lcp = np.zeros(n, dtype=np.int64)
    sa_l = sa.tolist()
    isa_l = isa.tolist()
    h = 0
    for i in range(n):
        r = isa_l[i]
        if r == 0:
            h = 0
            continue
        j = sa_l[r - 1]
        while i + h < n and j + h < n and s[i + h] == s[j + h]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return lcp
