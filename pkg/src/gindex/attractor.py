"""LZ77 parsing, attractors derived from it, and a brute-force validator.

The parse is the classical greedy one: each phrase is the longest factor
with an occurrence starting strictly before the phrase (the source may
overlap the phrase itself), followed by one literal symbol.  The final
phrase omits the literal when the factor exhausts the text.  Taking the
last position of every phrase yields a string attractor of size z.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import NamedTuple, Optional, Tuple

import numpy as np

from .errors import InputContainsZeroByte
from .rmq import SparseTable
from .suffixes import inverse_array, lcp_array, suffix_array


class Phrase(NamedTuple):
    source: Optional[int]   # 1-based start of the copied occurrence, None if pure literal
    copy_len: int
    literal: Optional[int]  # byte value, None only for a final copy-ending phrase


@dataclass(frozen=True)
class Attractor:
    positions: Tuple[int, ...]  # strictly increasing, 1-based

    @property
    def gamma(self) -> int:
        return len(self.positions)


def check_text(text: bytes) -> None:
    if len(text) == 0:
        raise ValueError("text must be non-empty")
    if 0 in text:
        raise InputContainsZeroByte("text contains reserved byte 0")


def lz77_parse(text: bytes) -> list[Phrase]:
    """Greedy leftmost LZ77 parse with self-overlapping sources."""
    check_text(text)
    n = len(text)
    if n == 1:
        return [Phrase(None, 0, text[0])]

    sa = suffix_array(text)
    isa = inverse_array(sa)
    lcp = lcp_array(text, sa, isa)
    lcp_rmq = SparseTable(lcp, "min")
    sa_rmq = SparseTable(sa, "min")
    sa_l = sa.tolist()
    isa_l = isa.tolist()
    lcp_l = lcp.tolist()

    # For each position i, the best previous factor starts at one of the two
    # nearest suffix-array neighbours among positions < i.  Removing positions
    # in decreasing order records exactly those neighbours.
    nxt = list(range(1, n + 1))
    prv = list(range(-1, n - 1))
    cand_lo = [-1] * n  # rank of the neighbour below, among positions < i
    cand_hi = [n] * n
    for i in range(n - 1, 0, -1):
        r = isa_l[i]
        cand_lo[i] = prv[r]
        cand_hi[i] = nxt[r]
        if prv[r] >= 0:
            nxt[prv[r]] = nxt[r]
        if nxt[r] < n:
            prv[nxt[r]] = prv[r]

    def rank_lcp(ra: int, rb: int) -> int:
        if ra > rb:
            ra, rb = rb, ra
        return lcp_rmq.query(ra + 1, rb)

    def lpf(i: int) -> int:
        best = 0
        r = isa_l[i]
        if cand_lo[i] >= 0:
            best = rank_lcp(cand_lo[i], r)
        if cand_hi[i] < n:
            best = max(best, rank_lcp(cand_hi[i], r))
        return best

    def leftmost_source(i: int, length: int) -> int:
        """Leftmost start (0-based) of an occurrence of text[i..i+length-1]
        beginning before position i."""
        r = isa_l[i]
        # maximal rank interval around r with pairwise lcp >= length
        lo, hi = r, r
        a, b = 0, r
        while a < b:
            mid = (a + b) // 2
            if lcp_rmq.query(mid + 1, r) >= length:
                b = mid
            else:
                a = mid + 1
        lo = a
        a, b = r, n - 1
        while a < b:
            mid = (a + b + 1) // 2
            if lcp_rmq.query(r + 1, mid) >= length:
                a = mid
            else:
                b = mid - 1
        hi = a
        return sa_rmq.query(lo, hi)

    phrases = []
    i = 0
    while i < n:
        length = lpf(i)
        if length == 0:
            phrases.append(Phrase(None, 0, text[i]))
            i += 1
        else:
            src = leftmost_source(i, length)
            if i + length < n:
                phrases.append(Phrase(src + 1, length, text[i + length]))
                i += length + 1
            else:
                phrases.append(Phrase(src + 1, length, None))
                i += length
    return phrases


def decode_lz77(parse: list[Phrase]) -> bytes:
    """Expand a parse back into the text (self-referential copies allowed)."""
    out = bytearray()
    for src, copy_len, literal in parse:
        if copy_len:
            base = src - 1
            for k in range(copy_len):
                out.append(out[base + k])
        if literal is not None:
            out.append(literal)
    return bytes(out)


def attractor_from_lz77(parse: list[Phrase], text: bytes) -> Attractor:
    """One attractor position at the last position of each phrase."""
    positions = []
    end = 0
    for _, copy_len, literal in parse:
        end += copy_len + (1 if literal is not None else 0)
        positions.append(end)
    if end != len(text):
        raise ValueError("parse does not tile the text")
    return Attractor(tuple(positions))


def validate_attractor(text: bytes, candidate: Attractor):
    """Brute-force check of the covering property.

    Returns (True, None) if every substring of ``text`` has an occurrence
    crossing an attractor position, else (False, (i, j)) with a 1-based
    violating interval.  Intended for small texts (a few hundred symbols).
    """
    n = len(text)
    pos = list(candidate.positions)
    if not pos or pos != sorted(set(pos)) or pos[0] < 1 or pos[-1] > n:
        raise ValueError("attractor positions must be strictly increasing within [1..n]")

    # next_attr[i] = smallest attractor position >= i (n+1 when none)
    next_attr = [n + 1] * (n + 2)
    for i in range(n, 0, -1):
        k = bisect_left(pos, i)
        next_attr[i] = pos[k] if k < len(pos) else n + 1

    covered_strings = set()
    for length in range(1, n + 1):
        for i in range(1, n - length + 2):
            j = i + length - 1
            if next_attr[i] <= j:
                continue  # the interval itself crosses an attractor position
            sub = text[i - 1 : j]
            if sub in covered_strings:
                continue
            ok = False
            t = text.find(sub)
            while t != -1:
                if next_attr[t + 1] <= t + length:
                    ok = True
                    break
                t = text.find(sub, t + 1)
            if not ok:
                return False, (i, j)
            covered_strings.add(sub)
    return True, None
