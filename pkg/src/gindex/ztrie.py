"""Compact trie over a sorted multiset of strings with fingerprint-keyed
navigation (weak prefix search).

Each node stores the two-fattest number k in (|parent|, |node|], hashes of
the power-of-two prefix/suffix of its length-k prefix (the navigation
handle), the same pair for its full string, its exit character, and the
contiguous range of elements below it.  Fat binary search over the handles
finds the locus of a pattern prefix in O(log m) hash probes; the result is
only trustworthy when the pattern actually prefixes a stored string, so
callers must verify it.
"""

from __future__ import annotations

from .errors import FingerprintCollision
from .rmq import SparseTable


def two_fattest(a: int, b: int) -> int:
    """The number in (a..b] whose binary representation has the most
    trailing zeros (0 <= a < b)."""
    i = (a ^ b).bit_length() - 1
    return b & ~((1 << i) - 1)


def pow2_floor(k: int) -> int:
    return 1 << (k.bit_length() - 1)


class ZTrie:
    __slots__ = ("num_elements", "len_", "parent", "lo", "hi", "kfat",
                 "h_pre", "h_suf", "f_pre", "f_suf", "exit_char", "rep",
                 "children", "navmap")

    def __init__(self):
        self.num_elements = 0
        self.len_: list[int] = []
        self.parent: list[int] = []
        self.lo: list[int] = []
        self.hi: list[int] = []
        self.kfat: list[int] = []
        self.h_pre: list[int] = []
        self.h_suf: list[int] = []
        self.f_pre: list[int] = []
        self.f_suf: list[int] = []
        self.exit_char: list[int] = []
        self.rep: list[int] = []
        self.children: list[dict[int, int]] = []
        self.navmap: dict[tuple[int, int, int], int] = {}

    # ------------------------------------------------------------------ build

    @classmethod
    def build(cls, num, elem_len, lcps, elem_fp, elem_char) -> "ZTrie":
        """Build from ``num`` sorted elements.

        elem_len(e) -> length; lcps[i] = lcp(element i-1, element i);
        elem_fp(e, a, b) -> hash of element e's substring [a..b] (1-based);
        elem_char(e, i) -> element e's i-th symbol.
        """
        t = cls()
        t.num_elements = num
        if num == 0:
            raise ValueError("cannot build a trie over zero elements")
        rmq = SparseTable(lcps, "min") if num > 1 else None

        def min_lcp(a, b):  # over lcps[a..b]
            return rmq.query(a, b)

        def boundaries(a, b, val):
            out = []
            stack = [(a, b)]
            while stack:
                x, y = stack.pop()
                if x > y:
                    continue
                i = rmq.query_index(x, y)
                if lcps[i] > val:
                    continue
                out.append(i)
                stack.append((x, i - 1))
                stack.append((i + 1, y))
            out.sort()
            return out

        def new_node(length, lo, hi, parent):
            idx = len(t.len_)
            t.len_.append(length)
            t.parent.append(parent)
            t.lo.append(lo)
            t.hi.append(hi)
            t.kfat.append(0)
            t.h_pre.append(0)
            t.h_suf.append(0)
            t.f_pre.append(0)
            t.f_suf.append(0)
            t.exit_char.append(0)
            t.rep.append(lo)
            t.children.append({})
            return idx

        root = new_node(0, 0, num - 1, -1)
        # (lo, hi, parent) ranges still to be attached below ``parent``
        work = [(0, num - 1, root)]
        while work:
            lo, hi, parent = work.pop()
            length = elem_len(lo) if lo == hi else min_lcp(lo + 1, hi)
            plen = t.len_[parent]
            if lo == hi and length == plen:
                continue  # element equals the parent's string; covered by its range
            if length == plen:
                # only possible at the root: partition without a new node
                v = parent
            else:
                v = new_node(length, lo, hi, parent)
                c = elem_char(lo, plen + 1)
                t.exit_char[v] = c
                t.children[parent][c] = v
                if lo == hi:
                    continue
            cuts = boundaries(lo + 1, hi, length)
            prev = lo
            for i in cuts:
                work.append((prev, i - 1, v))
                prev = i
            work.append((prev, hi, v))

        for v in range(1, len(t.len_)):
            p = t.parent[v]
            k = two_fattest(t.len_[p], t.len_[v])
            t.kfat[v] = k
            e = t.rep[v]
            p2 = pow2_floor(k)
            t.h_pre[v] = elem_fp(e, 1, p2)
            t.h_suf[v] = elem_fp(e, k - p2 + 1, k)
            fl = t.len_[v]
            p2 = pow2_floor(fl)
            t.f_pre[v] = elem_fp(e, 1, p2)
            t.f_suf[v] = elem_fp(e, fl - p2 + 1, fl)
            key = (k, t.h_pre[v], t.h_suf[v])
            other = t.navmap.setdefault(key, v)
            if other != v:
                raise FingerprintCollision(
                    "two distinct trie handles share a fingerprint key")
        return t

    @classmethod
    def from_arrays(cls, num_elements, len_, parent, lo, hi, kfat,
                    h_pre, h_suf, f_pre, f_suf, exit_char) -> "ZTrie":
        """Rebuild a trie from its node arrays (children and the navigation
        map are derived, not stored)."""
        t = cls()
        t.num_elements = num_elements
        t.len_ = list(len_)
        t.parent = list(parent)
        t.lo = list(lo)
        t.hi = list(hi)
        t.kfat = list(kfat)
        t.h_pre = list(h_pre)
        t.h_suf = list(h_suf)
        t.f_pre = list(f_pre)
        t.f_suf = list(f_suf)
        t.exit_char = list(exit_char)
        t.rep = list(lo)
        t.children = [{} for _ in t.len_]
        for v in range(1, len(t.len_)):
            t.children[t.parent[v]][t.exit_char[v]] = v
            key = (t.kfat[v], t.h_pre[v], t.h_suf[v])
            if t.navmap.setdefault(key, v) != v:
                raise FingerprintCollision(
                    "two distinct trie handles share a fingerprint key")
        return t

    # ----------------------------------------------------------------- search

    def full_fp_matches(self, v: int, pkey) -> bool:
        """Does the pattern prefix of length len(v) hash like v's string?"""
        length = self.len_[v]
        if length == 0:
            return True
        _, hp, hs = pkey(length)
        return hp == self.f_pre[v] and hs == self.f_suf[v]

    def weak_search(self, m: int, pkey, pchar):
        """Locus candidate for a pattern of length m.

        pkey(k) -> (k, hash of pow2 prefix, hash of pow2 suffix) of the
        pattern's length-k prefix; pchar(i) -> i-th pattern symbol.
        Returns a node index whose element range equals the range of
        elements prefixed by the pattern whenever the pattern prefixes some
        element; None or an arbitrary node otherwise (caller verifies).
        """
        a, b, v = 0, m, 0
        while a < b:
            f = two_fattest(a, b)
            u = self.navmap.get(pkey(f))
            if u is None:
                b = f - 1
            else:
                v = u
                a = min(self.len_[u], m)
        if v != 0:
            p = self.parent[v]
            ok = (self.len_[p] < m
                  and self.full_fp_matches(p, pkey)
                  and self.exit_char[v] == pchar(self.len_[p] + 1))
            if not ok:
                v = p
        while self.len_[v] < m:
            v = self.children[v].get(pchar(self.len_[v] + 1))
            if v is None:
                return None
        return v

    def element_range(self, v: int) -> tuple[int, int]:
        """1-based inclusive range of elements below node v."""
        return self.lo[v] + 1, self.hi[v] + 1
