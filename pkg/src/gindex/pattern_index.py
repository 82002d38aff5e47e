"""Pattern location on top of a block tree.

The leaf blocks partition the (padded) text.  An occurrence is *primary*
when a leaf boundary falls strictly inside it (for single symbols: when it
sits exactly on a boundary) and *secondary* otherwise.

Primary occurrences are found by splitting the pattern at each possible
boundary offset k: the reversed prefix P[1..k] is looked up in a trie of
reversed chunks (the text between consecutive boundaries), the suffix
P[k+1..m] in a trie of boundary suffixes, and a wavelet-tree grid reports
every boundary where the two ranges meet.  Because each chunk is finite,
an occurrence is reported only at the first boundary inside it, so no
deduplication is needed.

Secondary occurrences are copies: every non-explicit block records the
source interval its content was copied from, and any occurrence contained
in a source interval spawns one inside the block.  Starting from the
primary occurrences, a sorted source array with a range-maximum structure
over interval endpoints yields each remaining occurrence exactly once.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right

from .errors import EmptyPattern, PatternContainsReservedSymbol
from .fingerprint import KrFunction, PrefixHashes
from .gamma_tree import GammaTree
from .rmq import SparseTable
from .suffixes import inverse_array, lcp_array, suffix_array
from .wavelet import WaveletGrid
from .ztrie import ZTrie, pow2_floor


class PatternIndex:
    def __init__(self, tree, leaf_starts, xtrie, x_start, ytrie, t_of_y,
                 seq, src_j1, src_j2, src_t):
        self.tree: GammaTree = tree
        self.leaf_starts: list[int] = leaf_starts
        self.leaf_set = set(leaf_starts)
        self.w = len(leaf_starts)
        self.xtrie: ZTrie = xtrie
        self.x_start: list[int] = x_start    # x-rank-1 -> boundary position
        self.ytrie: ZTrie = ytrie
        self.t_of_y: list[int] = t_of_y      # y-rank-1 -> boundary position
        self.seq: list[int] = seq            # grid column x holds row seq[x-1]
        self.grid = WaveletGrid(seq)
        self.src_j1: list[int] = src_j1      # source starts, sorted
        self.src_j2: list[int] = src_j2      # matching source ends
        self.src_t: list[int] = src_t        # matching block starts
        self.src_rmq = SparseTable(src_j2, "max") if src_j2 else None

    # ----------------------------------------------------------------- locate

    def locate(self, pattern: bytes) -> list[int]:
        """Sorted 1-based starting positions of every occurrence."""
        if len(pattern) == 0:
            raise EmptyPattern("pattern must be non-empty")
        if 0 in pattern:
            raise PatternContainsReservedSymbol("pattern contains reserved byte 0")
        m = len(pattern)
        if m > self.tree.n:
            return []

        char_cache: dict[int, int] = {}
        tree = self.tree

        def getchar(pos: int) -> int:
            if pos > tree.n:
                return 0
            c = char_cache.get(pos)
            if c is None:
                c = tree.extract_symbol(pos)
                char_cache[pos] = c
            return c

        occs = self._primary(pattern, getchar)
        self._expand(occs, m)
        occs.sort()
        return occs

    # ------------------------------------------------------ primary machinery

    def _pattern_key_fn(self, ph: PrefixHashes, off: int):
        """pkey callback for the pattern piece starting at 1-based position
        off+1 of the hashed string."""
        cache = {}

        def pkey(k):
            got = cache.get(k)
            if got is None:
                p2 = pow2_floor(k)
                got = (k,
                       ph.substring_hash(off + 1, off + p2),
                       ph.substring_hash(off + k - p2 + 1, off + k))
                cache[k] = got
            return got
        return pkey

    def _x_range(self, pattern, php, k, getchar):
        """Verified 1-based X-rank range of boundaries whose suffix starts
        with P[k+1..m], or None."""
        m = len(pattern)
        mlen = m - k
        pkey = self._pattern_key_fn(php, k)
        v = self.xtrie.weak_search(mlen, pkey, lambda i: pattern[k + i - 1])
        if v is None:
            return None
        lo, hi = self.xtrie.element_range(v)
        p = self.x_start[lo - 1]
        # cheap Monte Carlo filter before the deterministic byte check
        got = self.tree.substring_fingerprint(p, p + mlen - 1).hash
        if got != php.substring_hash(k + 1, m):
            return None
        for i in range(mlen):
            if getchar(p + i) != pattern[k + i]:
                return None
        return lo, hi

    def _y_range(self, pattern, phr, k, getchar):
        """Verified 1-based Y-rank range of boundaries whose reversed chunk
        starts with reverse(P[1..k]), or None."""
        m = len(pattern)
        off = m - k
        pkey = self._pattern_key_fn(phr, off)
        v = self.ytrie.weak_search(k, pkey, lambda i: pattern[k - i])
        if v is None:
            return None
        lo, hi = self.ytrie.element_range(v)
        b = self.t_of_y[lo - 1]
        for j in range(1, k + 1):
            if getchar(b - j) != pattern[k - j]:
                return None
        return lo, hi

    def _primary(self, pattern: bytes, getchar) -> list[int]:
        m = len(pattern)
        php = PrefixHashes(self.tree.kr, pattern)
        out = []
        if m == 1:
            xr = self._x_range(pattern, php, 0, getchar)
            if xr is not None:
                out.extend(self.x_start[x - 1] for x in range(xr[0], xr[1] + 1))
            if getchar(1) == pattern[0]:
                out.append(1)
            return out
        phr = PrefixHashes(self.tree.kr, pattern[::-1])
        for k in range(1, m):
            yr = self._y_range(pattern, phr, k, getchar)
            if yr is None:
                continue
            xr = self._x_range(pattern, php, k, getchar)
            if xr is None:
                continue
            for _, y in self.grid.report(xr[0], xr[1], yr[0], yr[1]):
                out.append(self.t_of_y[y - 1] - k)
        return out

    # ---------------------------------------------------- secondary machinery

    def _expand(self, occs: list[int], m: int) -> None:
        """Grow ``occs`` in place with every copy of an already-known
        occurrence, each exactly once."""
        if self.src_rmq is None:
            return
        j1, j2, st = self.src_j1, self.src_j2, self.src_t
        rmq = self.src_rmq
        i = 0
        while i < len(occs):
            s = occs[i]
            e = s + m - 1
            i += 1
            hi = bisect_right(j1, s) - 1
            stack = [(0, hi)]
            while stack:
                a, b = stack.pop()
                if a > b:
                    continue
                idx = rmq.query_index(a, b)
                if j2[idx] < e:
                    continue
                t2 = st[idx] + (s - j1[idx])
                if m > 1 or t2 not in self.leaf_set:
                    occs.append(t2)
                stack.append((a, idx - 1))
                stack.append((idx + 1, b))

    # ------------------------------------------------------------------ stats

    def stats(self) -> dict:
        return {
            "w": self.w,
            "grid_points": len(self.seq),
            "x_nodes": len(self.xtrie.len_),
            "y_nodes": len(self.ytrie.len_),
            "source_entries": len(self.src_j1),
        }


def build_pattern_index(tree: GammaTree, padded: bytes,
                        ph: PrefixHashes) -> PatternIndex:
    """Assemble the location structures from a built tree and the padded
    text it was built from."""
    kr: KrFunction = tree.kr
    n_prime = tree.n_prime
    leaf_starts = tree.leaf_starts()
    bounds = leaf_starts[1:]  # boundaries with a preceding chunk

    # X: boundary suffixes, sorted via the padded suffix array
    psa = suffix_array(padded)
    pisa = inverse_array(psa)
    plcp = lcp_array(padded, psa, pisa)
    lcp_rmq = SparseTable(plcp, "min")
    pisa_l = pisa.tolist()
    x_start = sorted(bounds, key=lambda p: pisa_l[p - 1])
    x_of_boundary = {p: x + 1 for x, p in enumerate(x_start)}
    xlcps = [0] * len(x_start)
    for i in range(1, len(x_start)):
        ra = pisa_l[x_start[i - 1] - 1]
        rb = pisa_l[x_start[i] - 1]
        xlcps[i] = lcp_rmq.query(ra + 1, rb)
    xtrie = ZTrie.build(
        len(x_start),
        lambda e: n_prime - x_start[e] + 1,
        xlcps,
        lambda e, a, b: ph.substring_hash(x_start[e] + a - 1, x_start[e] + b - 1),
        lambda e, i: padded[x_start[e] + i - 2],
    )

    # Y: reversed preceding chunks, sorted as plain strings
    chunks = []
    for i in range(1, len(leaf_starts)):
        a, b = leaf_starts[i - 1], leaf_starts[i]
        chunks.append((padded[a - 1:b - 1][::-1], b))
    chunks.sort(key=lambda t: (t[0], t[1]))
    t_of_y = [b for _, b in chunks]
    ylcps = [0] * len(chunks)
    for i in range(1, len(chunks)):
        a, b = chunks[i - 1][0], chunks[i][0]
        k = 0
        lim = min(len(a), len(b))
        while k < lim and a[k] == b[k]:
            k += 1
        ylcps[i] = k
    yhashes: dict[int, PrefixHashes] = {}

    def y_fp(e, a, b):
        got = yhashes.get(e)
        if got is None:
            got = PrefixHashes(kr, chunks[e][0])
            yhashes[e] = got
        return got.substring_hash(a, b)

    ytrie = ZTrie.build(
        len(chunks),
        lambda e: len(chunks[e][0]),
        ylcps,
        y_fp,
        lambda e, i: chunks[e][0][i - 1],
    )

    # grid: column x (suffix order) holds row y (reversed-chunk order)
    seq = [0] * len(chunks)
    for y, b in enumerate(t_of_y, start=1):
        seq[x_of_boundary[b] - 1] = y

    # source intervals of every non-explicit block, sorted by start
    entries = []
    for lev in tree.levels:
        for i, s in enumerate(lev.starts):
            if lev.marked[i]:
                continue
            jp = lev.starts[lev.ptr1[i]] + lev.delta[i]
            entries.append((jp, jp + lev.b - 1, s))
    entries.sort()
    src_j1 = [e[0] for e in entries]
    src_j2 = [e[1] for e in entries]
    src_t = [e[2] for e in entries]

    return PatternIndex(tree, leaf_starts, xtrie, x_start, ytrie, t_of_y,
                        seq, src_j1, src_j2, src_t)
