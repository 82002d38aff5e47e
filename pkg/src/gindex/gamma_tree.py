"""Level-halving block tree over a text and a string attractor.

The text is padded with the reserved byte 0 up to n' = t0 * b0 (b0 a power
of two), position n' joins the attractor, and the top level is split into
t0 blocks of length b0.  Each level halves the block length down to single
symbols.  Blocks within distance < b_l of an attractor position are marked
and recursed; every other block stores a pointer to an occurrence of its
content that crosses an attractor position and therefore overlaps only
marked blocks.

Stored fingerprints (top-level prefixes, per-block contents, and the part
of each pointer's occurrence inside its first target block) allow the
fingerprint of any text substring to be assembled in O(levels) time.
"""

from __future__ import annotations

from bisect import bisect_left
from typing import Optional

from .attractor import Attractor, check_text
from .errors import AttractorInvalid, FingerprintCollision, PositionOutOfRange
from .fingerprint import (
    ExtendedFingerprint,
    KrFunction,
    PrefixHashes,
    concat,
    split_left,
    split_right,
)


def plan_layout(n: int, gamma: int):
    """Block length, top-level block count, and padded length for a text.

    The padded length is (gamma + 1) * b0: one top-level block per original
    attractor position plus one for the sentinel/padding region, so the
    block forest always has exactly as many roots as effective attractor
    positions.
    """
    per_block = max(2, -(-(n + 1) // gamma))
    b0 = 1 << (per_block - 1).bit_length()
    t0 = gamma + 1
    return b0, t0, t0 * b0


class _Level:
    __slots__ = (
        "b", "starts", "marked", "mrank", "index_of",
        "ptr1", "ptr2", "delta", "src_fp", "block_fp", "symbol",
    )

    def __init__(self, b: int, starts: list[int]):
        self.b = b
        self.starts = starts
        self.index_of = {s: i for i, s in enumerate(starts)}
        m = len(starts)
        self.marked = [False] * m
        self.mrank: list[int] = []
        self.ptr1: list[Optional[int]] = [None] * m
        self.ptr2: list[Optional[int]] = [None] * m
        self.delta: list[Optional[int]] = [None] * m
        self.src_fp: list[Optional[ExtendedFingerprint]] = [None] * m
        self.block_fp: list[Optional[ExtendedFingerprint]] = [None] * m
        self.symbol: list[Optional[int]] = [None] * m

    def finish_marks(self):
        acc = 0
        self.mrank = [0] * len(self.starts)
        for i, m in enumerate(self.marked):
            self.mrank[i] = acc
            if m:
                acc += 1


class GammaTree:
    def __init__(self, kr, n, n_prime, b0, t0, eff_attractor, levels, level0_prefix_fps):
        self.kr: KrFunction = kr
        self.n = n
        self.n_prime = n_prime
        self.b0 = b0
        self.t0 = t0
        self.eff_attractor: list[int] = eff_attractor
        self.levels: list[_Level] = levels
        self.level0_prefix_fps: list[ExtendedFingerprint] = level0_prefix_fps

    @property
    def gamma_eff(self) -> int:
        return len(self.eff_attractor)

    @property
    def depth(self) -> int:
        """Number of halving steps: levels run 0..depth with b_depth = 1."""
        return len(self.levels) - 1

    # ------------------------------------------------------------------ leaves

    def leaves(self):
        """(level, block index, start, length) of every leaf, in text order."""
        out = []
        last = self.depth
        for l, lev in enumerate(self.levels):
            for i, s in enumerate(lev.starts):
                if not lev.marked[i] or l == last:
                    out.append((l, i, s, lev.b))
        out.sort(key=lambda t: t[2])
        return out

    def leaf_starts(self) -> list[int]:
        return [s for _, _, s, _ in self.leaves()]

    # -------------------------------------------------------------- extraction

    def extract_symbol(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise PositionOutOfRange(f"position {i} not in [1..{self.n}]")
        l = 0
        bi, off = (i - 1) // self.b0, (i - 1) % self.b0 + 1
        while True:
            lev = self.levels[l]
            if lev.marked[bi]:
                if lev.b == 1:
                    return lev.symbol[bi]
                half = lev.b // 2
                child = 2 * lev.mrank[bi]
                if off > half:
                    child += 1
                    off -= half
                bi = child
                l += 1
            else:
                off += lev.delta[bi]
                if off <= lev.b:
                    bi = lev.ptr1[bi]
                else:
                    bi = lev.ptr2[bi]
                    off -= lev.b

    def extract(self, i: int, length: int) -> bytes:
        if length < 0:
            raise PositionOutOfRange("negative length")
        if length == 0:
            if not 1 <= i <= self.n + 1:
                raise PositionOutOfRange(f"position {i} not in [1..{self.n + 1}]")
            return b""
        if not (1 <= i and i + length - 1 <= self.n):
            raise PositionOutOfRange(
                f"range [{i}..{i + length - 1}] not in [1..{self.n}]")
        return bytes(self.extract_symbol(p) for p in range(i, i + length))

    # ----------------------------------------------------------- fingerprints

    def _block_prefix_fp(self, l: int, bi: int, k: int) -> ExtendedFingerprint:
        """Fingerprint of the first k symbols of an explicit block."""
        kr = self.kr
        lev = self.levels[l]
        if k == 0:
            return kr.empty
        if k == lev.b:
            return lev.block_fp[bi]
        if lev.marked[bi]:
            half = lev.b // 2
            child = 2 * lev.mrank[bi]
            if k <= half:
                return self._block_prefix_fp(l + 1, child, k)
            left_fp = self.levels[l + 1].block_fp[child]
            return concat(kr, left_fp, self._block_prefix_fp(l + 1, child + 1, k - half))
        # unmarked: content = ptr1.str[delta+1..b] + ptr2.str[1..delta]
        src_len = lev.b - lev.delta[bi]
        if k == src_len:
            return lev.src_fp[bi]
        if k > src_len:
            return concat(kr, lev.src_fp[bi],
                          self._block_prefix_fp(l, lev.ptr2[bi], k - src_len))
        # prefix lies strictly inside the ptr1 part
        p1 = lev.ptr1[bi]
        pre = self._block_prefix_fp(l, p1, lev.delta[bi] + k)
        tail = split_right(kr, lev.block_fp[p1], pre)
        return split_left(kr, lev.src_fp[bi], tail)

    def prefix_fingerprint(self, j: int) -> ExtendedFingerprint:
        """Fingerprint of the padded text's prefix of length j."""
        if not 0 <= j <= self.n_prime:
            raise PositionOutOfRange(f"prefix length {j} not in [0..{self.n_prime}]")
        whole, rem = divmod(j, self.b0)
        fp = self.level0_prefix_fps[whole - 1] if whole else self.kr.empty
        if rem:
            fp = concat(self.kr, fp, self._block_prefix_fp(0, whole, rem))
        return fp

    def substring_fingerprint(self, i: int, j: int) -> ExtendedFingerprint:
        """Fingerprint of padded_text[i..j], 1-based inclusive; empty if i > j."""
        if not (1 <= i <= j + 1 and j <= self.n_prime):
            raise PositionOutOfRange(f"range [{i}..{j}] not in [1..{self.n_prime}]")
        if i > j:
            return self.kr.empty
        return split_right(self.kr, self.prefix_fingerprint(j),
                           self.prefix_fingerprint(i - 1))

    # ------------------------------------------------------------------- stats

    def stats(self) -> dict:
        last = self.depth
        marked_per_level = [sum(lev.marked) for lev in self.levels]
        explicit = sum(len(lev.starts) for lev in self.levels)
        unmarked = explicit - sum(marked_per_level)
        w = unmarked + marked_per_level[last]
        return {
            "n": self.n,
            "n_prime": self.n_prime,
            "gamma_eff": self.gamma_eff,
            "b0": self.b0,
            "t0": self.t0,
            "levels": len(self.levels),
            "w": w,
            "marked_count": sum(marked_per_level),
            "marked_per_level": marked_per_level,
            "explicit_count": explicit,
            "unmarked_count": unmarked,
            "stored_fp_count": self.t0 + explicit + unmarked,
        }


def build_gamma_tree(text: bytes, attractor: Attractor, kr: KrFunction,
                     verify_sources: bool = True,
                     prefix_hashes: Optional[PrefixHashes] = None) -> GammaTree:
    """Build the tree; with verify_sources every pointer target is compared
    byte-for-byte before being accepted (Las Vegas), otherwise fingerprint
    equality is trusted (Monte Carlo, correct w.h.p.).  ``prefix_hashes``
    may pass in precomputed hashes of the padded text."""
    check_text(text)
    n = len(text)
    pos = list(attractor.positions)
    if not pos or pos != sorted(set(pos)) or pos[0] < 1 or pos[-1] > n:
        raise AttractorInvalid("attractor positions must be strictly increasing within [1..n]")

    b0, t0, n_prime = plan_layout(n, len(pos))
    padded = text + b"\x00" * (n_prime - n)
    eff = pos + [n_prime]
    ph = prefix_hashes
    if ph is None or ph.f != kr or ph.n != n_prime:
        ph = PrefixHashes(kr, padded)

    levels: list[_Level] = []
    b = b0
    starts = [1 + k * b0 for k in range(t0)]
    while True:
        lev = _Level(b, starts)
        unmarked_by_fp: dict[int, list[int]] = {}
        pending = 0
        for i, s in enumerate(starts):
            lev.block_fp[i] = ph.substring(s, s + b - 1)
            k = bisect_left(eff, s - b + 1)
            if k < len(eff) and eff[k] <= s + 2 * b - 2:
                lev.marked[i] = True
                if b == 1:
                    lev.symbol[i] = padded[s - 1]
            else:
                unmarked_by_fp.setdefault(lev.block_fp[i].hash, []).append(i)
                pending += 1
        lev.finish_marks()

        # scan windows of length b around each attractor position, in order,
        # so every block gets the leftmost matching window around the
        # smallest qualifying attractor position
        source_of: dict[int, int] = {}
        if pending:
            for j in eff:
                lo = max(1, j - b + 1)
                hi = min(j, n_prime - b + 1)
                for jp in range(lo, hi + 1):
                    h = ph.substring_hash(jp, jp + b - 1)
                    cands = unmarked_by_fp.get(h)
                    if not cands:
                        continue
                    remaining = []
                    for bi in cands:
                        if bi in source_of:
                            continue
                        s = starts[bi]
                        if verify_sources and padded[jp - 1: jp - 1 + b] != padded[s - 1: s - 1 + b]:
                            remaining.append(bi)
                            continue
                        source_of[bi] = jp
                        pending -= 1
                    if remaining:
                        unmarked_by_fp[h] = remaining
                    else:
                        del unmarked_by_fp[h]
                if not pending:
                    break
        if pending:
            bi = next(i for ids in unmarked_by_fp.values() for i in ids if i not in source_of)
            raise AttractorInvalid(
                "no attractor-crossing occurrence found for a block; the "
                "candidate attractor violates the covering property (or a "
                "fingerprint collision occurred in Monte Carlo mode)",
                level=len(levels), block_start=starts[bi], block_len=b)

        for bi, jp in source_of.items():
            tstart = 1 + (jp - 1) // b * b
            delta = jp - tstart
            i1 = lev.index_of.get(tstart)
            i2 = lev.index_of.get(tstart + b) if delta > 0 else None
            if i1 is None or not lev.marked[i1] or (delta > 0 and (i2 is None or not lev.marked[i2])):
                raise FingerprintCollision(
                    "source window does not map onto explicit marked blocks; "
                    "a fingerprint collision slipped past the window scan")
            lev.ptr1[bi] = i1
            lev.ptr2[bi] = i2
            lev.delta[bi] = delta
            lev.src_fp[bi] = ph.substring(jp, tstart + b - 1)

        levels.append(lev)
        if b == 1:
            break
        half = b // 2
        starts = []
        for i, s in enumerate(lev.starts):
            if lev.marked[i]:
                starts.extend((s, s + half))
        b = half

    level0_prefix_fps = [ph.substring(1, i * b0) for i in range(1, t0 + 1)]
    return GammaTree(kr, n, n_prime, b0, t0, eff, levels, level0_prefix_fps)
