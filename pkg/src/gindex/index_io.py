"""Binary serialization of a built index.

Layout: a fixed header, a sequence of length-prefixed sections in fixed
order, and a trailing 8-byte BLAKE2b checksum over everything before it.
All integers are little-endian; fingerprints are stored as bare hashes and
re-extended from their known lengths on load, so a rebuilt index is
byte-identical when saved again.
"""

from __future__ import annotations

import hashlib
import struct

from .attractor import Attractor
from .errors import ChecksumMismatch, VersionMismatch
from .fingerprint import ExtendedFingerprint, KrFunction
from .gamma_tree import GammaTree, _Level
from .index import SelfIndex
from .pattern_index import PatternIndex
from .ztrie import ZTrie

MAGIC = b"GIDX"
VERSION = 1
_NONE = 0xFFFFFFFFFFFFFFFF


def _u64s(values) -> bytes:
    values = list(values)
    return struct.pack(f"<{len(values)}Q", *values)


class _Writer:
    def __init__(self):
        self.buf = bytearray()

    def u32(self, v):
        self.buf += struct.pack("<I", v)

    def u64(self, v):
        self.buf += struct.pack("<Q", v)

    def section(self, payload: bytes):
        self.u64(len(payload))
        self.buf += payload


class _Reader:
    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def take(self, k) -> bytes:
        if self.pos + k > len(self.data):
            raise ChecksumMismatch("truncated index file")
        out = self.data[self.pos:self.pos + k]
        self.pos += k
        return out

    def u32(self) -> int:
        return struct.unpack("<I", self.take(4))[0]

    def u64(self) -> int:
        return struct.unpack("<Q", self.take(8))[0]

    def section(self) -> "_Reader":
        return _Reader(self.take(self.u64()))

    def u64s(self) -> list[int]:
        rest = len(self.data) - self.pos
        return list(struct.unpack(f"<{rest // 8}Q", self.take(rest - rest % 8)))

    def u64_array(self, count) -> list[int]:
        return list(struct.unpack(f"<{count}Q", self.take(8 * count)))


def _trie_payload(t: ZTrie) -> bytes:
    w = _Writer()
    num = len(t.len_)
    w.u64(t.num_elements)
    w.u64(num)
    for arr in (t.len_, t.lo, t.hi, t.kfat, t.h_pre, t.h_suf, t.f_pre, t.f_suf):
        w.buf += _u64s(arr)
    w.buf += _u64s(p if p >= 0 else _NONE for p in t.parent)
    w.buf += bytes(t.exit_char)
    return bytes(w.buf)


def _read_trie(r: _Reader) -> ZTrie:
    num_elements = r.u64()
    num = r.u64()
    arrays = [r.u64_array(num) for _ in range(9)]
    len_, lo, hi, kfat, h_pre, h_suf, f_pre, f_suf, parent = arrays
    parent = [p if p != _NONE else -1 for p in parent]
    exit_char = list(r.take(num))
    return ZTrie.from_arrays(num_elements, len_, parent, lo, hi, kfat,
                             h_pre, h_suf, f_pre, f_suf, exit_char)


def save_index(idx: SelfIndex) -> bytes:
    tree = idx.tree
    pidx = idx.pidx
    w = _Writer()
    w.buf += MAGIC
    w.u32(VERSION)
    w.u32(1 if idx.verified else 0)
    w.u32(idx.security)
    w.u32(idx.build_attempts)
    for v in (idx.kr.q, idx.kr.r, tree.n, tree.n_prime, tree.b0, tree.t0):
        w.u64(v)
    w.u32(len(tree.levels))
    w.u64(idx.attractor.gamma)
    w.u64(pidx.w)

    w.section(_u64s(idx.attractor.positions))

    for lev in tree.levels:
        s = _Writer()
        s.u64(lev.b)
        s.u64(len(lev.starts))
        s.buf += bytes(1 if m else 0 for m in lev.marked)
        s.buf += _u64s(fp.hash for fp in lev.block_fp)
        for i in range(len(lev.starts)):
            if lev.marked[i]:
                continue
            s.u64(lev.ptr1[i])
            s.u64(lev.ptr2[i] if lev.ptr2[i] is not None else _NONE)
            s.u64(lev.delta[i])
            s.u64(lev.src_fp[i].hash)
        if lev.b == 1:
            s.buf += bytes(lev.symbol[i] or 0 for i in range(len(lev.starts)))
        w.section(bytes(s.buf))
    w.section(_u64s(fp.hash for fp in tree.level0_prefix_fps))

    w.section(_u64s(pidx.x_start))
    w.section(_u64s(pidx.t_of_y))
    w.section(_u64s(pidx.seq))
    src = _Writer()
    src.u64(len(pidx.src_j1))
    for arr in (pidx.src_j1, pidx.src_j2, pidx.src_t):
        src.buf += _u64s(arr)
    w.section(bytes(src.buf))
    w.section(_trie_payload(pidx.xtrie))
    w.section(_trie_payload(pidx.ytrie))

    digest = hashlib.blake2b(bytes(w.buf), digest_size=8).digest()
    return bytes(w.buf) + digest


def load_index(data: bytes) -> SelfIndex:
    if len(data) < 12:
        raise ChecksumMismatch("file too short to be an index")
    body, digest = data[:-8], data[-8:]
    if hashlib.blake2b(body, digest_size=8).digest() != digest:
        raise ChecksumMismatch("index file checksum does not match")
    r = _Reader(body)
    if r.take(4) != MAGIC:
        raise VersionMismatch("not an index file (bad magic)")
    version = r.u32()
    if version != VERSION:
        raise VersionMismatch(f"unsupported index format version {version}")
    verified = bool(r.u32())
    security = r.u32()
    attempts = r.u32()
    q, base, n, n_prime, b0, t0 = (r.u64() for _ in range(6))
    num_levels = r.u32()
    gamma = r.u64()
    w_count = r.u64()
    kr = KrFunction(q, base)

    fp_cache: dict[int, tuple[int, int]] = {}

    def fp_of(hash_value, length) -> ExtendedFingerprint:
        got = fp_cache.get(length)
        if got is None:
            rp = pow(base, length, q)
            got = (rp, pow(rp, -1, q))
            fp_cache[length] = got
        return ExtendedFingerprint(hash_value, got[0], got[1])

    attractor = Attractor(tuple(r.section().u64s()))
    if attractor.gamma != gamma:
        raise ChecksumMismatch("attractor section size disagrees with header")

    levels = []
    starts = [1 + k * b0 for k in range(t0)]
    for _ in range(num_levels):
        s = r.section()
        b = s.u64()
        count = s.u64()
        if count != len(starts):
            raise ChecksumMismatch("level block count disagrees with structure")
        lev = _Level(b, starts)
        lev.marked = [bool(x) for x in s.take(count)]
        hashes = s.u64_array(count)
        for i in range(count):
            lev.block_fp[i] = fp_of(hashes[i], b)
            if not lev.marked[i]:
                lev.ptr1[i] = s.u64()
                p2 = s.u64()
                lev.ptr2[i] = None if p2 == _NONE else p2
                lev.delta[i] = s.u64()
                lev.src_fp[i] = fp_of(s.u64(), b - lev.delta[i])
        if b == 1:
            syms = s.take(count)
            for i in range(count):
                if lev.marked[i]:
                    lev.symbol[i] = syms[i]
        lev.finish_marks()
        levels.append(lev)
        half = b // 2
        starts = [x for i, st in enumerate(lev.starts) if lev.marked[i]
                  for x in (st, st + half)]
    prefix_hashes = r.section().u64s()
    level0_prefix_fps = [fp_of(h, (i + 1) * b0)
                         for i, h in enumerate(prefix_hashes)]
    eff = list(attractor.positions) + [n_prime]
    tree = GammaTree(kr, n, n_prime, b0, t0, eff, levels, level0_prefix_fps)

    x_start = r.section().u64s()
    t_of_y = r.section().u64s()
    seq = r.section().u64s()
    src = r.section()
    src_count = src.u64()
    src_j1 = src.u64_array(src_count)
    src_j2 = src.u64_array(src_count)
    src_t = src.u64_array(src_count)
    xtrie = _read_trie(r.section())
    ytrie = _read_trie(r.section())

    leaf_starts = tree.leaf_starts()
    if len(leaf_starts) != w_count or len(x_start) != w_count - 1:
        raise ChecksumMismatch("leaf partition disagrees with header")
    pidx = PatternIndex(tree, leaf_starts, xtrie, x_start, ytrie, t_of_y,
                        seq, src_j1, src_j2, src_t)
    return SelfIndex(kr, attractor, tree, pidx, security, verified, attempts)


def save_index_file(idx: SelfIndex, path) -> int:
    data = save_index(idx)
    with open(path, "wb") as fh:
        fh.write(data)
    return len(data)


def load_index_file(path) -> SelfIndex:
    with open(path, "rb") as fh:
        return load_index(fh.read())
