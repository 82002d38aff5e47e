"""Extended Karp-Rabin fingerprints over Z_q.

A fingerprint function is a pair (q, r) with q prime and r uniform in
[1..q-1].  The hash of a string s is sum(s[n-i] * r**i) mod q.  The
*extended* fingerprint carries r**len and r**(-len) alongside the hash so
that fingerprints of adjacent substrings can be concatenated and split in
constant time.
"""

from __future__ import annotations

import random
from typing import NamedTuple, Sequence

# Mersenne prime; large enough that collisions among substrings of any
# desk-scale text are vanishingly unlikely, and products of two residues
# stay well inside Python's fast int range.
DEFAULT_PRIME = (1 << 61) - 1

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _next_prime(n: int) -> int:
    n += 1
    while not _is_prime(n):
        n += 1
    return n


class ExtendedFingerprint(NamedTuple):
    hash: int
    r_pow: int      # r**len mod q
    r_pow_inv: int  # r**(-len) mod q


class KrFunction:
    """An instantiated Karp-Rabin fingerprint function."""

    __slots__ = ("q", "r", "r_inv")

    def __init__(self, q: int, r: int):
        # q > 255 is required for real use; tiny primes are allowed so tests
        # can force collisions and exercise the Las Vegas resampling path.
        if not _is_prime(q):
            raise ValueError("modulus must be prime")
        if not 1 <= r <= q - 1:
            raise ValueError("base must lie in [1..q-1]")
        self.q = q
        self.r = r
        self.r_inv = pow(r, -1, q)

    def __eq__(self, other):
        return isinstance(other, KrFunction) and (self.q, self.r) == (other.q, other.r)

    def __repr__(self):
        return f"KrFunction(q={self.q}, r={self.r})"

    @property
    def empty(self) -> ExtendedFingerprint:
        return ExtendedFingerprint(0, 1, 1)

    def triple(self, hash_value: int, length: int) -> ExtendedFingerprint:
        """Reconstruct the extended triple from a bare hash and a known length."""
        rp = pow(self.r, length, self.q)
        return ExtendedFingerprint(hash_value, rp, pow(rp, -1, self.q) if rp != 1 else 1)


EMPTY = ExtendedFingerprint(0, 1, 1)


def new_function(security_exponent: int, seed, text_len: int = 1 << 15) -> KrFunction:
    """Pick a fingerprint function for a text of length ``text_len``.

    The modulus is the first prime at or above text_len**(c+2), capped at a
    fixed Mersenne prime near 2**61 so every residue fits one machine word.
    The base r is uniform in [1..q-1], deterministic given the seed.
    """
    if security_exponent < 1:
        raise ValueError("security exponent must be >= 1")
    target = max(257, text_len) ** (security_exponent + 2)
    q = DEFAULT_PRIME if target >= DEFAULT_PRIME else _next_prime(max(256, target))
    r = random.Random(seed).randrange(1, q)
    return KrFunction(q, r)


def of_string(f: KrFunction, s: Sequence[int]) -> ExtendedFingerprint:
    """Fingerprint of a symbol sequence by direct polynomial evaluation."""
    q, r = f.q, f.r
    h = 0
    for c in s:
        h = (h * r + c) % q
    rp = pow(r, len(s), q)
    return ExtendedFingerprint(h, rp, pow(f.r_inv, len(s), q))


def concat(f: KrFunction, u: ExtendedFingerprint, v: ExtendedFingerprint) -> ExtendedFingerprint:
    """Fingerprint of UV from the fingerprints of U and V."""
    q = f.q
    return ExtendedFingerprint(
        (u.hash * v.r_pow + v.hash) % q,
        u.r_pow * v.r_pow % q,
        u.r_pow_inv * v.r_pow_inv % q,
    )


def split_right(f: KrFunction, uv: ExtendedFingerprint, u: ExtendedFingerprint) -> ExtendedFingerprint:
    """Fingerprint of V given the fingerprints of UV and U."""
    q = f.q
    rp = uv.r_pow * u.r_pow_inv % q
    return ExtendedFingerprint(
        (uv.hash - u.hash * rp) % q,
        rp,
        uv.r_pow_inv * u.r_pow % q,
    )


def split_left(f: KrFunction, uv: ExtendedFingerprint, v: ExtendedFingerprint) -> ExtendedFingerprint:
    """Fingerprint of U given the fingerprints of UV and V."""
    q = f.q
    return ExtendedFingerprint(
        (uv.hash - v.hash) * v.r_pow_inv % q,
        uv.r_pow * v.r_pow_inv % q,
        uv.r_pow_inv * v.r_pow % q,
    )


class PrefixHashes:
    """Hashes of all prefixes of a fixed string; O(1) fingerprint of any substring."""

    __slots__ = ("f", "h", "pw", "ipw", "n")

    def __init__(self, f: KrFunction, s: Sequence[int]):
        q, r = f.q, f.r
        n = len(s)
        h = [0] * (n + 1)
        pw = [1] * (n + 1)
        ipw = [1] * (n + 1)
        acc = 0
        for i, c in enumerate(s):
            acc = (acc * r + c) % q
            h[i + 1] = acc
        for i in range(1, n + 1):
            pw[i] = pw[i - 1] * r % q
        ri = f.r_inv
        for i in range(1, n + 1):
            ipw[i] = ipw[i - 1] * ri % q
        self.f = f
        self.h = h
        self.pw = pw
        self.ipw = ipw
        self.n = n

    def substring_hash(self, i: int, j: int) -> int:
        """Bare hash of s[i..j], 1-based inclusive; empty when i > j."""
        if i > j:
            return 0
        return (self.h[j] - self.h[i - 1] * self.pw[j - i + 1]) % self.f.q

    def substring(self, i: int, j: int) -> ExtendedFingerprint:
        """Extended fingerprint of s[i..j], 1-based inclusive."""
        if i > j:
            return EMPTY
        length = j - i + 1
        return ExtendedFingerprint(self.substring_hash(i, j), self.pw[length], self.ipw[length])


def verify_pow2_collision_free(f: KrFunction, text: bytes) -> bool:
    """Check that no two distinct equal-length substrings of ``text`` whose
    length is a power of two share a hash.

    Works by length doubling: positions get canonical class ids per length,
    so colliding hash groups are checked in O(1) per position instead of by
    byte comparison.
    """
    n = len(text)
    if n == 0:
        return True
    q, r = f.q, f.r
    ids = list(text)
    hashes = [c % q for c in text]

    def clash(h_arr, id_arr):
        by_hash = {}
        for h, cid in zip(h_arr, id_arr):
            prev = by_hash.setdefault(h, cid)
            if prev != cid:
                return True
        return False

    if clash(hashes, ids):
        return False
    length = 1
    while 2 * length <= n:
        mult = pow(r, length, q)
        m = n - 2 * length + 1
        new_h = [(hashes[i] * mult + hashes[i + length]) % q for i in range(m)]
        pair_ids = {}
        new_ids = [0] * m
        for i in range(m):
            key = (ids[i], ids[i + length])
            new_ids[i] = pair_ids.setdefault(key, len(pair_ids))
        if clash(new_h, new_ids):
            return False
        hashes, ids = new_h, new_ids
        length *= 2
    return True
