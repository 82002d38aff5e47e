"""Deterministic benchmark corpora: repetitive word families, random
texts, and near-duplicate document collections."""

from __future__ import annotations

import random

from .errors import BadParameters


def fibonacci_word(order: int) -> bytes:
    """Fibonacci word over {a,b}: order 1 -> "a", order 2 -> "ab", each
    later word the previous one followed by the one before it."""
    if order < 1:
        raise BadParameters("fibonacci order must be >= 1")
    if order == 1:
        return b"a"
    prev, cur = b"a", b"ab"
    for _ in range(order - 2):
        prev, cur = cur, cur + prev
    return cur


def thue_morse(order: int) -> bytes:
    """Thue-Morse word over {a,b} of length 2**order."""
    if order < 0:
        raise BadParameters("thue-morse order must be >= 0")
    w = bytearray(b"a")
    swap = bytes.maketrans(b"ab", b"ba")
    for _ in range(order):
        w += w.translate(swap)
    return bytes(w)


def random_text(length: int, sigma: int, seed) -> bytes:
    """Uniform random text of the given length over the first ``sigma``
    lowercase letters."""
    if length < 1 or not 2 <= sigma <= 26:
        raise BadParameters("need length >= 1 and alphabet size in [2..26]")
    rng = random.Random(seed)
    return bytes(rng.randrange(97, 97 + sigma) for _ in range(length))


def mutated_copies(copies: int, copy_len: int, rate: float, seed,
                   sigma: int = 4) -> bytes:
    """A random seed document followed by near-identical copies.

    Each copy independently replaces every position with probability
    ``rate`` by a uniformly random different symbol.  Total length is
    copies * copy_len.
    """
    if copies < 1 or copy_len < 1 or not 0 <= rate <= 1 or not 2 <= sigma <= 26:
        raise BadParameters("invalid mutated-copies parameters")
    rng = random.Random(seed)
    base = bytes(rng.randrange(97, 97 + sigma) for _ in range(copy_len))
    out = bytearray(base)
    for _ in range(copies - 1):
        copy = bytearray(base)
        for i in range(copy_len):
            if rng.random() < rate:
                c = rng.randrange(97, 97 + sigma - 1)
                if c >= copy[i]:
                    c += 1
                copy[i] = c
        out += copy
    return bytes(out)
