import random

import pytest

from conftest import small_corpus_texts
from gindex.errors import EmptyPattern, PatternContainsReservedSymbol
from gindex.index import build_self_index
from gindex.oracle import (
    classify_occurrences,
    distinct_substrings,
    naive_occurrences,
)


def padded_text(idx):
    tree = idx.tree
    base = idx.extract(1, tree.n)
    return base + b"\x00" * (tree.n_prime - tree.n)


def make_getchar(idx):
    tree = idx.tree
    return lambda pos: 0 if pos > tree.n else tree.extract_symbol(pos)


def test_boundary_sets_on_worked_example():
    idx = build_self_index(b"abaababa")
    pidx = idx.pidx
    padded = padded_text(idx)
    assert pidx.leaf_starts[0] == 1
    assert pidx.leaf_starts == sorted(pidx.leaf_starts)
    # X order equals naive all-pairs comparison of the boundary suffixes
    naive_x = sorted(pidx.leaf_starts[1:], key=lambda p: padded[p - 1:])
    assert pidx.x_start == naive_x
    # Y order equals naive comparison of reversed preceding chunks
    starts = pidx.leaf_starts
    chunk = {b: padded[a - 1:b - 1][::-1] for a, b in zip(starts, starts[1:])}
    naive_y = sorted(chunk, key=lambda b: (chunk[b], b))
    assert pidx.t_of_y == naive_y


def test_grid_is_a_permutation():
    for text in small_corpus_texts(max_n=200):
        pidx = build_self_index(text).pidx
        assert sorted(pidx.seq) == list(range(1, pidx.w))


def test_primary_matches_boundary_crossing_oracle():
    rng = random.Random(55)
    for text in small_corpus_texts(max_n=200):
        idx = build_self_index(text)
        pidx = idx.pidx
        getchar = make_getchar(idx)
        pats = distinct_substrings(text, 4)[:120]
        pats += [bytes(rng.randrange(97, 123) for _ in range(rng.randint(1, 5)))
                 for _ in range(20)]
        for p in pats:
            want_primary, want_secondary = classify_occurrences(
                text, p, pidx.leaf_starts)
            got = sorted(pidx._primary(p, getchar))
            assert got == want_primary, (text, p)


def test_expansion_adds_exactly_the_secondary_set():
    for text in small_corpus_texts(max_n=200):
        idx = build_self_index(text)
        pidx = idx.pidx
        getchar = make_getchar(idx)
        for p in distinct_substrings(text, 3)[:80]:
            want_primary, want_secondary = classify_occurrences(
                text, p, pidx.leaf_starts)
            occs = pidx._primary(p, getchar)
            pidx._expand(occs, len(p))
            assert len(occs) == len(set(occs)), "occurrence reported twice"
            assert sorted(occs[len(want_primary):]) == want_secondary


def test_locate_equals_oracle_on_corpus():
    rng = random.Random(56)
    for text in small_corpus_texts():
        idx = build_self_index(text)
        pats = distinct_substrings(text, 6)[:300]
        pats += [bytes(rng.randrange(97, 123) for _ in range(rng.randint(1, 8)))
                 for _ in range(40)]
        pats.append(text)  # the whole text as a pattern
        for p in pats:
            assert idx.locate(p) == naive_occurrences(text, p), (text, p)


def test_locate_long_and_absent_patterns():
    text = b"abaababaabaababa"
    idx = build_self_index(text)
    assert idx.locate(text) == [1]
    assert idx.locate(text + b"a") == []
    assert idx.locate(b"z" * 3) == []


def test_pattern_validation():
    idx = build_self_index(b"abaababa")
    with pytest.raises(EmptyPattern):
        idx.locate(b"")
    with pytest.raises(PatternContainsReservedSymbol):
        idx.locate(b"a\x00b")


def test_source_array_is_sorted_with_matching_lengths():
    for text in small_corpus_texts(max_n=200):
        pidx = build_self_index(text).pidx
        assert pidx.src_j1 == sorted(pidx.src_j1)
        for j1, j2 in zip(pidx.src_j1, pidx.src_j2):
            assert j2 >= j1
