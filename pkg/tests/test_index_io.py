import random

import pytest

from conftest import small_corpus_texts
from gindex.errors import ChecksumMismatch, VersionMismatch
from gindex.index import build_self_index
from gindex.index_io import (
    load_index,
    load_index_file,
    save_index,
    save_index_file,
)
from gindex.oracle import distinct_substrings, naive_occurrences


def test_roundtrip_preserves_queries():
    rng = random.Random(61)
    for text in small_corpus_texts(max_n=250):
        idx = build_self_index(text, seed=5)
        blob = save_index(idx)
        idx2 = load_index(blob)
        assert idx2.extract(1, len(text)) == text
        assert idx2.kr == idx.kr
        assert idx2.attractor == idx.attractor
        for p in distinct_substrings(text, 4)[:100]:
            assert idx2.locate(p) == idx.locate(p) == naive_occurrences(text, p)
        for _ in range(30):
            i = rng.randint(1, len(text))
            j = rng.randint(i, len(text))
            assert idx2.substring_fingerprint(i, j) == \
                idx.substring_fingerprint(i, j)


def test_resave_is_byte_identical():
    for text in (b"abaababa", b"a", b"ab" * 50):
        blob = save_index(build_self_index(text, seed=9))
        assert save_index(load_index(blob)) == blob


def test_same_seed_builds_identical_files():
    text = b"abracadabra" * 5
    a = save_index(build_self_index(text, seed=4))
    b = save_index(build_self_index(text, seed=4))
    assert a == b


def test_corrupted_byte_rejected():
    blob = bytearray(save_index(build_self_index(b"abaababa")))
    for pos in (0, 10, len(blob) // 2, len(blob) - 1):
        bad = bytearray(blob)
        bad[pos] ^= 0x55
        with pytest.raises((ChecksumMismatch, VersionMismatch)):
            load_index(bytes(bad))


def test_truncated_and_garbage_rejected():
    blob = save_index(build_self_index(b"abaababa"))
    with pytest.raises(ChecksumMismatch):
        load_index(blob[:-5])
    with pytest.raises(ChecksumMismatch):
        load_index(b"")
    with pytest.raises((ChecksumMismatch, VersionMismatch)):
        load_index(b"not an index file at all")


def test_version_mismatch_detected():
    import hashlib
    blob = bytearray(save_index(build_self_index(b"abaababa"))[:-8])
    blob[4] = 99  # bump the format version, then re-checksum
    blob += hashlib.blake2b(bytes(blob), digest_size=8).digest()
    with pytest.raises(VersionMismatch):
        load_index(bytes(blob))


def test_file_helpers(tmp_path):
    idx = build_self_index(b"abaababa")
    path = tmp_path / "t.gidx"
    nbytes = save_index_file(idx, path)
    assert path.stat().st_size == nbytes
    idx2 = load_index_file(path)
    assert idx2.locate(b"ab") == [1, 4, 6]
