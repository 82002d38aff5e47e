import random

import pytest

from conftest import small_corpus_texts
from gindex.attractor import (
    Attractor,
    attractor_from_lz77,
    decode_lz77,
    lz77_parse,
    validate_attractor,
)
from gindex.errors import InputContainsZeroByte


def test_parse_abaababa():
    text = b"abaababa"
    parse = lz77_parse(text)
    assert decode_lz77(parse) == text
    att = attractor_from_lz77(parse, text)
    assert att.positions == (1, 2, 4, 7, 8)
    assert att.gamma == 5


def test_parse_run_of_a():
    text = b"aaaa"
    att = attractor_from_lz77(lz77_parse(text), text)
    assert att.positions == (1, 4)


def test_single_symbol():
    parse = lz77_parse(b"x")
    assert len(parse) == 1
    assert parse[0].source is None and parse[0].literal == ord("x")
    assert attractor_from_lz77(parse, b"x").positions == (1,)


def test_rejects_bad_text():
    with pytest.raises(ValueError):
        lz77_parse(b"")
    with pytest.raises(InputContainsZeroByte):
        lz77_parse(b"a\x00b")


def test_roundtrip_on_corpus():
    for text in small_corpus_texts():
        parse = lz77_parse(text)
        assert decode_lz77(parse) == text
        att = attractor_from_lz77(parse, text)
        assert att.positions[-1] == len(text)
        assert all(a < b for a, b in zip(att.positions, att.positions[1:]))


def test_leftmost_source_ties():
    # in "abab|ab..." the third "ab" must copy from position 1, not 3
    parse = lz77_parse(b"abababab")
    copies = [p for p in parse if p.source is not None]
    assert copies and copies[0].source == 1


def test_self_overlapping_source():
    text = b"ab" * 30
    parse = lz77_parse(text)
    # the long run collapses into few phrases thanks to self-overlap
    assert len(parse) <= 4
    assert decode_lz77(parse) == text


def test_gamma_at_least_distinct_symbols():
    for text in small_corpus_texts():
        att = attractor_from_lz77(lz77_parse(text), text)
        assert att.gamma >= len(set(text))


def test_validate_accepts_lz77_attractors():
    for text in small_corpus_texts(max_n=200):
        att = attractor_from_lz77(lz77_parse(text), text)
        ok, witness = validate_attractor(text, att)
        assert ok, (text, witness)


def test_validate_rejects_with_witness():
    ok, witness = validate_attractor(b"abab", Attractor((2,)))
    assert not ok
    assert witness == (1, 1)  # the uncovered "a"


def test_validate_run_attractor():
    ok, witness = validate_attractor(b"a" * 40, Attractor((1,)))
    assert ok and witness is None


def test_validate_witness_is_shortest_first():
    rng = random.Random(8)
    for _ in range(40):
        n = rng.randint(2, 30)
        text = bytes(rng.randrange(97, 100) for _ in range(n))
        # drop a random position from a valid attractor; if it turns
        # invalid, the witness really must be uncovered
        att = attractor_from_lz77(lz77_parse(text), text)
        if att.gamma < 2:
            continue
        cut = list(att.positions)
        del cut[rng.randrange(len(cut))]
        ok, witness = validate_attractor(text, Attractor(tuple(cut)))
        if ok:
            continue
        i, j = witness
        sub = text[i - 1:j]
        for t in range(len(text) - len(sub) + 1):
            if text[t:t + len(sub)] == sub:
                assert not any(t + 1 <= p <= t + len(sub) for p in cut)


def test_validate_rejects_malformed_positions():
    with pytest.raises(ValueError):
        validate_attractor(b"abc", Attractor((0, 2)))
    with pytest.raises(ValueError):
        validate_attractor(b"abc", Attractor(()))
    with pytest.raises(ValueError):
        validate_attractor(b"abc", Attractor((2, 2)))
