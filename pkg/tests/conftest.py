import random

import pytest

from gindex.corpus import fibonacci_word, mutated_copies, random_text, thue_morse
from gindex.index import build_self_index

# pinned large benchmark corpus: 100 near-identical 10 KB documents
BIG_CORPUS_SEED = 1234
BIG_BUILD_SEED = 0


@pytest.fixture(scope="session")
def big_corpus():
    return mutated_copies(100, 10000, 0.001, BIG_CORPUS_SEED)


@pytest.fixture(scope="session")
def big_index(big_corpus):
    return build_self_index(big_corpus, seed=BIG_BUILD_SEED)


def small_corpus_texts(max_n=None):
    """A deterministic mixed bag of small texts used across test modules."""
    rng = random.Random(99)
    texts = [b"a", b"ab", b"aa", b"aaaa", b"abaababa", b"a" * 64,
             b"ab" * 40, b"abc" * 20 + b"x"]
    texts += [fibonacci_word(k) for k in (5, 8, 10, 12)]
    texts += [thue_morse(k) for k in (3, 5, 7)]
    for sigma in (2, 4, 16):
        for _ in range(4):
            n = rng.randint(2, 300)
            texts.append(random_text(n, sigma, rng.random()))
    if max_n is not None:
        texts = [t for t in texts if len(t) <= max_n]
    return texts
