"""Top-level self-index: attractor derivation, Las Vegas fingerprint
selection, tree and location structures, and the query façade."""

from __future__ import annotations

import math
from typing import Optional

from .attractor import Attractor, attractor_from_lz77, check_text, lz77_parse
from .errors import AttractorInvalid, FingerprintCollision
from .fingerprint import (
    KrFunction,
    PrefixHashes,
    new_function,
    verify_pow2_collision_free,
)
from .gamma_tree import GammaTree, build_gamma_tree, plan_layout
from .pattern_index import PatternIndex, build_pattern_index


class SelfIndex:
    """A built index over one text: supports locate, extract, and
    substring fingerprints without storing the text itself."""

    def __init__(self, kr, attractor, tree, pidx, security, verified, attempts):
        self.kr: KrFunction = kr
        self.attractor: Attractor = attractor
        self.tree: GammaTree = tree
        self.pidx: PatternIndex = pidx
        self.security = security
        self.verified = verified
        self.build_attempts = attempts

    @property
    def n(self) -> int:
        return self.tree.n

    def locate(self, pattern: bytes) -> list[int]:
        return self.pidx.locate(pattern)

    def extract(self, i: int, length: int) -> bytes:
        return self.tree.extract(i, length)

    def substring_fingerprint(self, i: int, j: int):
        return self.tree.substring_fingerprint(i, j)

    def stats(self) -> dict:
        s = self.tree.stats()
        s.update(self.pidx.stats())
        s["gamma"] = self.attractor.gamma
        s["q"] = self.kr.q
        s["r"] = self.kr.r
        s["security"] = self.security
        s["verified"] = self.verified
        s["build_attempts"] = self.build_attempts
        ge = s["gamma_eff"]
        s["w_bound"] = 3 * ge * math.log2(s["n_prime"] / ge) + ge
        s["w_bound_ratio"] = s["w"] / s["w_bound"]
        return s


def build_self_index(text: bytes, seed=0, security: int = 2,
                     verify: bool = True,
                     attractor: Optional[Attractor] = None,
                     kr_override: Optional[KrFunction] = None,
                     max_attempts: int = 64) -> SelfIndex:
    """Build an index, resampling the fingerprint function until it is
    verified collision-free on power-of-two-length substrings of the padded
    text and its reverse (Las Vegas; skipped when ``verify`` is off).

    ``kr_override`` forces the first attempt's fingerprint function (a test
    hook for exercising the resampling path); later attempts sample fresh
    functions from the seed.
    """
    check_text(text)
    if attractor is None:
        attractor = attractor_from_lz77(lz77_parse(text), text)
    n = len(text)
    _, _, n_prime = plan_layout(n, attractor.gamma)
    padded = text + b"\x00" * (n_prime - n)

    bad_attractor: Optional[AttractorInvalid] = None
    for attempt in range(1, max_attempts + 1):
        if kr_override is not None and attempt == 1:
            kr = kr_override
        else:
            kr = new_function(security, f"{seed}:{attempt}", n)
        if verify and not (verify_pow2_collision_free(kr, padded)
                           and verify_pow2_collision_free(kr, padded[::-1])):
            continue
        ph = PrefixHashes(kr, padded)
        try:
            tree = build_gamma_tree(text, attractor, kr,
                                    verify_sources=verify, prefix_hashes=ph)
            pidx = build_pattern_index(tree, padded, ph)
        except FingerprintCollision:
            continue
        except AttractorInvalid as err:
            # could be a genuinely bad candidate attractor, or (with verify
            # off) a collision that hid an existing source; retry a little
            bad_attractor = err
            if attempt >= 3:
                raise
            continue
        return SelfIndex(kr, attractor, tree, pidx, security, verify, attempt)
    if bad_attractor is not None:
        raise bad_attractor
    raise FingerprintCollision(
        f"no collision-free fingerprint function found in {max_attempts} attempts")
