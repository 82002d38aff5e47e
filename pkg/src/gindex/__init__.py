"""gindex: a compressed self-index over string attractors.

Index a byte string through an LZ77-derived string attractor and answer
substring extraction, substring fingerprinting, and exact pattern location
without keeping the text around.
"""

from .attractor import (
    Attractor,
    Phrase,
    attractor_from_lz77,
    decode_lz77,
    lz77_parse,
    validate_attractor,
)
from .errors import (
    AttractorInvalid,
    BadParameters,
    ChecksumMismatch,
    EmptyPattern,
    FingerprintCollision,
    GindexError,
    InputContainsZeroByte,
    PatternContainsReservedSymbol,
    PositionOutOfRange,
    TooLargeForValidator,
    VersionMismatch,
)
from .fingerprint import (
    ExtendedFingerprint,
    KrFunction,
    concat,
    new_function,
    of_string,
    split_left,
    split_right,
    verify_pow2_collision_free,
)
from .gamma_tree import GammaTree, build_gamma_tree, plan_layout
from .index import SelfIndex, build_self_index
from .index_io import load_index, load_index_file, save_index, save_index_file
from .pattern_index import PatternIndex, build_pattern_index

__all__ = [
    "Attractor", "Phrase", "attractor_from_lz77", "decode_lz77", "lz77_parse",
    "validate_attractor",
    "GindexError", "InputContainsZeroByte", "PositionOutOfRange",
    "EmptyPattern", "PatternContainsReservedSymbol", "AttractorInvalid",
    "FingerprintCollision", "ChecksumMismatch", "VersionMismatch",
    "TooLargeForValidator", "BadParameters",
    "ExtendedFingerprint", "KrFunction", "concat", "new_function", "of_string",
    "split_left", "split_right", "verify_pow2_collision_free",
    "GammaTree", "build_gamma_tree", "plan_layout",
    "SelfIndex", "build_self_index",
    "load_index", "load_index_file", "save_index", "save_index_file",
    "PatternIndex", "build_pattern_index",
]

__version__ = "0.1.0"
