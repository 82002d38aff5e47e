"""Exception hierarchy shared by all gindex modules."""


class GindexError(Exception):
    """Base class for all errors raised by this package."""


class InputContainsZeroByte(GindexError):
    """The input text contains byte 0, which is reserved for the sentinel/padding."""


class PositionOutOfRange(GindexError):
    """A position or range falls outside the indexed text."""


class EmptyPattern(GindexError):
    """locate() was called with an empty pattern."""


class PatternContainsReservedSymbol(GindexError):
    """A search pattern contains byte 0, which cannot occur in the text."""


class AttractorInvalid(GindexError):
    """A candidate attractor does not satisfy the covering property.

    Raised by the tree builder when no source occurrence crossing an
    attractor position can be found for some unmarked block (under Monte
    Carlo construction this may also indicate a fingerprint collision).
    """

    def __init__(self, message, level=None, block_start=None, block_len=None):
        super().__init__(message)
        self.level = level
        self.block_start = block_start
        self.block_len = block_len


class FingerprintCollision(GindexError):
    """A genuine hash collision was detected during a verified build.

    The Las Vegas driver catches this and resamples the hash function.
    """


class ChecksumMismatch(GindexError):
    """An index file failed its trailing checksum."""


class VersionMismatch(GindexError):
    """An index file has an unsupported magic or format version."""


class TooLargeForValidator(GindexError):
    """The brute-force attractor validator refuses inputs above its cap."""


class BadParameters(GindexError):
    """Invalid corpus-generation or command-line parameters."""
