class RIndexError(Exception):
    """Base class for errors raised by this package."""


class FormatError(RIndexError, ValueError):
    """Malformed FASTA/FASTQ input."""


class CorruptIndexError(RIndexError):
    """An index file is truncated, has a bad magic, or fails a length check."""


class UnsupportedVersionError(CorruptIndexError):
    pass


class UnsupportedAlgorithmError(RIndexError, ValueError):
    pass
