"""FASTA/FASTQ parsing and corpus assembly.

Sequences are normalized to the alphabet ``ACGTN``: bases are upper-cased and
anything outside ``ACGT`` becomes ``N``.  The corpus joins every record with a
separator (``#``) and ends with one terminator (``$``).  The symbol order used
for sorting is ``$ < # < A < C < G < N < T``, which differs from ASCII, so the
index works on small integer codes (see :func:`encode`).
"""

import bisect
import gzip
import io
import zlib
from dataclasses import dataclass, field
from typing import BinaryIO, Iterator, List, Optional, Tuple

import numpy as np

from .errors import FormatError

TERMINATOR = ord("$")
SEPARATOR = ord("#")
SYMBOLS = b"$#ACGNT"
SIGMA = len(SYMBOLS)
GZIP_MAGIC = b"\x1f\x8b"

_NORMALIZE = bytearray(b"N" * 256)
for _b in b"ACGT":
    _NORMALIZE[_b] = _b
    _NORMALIZE[ord(chr(_b).lower())] = _b
_NORMALIZE = bytes(_NORMALIZE)

_ENCODE = bytearray(b"\xff" * 256)
for _code, _b in enumerate(SYMBOLS):
    _ENCODE[_b] = _code
_ENCODE = bytes(_ENCODE)


def normalize(bases: bytes) -> bytes:
    return bases.translate(_NORMALIZE)


def encode(text: bytes) -> np.ndarray:
    """Map corpus or pattern bytes to symbol codes 0..6 (``$``=0 ... ``T``=6)."""
    codes = np.frombuffer(text.translate(_ENCODE), dtype=np.uint8)
    if codes.size and codes.max() == 0xFF:
        bad = bytes([text[int(np.argmax(codes == 0xFF))]])
        raise ValueError(f"symbol {bad!r} outside the index alphabet")
    return codes


def decode(codes) -> bytes:
    return bytes(SYMBOLS[c] for c in codes)


@dataclass(frozen=True)
class SequenceRecord:
    name: str
    bases: bytes
    quality: Optional[bytes] = None

    def __post_init__(self):
        if not self.bases:
            raise FormatError(f"record {self.name!r} has an empty sequence")
        if self.quality is not None and len(self.quality) != len(self.bases):
            raise FormatError(
                f"record {self.name!r}: quality length mismatch "
                f"({len(self.quality)} != {len(self.bases)})")


@dataclass(frozen=True)
class TextCorpus:
    text: bytes

    @property
    def n(self) -> int:
        return len(self.text)

    def codes(self) -> np.ndarray:
        return encode(self.text)


@dataclass(frozen=True)
class SequenceCatalog:
    names: Tuple[str, ...] = ()
    starts: Tuple[int, ...] = ()
    lengths: Tuple[int, ...] = ()
    _ends: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not len(self.names) == len(self.starts) == len(self.lengths):
            raise ValueError("catalog columns differ in length")
        object.__setattr__(self, "_ends", tuple(s + l for s, l in zip(self.starts, self.lengths)))

    @classmethod
    def from_entries(cls, entries):
        entries = list(entries)
        return cls(tuple(e[0] for e in entries), tuple(int(e[1]) for e in entries),
                   tuple(int(e[2]) for e in entries))

    @property
    def entries(self) -> List[Tuple[str, int, int]]:
        return list(zip(self.names, self.starts, self.lengths))

    def __len__(self):
        return len(self.names)

    def find(self, offset: int) -> int:
        """Index of the entry whose span holds ``offset``, or -1."""
        k = bisect.bisect_right(self.starts, offset) - 1
        if k < 0 or offset >= self._ends[k]:
            return -1
        return k


def _open_maybe_gzip(stream: BinaryIO, gzipped: Optional[bool]) -> BinaryIO:
    if gzipped is None:
        if not isinstance(stream, io.BufferedReader) and not hasattr(stream, "peek"):
            stream = io.BufferedReader(stream)
        gzipped = stream.peek(2)[:2] == GZIP_MAGIC
    if gzipped:
        return gzip.GzipFile(fileobj=stream, mode="rb")
    return stream


def _lines(stream: BinaryIO) -> Iterator[bytes]:
    try:
        for line in stream:
            yield line.rstrip(b"\r\n")
    except (EOFError, OSError, zlib.error) as exc:
        raise FormatError(f"unreadable or truncated gzip stream: {exc}") from exc


def iter_fasta(stream: BinaryIO, gzipped: Optional[bool] = None) -> Iterator[SequenceRecord]:
    """Yield records from a (possibly multi-line, possibly gzipped) FASTA stream.

    ``gzipped=None`` sniffs the gzip magic bytes.
    """
    name = None
    chunks: List[bytes] = []
    for line in _lines(_open_maybe_gzip(stream, gzipped)):
        if line.startswith(b">"):
            if name is not None:
                yield SequenceRecord(name, normalize(b"".join(chunks)))
            name = line[1:].strip().decode("utf-8", "replace")
            chunks = []
        elif name is None:
            if line.strip():
                raise FormatError("malformed FASTA: first record does not start with '>'")
        else:
            chunks.append(line.strip())
    if name is not None:
        yield SequenceRecord(name, normalize(b"".join(chunks)))


def read_fasta(stream: BinaryIO, gzipped: Optional[bool] = None) -> List[SequenceRecord]:
    return list(iter_fasta(stream, gzipped))


def iter_fastq(stream: BinaryIO) -> Iterator[SequenceRecord]:
    """Yield records from a 4-line-per-record FASTQ stream."""
    block = []
    lineno = 0
    for line in _lines(_open_maybe_gzip(stream, None)):
        lineno += 1
        if not block and not line.strip():
            continue
        block.append(line)
        if len(block) < 4:
            continue
        header, seq, plus, qual = block
        block = []
        if not header.startswith(b"@"):
            raise FormatError(f"malformed FASTQ header near line {lineno - 3}")
        if not plus.startswith(b"+"):
            raise FormatError(f"malformed FASTQ: missing '+' line near line {lineno - 1}")
        name = header[1:].strip().decode("utf-8", "replace")
        if len(qual) != len(seq):
            raise FormatError(f"record {name!r}: quality length mismatch "
                              f"({len(qual)} != {len(seq)})")
        yield SequenceRecord(name, normalize(seq.strip()), qual)
    if block:
        raise FormatError("truncated FASTQ: line count is not a multiple of 4")


def read_fastq(stream: BinaryIO) -> List[SequenceRecord]:
    return list(iter_fastq(stream))


def build_corpus(records) -> Tuple[TextCorpus, SequenceCatalog]:
    records = list(records)
    if not records:
        raise ValueError("cannot build a corpus from zero records")
    parts = []
    entries = []
    offset = 0
    for rec in records:
        if not rec.bases:
            raise ValueError(f"record {rec.name!r} is empty")
        entries.append((rec.name, offset, len(rec.bases)))
        parts.append(rec.bases)
        offset += len(rec.bases) + 1
    text = b"#".join(parts) + b"#$"
    return TextCorpus(text), SequenceCatalog.from_entries(entries)
