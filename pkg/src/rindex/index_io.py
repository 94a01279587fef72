"""Reading and writing the two index files.

``<prefix>.ri`` (all integers little-endian)::

    magic "RUNIDX\\0\\0" | version u64 | n u64 | r u64 | alphabet size u64
    | run_heads (r bytes) | run_lengths (packed) | run-start marks
    (ceil(n / 64) u64 words) | C (alphabet size x u64)
    | start samples (packed) | end samples (packed)

A packed array is ``width u64`` followed by ``ceil(count * width / 64)``
u64 words holding ``count`` little-endian ``width``-bit fields.

``<prefix>.1.ri``::

    magic "RUNCAT\\0\\0" | version u64 | entry count u64
    | per entry: name length u64, name bytes (UTF-8), start u64, length u64
"""

import errno
import os
import struct

import numpy as np

from .bitvector import BitVector, pack_ints, unpack_ints
from .construct import RunLengthBwt, SampledSuffixes
from .errors import CorruptIndexError, UnsupportedVersionError
from .seq_io import SIGMA, SequenceCatalog

INDEX_MAGIC = b"RUNIDX\0\0"
CATALOG_MAGIC = b"RUNCAT\0\0"
VERSION = 1
_U64 = struct.Struct("<Q")


def index_paths(prefix):
    prefix = os.fspath(prefix)
    return prefix + ".ri", prefix + ".1.ri"


def _packed(values):
    width, words = pack_ints(values)
    return _U64.pack(width) + words.astype("<u8").tobytes()


def encode_index(index) -> bytes:
    rl, samples = index.rlbwt, index.samples
    parts = [INDEX_MAGIC, struct.pack("<4Q", VERSION, rl.n, rl.r, SIGMA),
             rl.run_heads.astype(np.uint8).tobytes(),
             _packed(rl.run_lengths),
             rl.marks.words.astype("<u8").tobytes(),
             rl.C.astype("<u8").tobytes(),
             _packed(samples.start_samples),
             _packed(samples.end_samples)]
    return b"".join(parts)


def encode_catalog(catalog: SequenceCatalog) -> bytes:
    parts = [CATALOG_MAGIC, struct.pack("<2Q", VERSION, len(catalog))]
    for name, start, length in catalog.entries:
        raw = name.encode("utf-8")
        parts.append(_U64.pack(len(raw)))
        parts.append(raw)
        parts.append(struct.pack("<2Q", start, length))
    return b"".join(parts)


def serialize_index(index, prefix):
    ri, cat = index_paths(prefix)
    with open(ri, "wb") as fh:
        fh.write(encode_index(index))
    with open(cat, "wb") as fh:
        fh.write(encode_catalog(index.catalog))
    return ri, cat


class _Reader:
    def __init__(self, data, path):
        self.data = data
        self.path = path
        self.pos = 0

    def take(self, size):
        if size < 0 or self.pos + size > len(self.data):
            raise CorruptIndexError(f"corrupt index: {self.path} is truncated")
        chunk = self.data[self.pos:self.pos + size]
        self.pos += size
        return chunk

    def u64(self):
        return _U64.unpack(self.take(8))[0]

    def words(self, count):
        if count > len(self.data):
            raise CorruptIndexError(f"corrupt index: {self.path} is truncated")
        return np.frombuffer(self.take(8 * count), dtype="<u8").astype(np.uint64)

    def packed(self, count):
        width = self.u64()
        if not 1 <= width <= 64:
            raise CorruptIndexError(f"corrupt index: bad field width {width} in {self.path}")
        return unpack_ints(self.words((count * width + 63) // 64), width, count)

    def header(self, magic):
        if self.take(8) != magic:
            raise CorruptIndexError(f"corrupt index: bad magic in {self.path}")
        version = self.u64()
        if version != VERSION:
            raise UnsupportedVersionError(
                f"unsupported index version {version} in {self.path} (expected {VERSION})")

    def finish(self):
        if self.pos != len(self.data):
            raise CorruptIndexError(f"corrupt index: trailing bytes in {self.path}")


def _read(path):
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except FileNotFoundError:
        raise FileNotFoundError(errno.ENOENT, "index file not found", path) from None


def decode_index(data, path="<bytes>"):
    rd = _Reader(data, path)
    rd.header(INDEX_MAGIC)
    n, r, sigma = rd.u64(), rd.u64(), rd.u64()
    if sigma != SIGMA or r == 0 or r > n:
        raise CorruptIndexError(f"corrupt index: inconsistent header in {path}")
    heads = np.frombuffer(rd.take(r), dtype=np.uint8).copy()
    lengths = rd.packed(r)
    marks = BitVector(rd.words((n + 63) // 64), n)
    C = rd.words(sigma).astype(np.int64)
    starts = rd.packed(r)
    ends = rd.packed(r)
    rd.finish()

    rl = RunLengthBwt(heads, lengths)
    try:
        rl.validate()
    except ValueError as exc:
        raise CorruptIndexError(f"corrupt index: {exc} in {path}") from None
    if rl.n != n or not np.array_equal(rl.marks.words, marks.words) or not np.array_equal(rl.C, C):
        raise CorruptIndexError(f"corrupt index: length check failed in {path}")
    if starts.max() >= n or ends.max() >= n:
        raise CorruptIndexError(f"corrupt index: sample out of range in {path}")
    return rl, SampledSuffixes(starts, ends)


def decode_catalog(data, path="<bytes>"):
    rd = _Reader(data, path)
    rd.header(CATALOG_MAGIC)
    count = rd.u64()
    entries = []
    for _ in range(count):
        try:
            name = rd.take(rd.u64()).decode("utf-8")
        except UnicodeDecodeError:
            raise CorruptIndexError(f"corrupt index: undecodable name in {path}") from None
        entries.append((name, rd.u64(), rd.u64()))
    rd.finish()
    return SequenceCatalog.from_entries(entries)


def deserialize_index(prefix, backend=None):
    from .core import Index

    ri, cat = index_paths(prefix)
    data_ri, data_cat = _read(ri), _read(cat)
    rl, samples = decode_index(data_ri, ri)
    catalog = decode_catalog(data_cat, cat)
    if catalog.entries and catalog.starts[-1] + catalog.lengths[-1] + 2 != rl.n:
        raise CorruptIndexError(f"corrupt index: {cat} does not match {ri}")
    return Index(rl, samples, catalog, backend=backend)
