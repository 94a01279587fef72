"""Plain bit vector with constant-time rank and logarithmic select.

Bits live in little-endian 64-bit words; bit ``i`` is bit ``i % 64`` of
word ``i // 64``.  ``ranks[w]`` holds the number of set bits in words
``[0, w)``, which is all rank needs next to one popcount.
"""

import numpy as np

_POPCOUNT8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.int64)


def _popcount(words):
    return _POPCOUNT8[np.asarray(words, dtype=np.uint64).view(np.uint8)].reshape(-1, 8).sum(axis=1)


class BitVector:
    def __init__(self, words, size):
        words = np.ascontiguousarray(words, dtype=np.uint64)
        if words.size != (size + 63) // 64:
            raise ValueError("word count does not match bit length")
        self.size = int(size)
        self.words = words
        self.ranks = np.zeros(words.size + 1, dtype=np.int64)
        np.cumsum(_popcount(words), out=self.ranks[1:])

    @classmethod
    def from_positions(cls, positions, size):
        bits = np.zeros(((size + 63) // 64) * 64, dtype=np.uint8)
        bits[np.asarray(positions, dtype=np.int64)] = 1
        words = np.packbits(bits, bitorder="little").view("<u8").astype(np.uint64)
        return cls(words, size)

    @classmethod
    def from_bits(cls, bits):
        bits = np.asarray(bits, dtype=bool)
        return cls.from_positions(np.flatnonzero(bits), bits.size)

    def __len__(self):
        return self.size

    def __getitem__(self, i):
        if not 0 <= i < self.size:
            raise IndexError(i)
        return int(self.words[i >> 6] >> np.uint64(i & 63)) & 1

    @property
    def ones(self):
        return int(self.ranks[-1])

    def rank1(self, i):
        """Number of set bits in ``[0, i)``."""
        if not 0 <= i <= self.size:
            raise IndexError(i)
        w, b = i >> 6, i & 63
        total = int(self.ranks[w])
        if b:
            total += (int(self.words[w]) & ((1 << b) - 1)).bit_count()
        return total

    def select1(self, k):
        """Position of the ``k``-th set bit (0-based ``k``)."""
        if not 0 <= k < self.ones:
            raise IndexError(k)
        w = int(np.searchsorted(self.ranks, k, side="right")) - 1
        word = int(self.words[w])
        for _ in range(k - int(self.ranks[w])):
            word &= word - 1
        return (w << 6) + ((word & -word).bit_length() - 1)

    def to_bits(self):
        bits = np.unpackbits(self.words.astype("<u8").view(np.uint8), bitorder="little")
        return bits[: self.size].astype(bool)


def pack_ints(values, width=None):
    """Pack non-negative ints into ``width``-bit little-endian fields.

    Returns ``(width, words)`` where ``words`` is a uint64 array; ``width``
    defaults to the smallest width holding the largest value.
    """
    values = np.asarray(values, dtype=np.uint64)
    if width is None:
        width = max(1, int(values.max()).bit_length()) if values.size else 1
    if not 1 <= width <= 64:
        raise ValueError(f"bad field width {width}")
    shifts = np.arange(width, dtype=np.uint64)
    bits = ((values[:, None] >> shifts) & np.uint64(1)).astype(np.uint8).ravel()
    pad = (-bits.size) % 64
    if pad:
        bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)])
    return width, np.packbits(bits, bitorder="little").view("<u8").astype(np.uint64)


def unpack_ints(words, width, count):
    words = np.ascontiguousarray(words, dtype="<u8")
    bits = np.unpackbits(words.view(np.uint8), bitorder="little")
    if bits.size < width * count:
        raise ValueError("packed array shorter than declared")
    fields = bits[: width * count].reshape(count, width).astype(np.uint64)
    shifts = np.arange(width, dtype=np.uint64)
    return (fields << shifts).sum(axis=1, dtype=np.uint64).astype(np.int64)
