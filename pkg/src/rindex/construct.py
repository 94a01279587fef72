"""Index construction: suffix array, BWT, run-length encoding and samples."""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import _backend
from .bitvector import BitVector
from .seq_io import SIGMA, SYMBOLS, TextCorpus, encode


def _as_codes(text):
    if isinstance(text, TextCorpus):
        text = text.text
    if isinstance(text, (bytes, bytearray)):
        return encode(bytes(text))
    return np.asarray(text, dtype=np.uint8)


def suffix_array(corpus, backend=None):
    """Suffix array of a corpus (or raw corpus bytes) by induced sorting.

    The text must end with its unique smallest symbol, the terminator.
    """
    codes = _as_codes(corpus)
    n = codes.size
    if n == 0 or codes[-1] != 0 or np.count_nonzero(codes == 0) != 1:
        raise ValueError("corpus must end with exactly one terminator")
    return _backend.get(backend).sais(codes.astype(np.int32), SIGMA)


def bwt_from_sa(corpus, sa):
    """BWT codes: ``text[sa[i] - 1]``, wrapping to the terminator at ``sa[i] == 0``."""
    codes = _as_codes(corpus)
    sa = np.asarray(sa, dtype=np.int64)
    if sa.size != codes.size:
        raise ValueError(f"suffix array length {sa.size} != corpus length {codes.size}")
    return codes[sa - 1]


@dataclass(frozen=True, eq=False)
class RunLengthBwt:
    """Run-length BWT with the auxiliary arrays rank needs.

    Only ``run_heads`` and ``run_lengths`` are primary; everything else is
    derived from them (and checked against ``marks`` when one is supplied).
    """

    run_heads: np.ndarray
    run_lengths: np.ndarray

    @property
    def r(self):
        return int(self.run_heads.size)

    @cached_property
    def n(self):
        return int(self.run_lengths.sum())

    @cached_property
    def run_starts(self):
        starts = np.zeros(self.r, dtype=np.int64)
        np.cumsum(self.run_lengths[:-1], out=starts[1:])
        return starts

    @cached_property
    def marks(self):
        return BitVector.from_positions(self.run_starts, self.n)

    @cached_property
    def symbol_counts(self):
        return np.bincount(self.run_heads, weights=self.run_lengths, minlength=SIGMA).astype(np.int64)

    @cached_property
    def C(self):
        C = np.zeros(SIGMA, dtype=np.int64)
        np.cumsum(self.symbol_counts[:-1], out=C[1:])
        return C

    @cached_property
    def _per_symbol(self):
        order = np.argsort(self.run_heads, kind="stable").astype(np.int64)
        per_sym = np.bincount(self.run_heads, minlength=SIGMA)
        offsets = np.zeros(SIGMA + 1, dtype=np.int64)
        np.cumsum(per_sym, out=offsets[1:])
        # symbol c owns cum_lengths[offsets[c] + c : offsets[c + 1] + c + 1]
        cum = np.empty(self.r + SIGMA, dtype=np.int64)
        lengths = self.run_lengths[order]
        for c in range(SIGMA):
            a, b = offsets[c], offsets[c + 1]
            cum[a + c] = 0
            np.cumsum(lengths[a:b], out=cum[a + c + 1 : b + c + 1])
        onehot = np.zeros((self.r, SIGMA), dtype=np.int64)
        onehot[np.arange(self.r), self.run_heads] = 1
        runs_before = np.cumsum(onehot, axis=0) - onehot
        return order, offsets, cum, np.ascontiguousarray(runs_before.ravel())

    @property
    def sym_runs(self):
        return self._per_symbol[0]

    @property
    def sym_run_offsets(self):
        return self._per_symbol[1]

    @property
    def cum_lengths(self):
        return self._per_symbol[2]

    @property
    def runs_before(self):
        return self._per_symbol[3]

    def runs_of(self, symbol):
        """Run ids of ``symbol`` in BWT order, with cumulative lengths."""
        c = _code(symbol)
        a, b = self.sym_run_offsets[c], self.sym_run_offsets[c + 1]
        return self.sym_runs[a:b], self.cum_lengths[a + c : b + c + 1]

    def expand(self):
        return np.repeat(self.run_heads, self.run_lengths)

    def validate(self):
        if self.r == 0:
            raise ValueError("empty run-length BWT")
        if self.run_heads.max() >= SIGMA:
            raise ValueError("run head outside the alphabet")
        if (self.run_lengths <= 0).any():
            raise ValueError("non-positive run length")
        if (self.run_heads[1:] == self.run_heads[:-1]).any():
            raise ValueError("adjacent runs share a symbol")


def _code(symbol):
    if isinstance(symbol, (bytes, str)):
        if len(symbol) != 1:
            raise ValueError(f"expected one symbol, got {symbol!r}")
        symbol = symbol.encode() if isinstance(symbol, str) else symbol
        k = SYMBOLS.find(symbol)
        if k < 0:
            raise ValueError(f"symbol {symbol!r} outside the index alphabet")
        return k
    symbol = int(symbol)
    if not 0 <= symbol < SIGMA:
        raise ValueError(f"symbol code {symbol} outside the index alphabet")
    return symbol


def run_length_encode(bwt):
    bwt = _as_codes(bwt)
    if bwt.size == 0:
        raise ValueError("cannot run-length encode an empty BWT")
    starts = np.flatnonzero(np.concatenate([[True], bwt[1:] != bwt[:-1]]))
    lengths = np.diff(np.append(starts, bwt.size)).astype(np.int64)
    return RunLengthBwt(bwt[starts].astype(np.uint8), lengths)


@dataclass(frozen=True, eq=False)
class SampledSuffixes:
    """SA values at both ends of every run, plus the phi predecessor table."""

    start_samples: np.ndarray
    end_samples: np.ndarray

    @cached_property
    def _phi(self):
        keys = self.start_samples[1:]
        values = self.end_samples[:-1]
        order = np.argsort(keys, kind="stable")
        return keys[order], values[order]

    @property
    def phi_keys(self):
        return self._phi[0]

    @property
    def phi_values(self):
        return self._phi[1]


def sample_boundaries(sa, rlbwt):
    sa = np.asarray(sa, dtype=np.int64)
    if sa.size != rlbwt.n:
        raise ValueError(f"run lengths sum to {rlbwt.n} but the suffix array has {sa.size} entries")
    starts = rlbwt.run_starts
    return SampledSuffixes(sa[starts].copy(), sa[starts + rlbwt.run_lengths - 1].copy())


def build_index(corpus, catalog, backend=None, keep_sa=False):
    """Build an r-index over ``corpus``.

    The suffix array and plain BWT are dropped afterwards unless ``keep_sa``
    is set, in which case the SA is attached as ``index.debug_sa`` for tests.
    """
    from .core import Index

    sa = suffix_array(corpus, backend=backend)
    rlbwt = run_length_encode(bwt_from_sa(corpus, sa))
    samples = sample_boundaries(sa, rlbwt)
    index = Index(rlbwt, samples, catalog, backend=backend)
    if keep_sa:
        index.debug_sa = sa
    return index
