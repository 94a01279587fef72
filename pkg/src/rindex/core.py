"""Queries on a built index: rank, LF, backward search, counting and locate."""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from . import _backend
from .construct import RunLengthBwt, SampledSuffixes, _code
from .seq_io import SequenceCatalog, encode, normalize


@dataclass(frozen=True)
class BwtRange:
    """Half-open BWT interval ``[lo, hi)``; ``toehold`` is SA[hi - 1] or None if empty."""

    lo: int
    hi: int
    toehold: Optional[int]

    @property
    def empty(self):
        return self.hi <= self.lo

    def __len__(self):
        return max(0, self.hi - self.lo)


@dataclass(frozen=True)
class CountResult:
    matched_len: int
    pattern_len: int
    occurrences: int

    @property
    def full_match(self):
        return self.matched_len == self.pattern_len and self.occurrences > 0


@dataclass(frozen=True)
class Hit:
    global_offset: int


class Index:
    """Run-length BWT, run-boundary SA samples and the sequence catalog.

    Immutable once built; query methods keep no per-call state on the object.
    """

    def __init__(self, rlbwt: RunLengthBwt, samples: SampledSuffixes,
                 catalog: SequenceCatalog, backend=None):
        self.rlbwt = rlbwt
        self.samples = samples
        self.catalog = catalog
        kernels = _backend.get(backend)
        self.backend = kernels.NAME
        rl = rlbwt
        self._engine = kernels.RunIndex(
            rl.n, rl.run_heads, rl.run_starts, rl.marks.words, rl.marks.ranks,
            rl.runs_before, rl.cum_lengths, rl.sym_runs, rl.sym_run_offsets, rl.C,
            samples.start_samples, samples.end_samples,
            samples.phi_keys, samples.phi_values)

    @property
    def n(self):
        return self.rlbwt.n

    @property
    def r(self):
        return self.rlbwt.r

    def with_backend(self, backend):
        return Index(self.rlbwt, self.samples, self.catalog, backend=backend)

    def rank(self, symbol, i):
        if not 0 <= i <= self.n:
            raise IndexError(f"row {i} outside [0, {self.n}]")
        return self._engine.rank(_code(symbol), i)

    def lf(self, i):
        if not 0 <= i < self.n:
            raise IndexError(f"row {i} outside [0, {self.n})")
        return self._engine.lf(i)

    def full_range(self):
        return BwtRange(0, self.n, int(self.samples.end_samples[-1]))

    def backward_step(self, rng: BwtRange, symbol):
        if rng.empty:
            return BwtRange(rng.lo, rng.lo, None)
        lo, hi, t = self._engine.step(rng.lo, rng.hi, rng.toehold, _code(symbol))
        return BwtRange(lo, hi, t if hi > lo else None)

    def _search(self, pattern):
        pattern = normalize(bytes(pattern))
        if not pattern:
            raise ValueError("empty pattern")
        return len(pattern), self._engine.count(encode(pattern))

    def count_longest_suffix(self, pattern: bytes) -> CountResult:
        m, (matched, lo, hi, _) = self._search(pattern)
        return CountResult(matched, m, hi - lo if matched else 0)

    def phi(self, j):
        if not 0 <= j < self.n or j == self.n - 1:
            raise ValueError(f"phi undefined for SA value {j}")
        return self._engine.phi(j)

    def locate(self, pattern: bytes, max_hits=None, max_range=None) -> Tuple[CountResult, List[Hit]]:
        """Count ``pattern`` and list its occurrences if it matches in full.

        ``max_range`` suppresses enumeration for patterns occurring more than
        that many times; ``max_hits`` caps how many hits are listed.  The
        returned count always reports the full number of occurrences.
        """
        m, (matched, lo, hi, toehold) = self._search(pattern)
        result = CountResult(matched, m, hi - lo if matched else 0)
        if matched < m:
            return result, []
        occ = result.occurrences
        if max_range is not None and occ > max_range:
            return result, []
        k = occ if max_hits is None else min(occ, max_hits)
        return result, [Hit(j) for j in self._engine.walk(toehold, k)]


def rank(index, symbol, i):
    return index.rank(symbol, i)


def lf(index, i):
    return index.lf(i)


def full_range(index):
    return index.full_range()


def backward_step(index, rng, symbol):
    return index.backward_step(rng, symbol)


def count_longest_suffix(index, pattern):
    return index.count_longest_suffix(pattern)


def phi(index, j):
    return index.phi(j)


def locate(index, pattern, max_hits=None, max_range=None):
    return index.locate(pattern, max_hits=max_hits, max_range=max_range)
