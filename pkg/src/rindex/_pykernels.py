"""Pure-Python kernels. Used when the compiled extension is unavailable.

Every function here has a twin in ``_ckernels.pyx`` with the same signature
and the same results; ``tests/test_backends.py`` checks that they agree.
"""

import numpy as np

NAME = "python"


def sais(text, alphabet_size):
    """Suffix array of ``text`` (ints in ``[0, alphabet_size)``) by induced sorting.

    The last symbol must be the unique smallest one.
    """
    s = np.asarray(text).tolist()
    return np.asarray(_sais(s, alphabet_size), dtype=np.int64)


def _bucket_bounds(counts, ends):
    bounds = []
    total = 0
    for c in counts:
        total += c
        bounds.append(total if ends else total - c)
    return bounds


def _induce(s, sa, stype, counts, lms_sorted):
    n = len(s)
    for i in range(n):
        sa[i] = -1
    tails = _bucket_bounds(counts, True)
    for p in reversed(lms_sorted):
        c = s[p]
        tails[c] -= 1
        sa[tails[c]] = p
    heads = _bucket_bounds(counts, False)
    for i in range(n):
        j = sa[i] - 1
        if j >= 0 and not stype[j]:
            c = s[j]
            sa[heads[c]] = j
            heads[c] += 1
    tails = _bucket_bounds(counts, True)
    for i in range(n - 1, -1, -1):
        j = sa[i] - 1
        if j >= 0 and stype[j]:
            c = s[j]
            tails[c] -= 1
            sa[tails[c]] = j


def _sais(s, k):
    n = len(s)
    if n == 1:
        return [0]
    stype = [False] * n
    stype[n - 1] = True
    for i in range(n - 2, -1, -1):
        a, b = s[i], s[i + 1]
        stype[i] = a < b or (a == b and stype[i + 1])
    is_lms = [False] * n
    lms = []
    for i in range(1, n):
        if stype[i] and not stype[i - 1]:
            is_lms[i] = True
            lms.append(i)

    counts = [0] * k
    for c in s:
        counts[c] += 1

    sa = [-1] * n
    _induce(s, sa, stype, counts, lms)

    # name LMS substrings in their induced order
    names = [-1] * n
    name = -1
    prev = -1
    for p in sa:
        if not is_lms[p]:
            continue
        if prev < 0:
            name += 1
        else:
            d = 0
            while True:
                if s[p + d] != s[prev + d] or stype[p + d] != stype[prev + d]:
                    name += 1
                    break
                if d > 0 and (is_lms[p + d] or is_lms[prev + d]):
                    break
                d += 1
        names[p] = name
        prev = p
    reduced = [names[p] for p in lms]
    m = len(lms)
    if name + 1 < m:
        sub = _sais(reduced, name + 1)
    else:
        sub = [0] * m
        for i, v in enumerate(reduced):
            sub[v] = i
    _induce(s, sa, stype, counts, [lms[i] for i in sub])
    return sa


class RunIndex:
    """Query engine over a run-length BWT.

    Array arguments are numpy arrays; they are copied to lists because
    indexing lists is much faster than indexing numpy scalars from Python.
    """

    backend = NAME

    def __init__(self, n, run_heads, run_starts, mark_words, mark_ranks,
                 runs_before, cum_lengths, sym_runs, sym_run_offsets, C,
                 start_samples, end_samples, phi_keys, phi_values):
        self.n = int(n)
        self.run_heads = np.asarray(run_heads).tolist()
        self.run_starts = np.asarray(run_starts).tolist()
        self.mark_words = [int(w) for w in np.asarray(mark_words, dtype=np.uint64)]
        self.mark_ranks = np.asarray(mark_ranks).tolist()
        self.sigma = len(C)
        # runs_before is row-major (r + 1) x sigma
        self.runs_before = np.asarray(runs_before).tolist()
        self.cum_lengths = np.asarray(cum_lengths).tolist()
        self.sym_runs = np.asarray(sym_runs).tolist()
        self.sym_run_offsets = np.asarray(sym_run_offsets).tolist()
        self.C = np.asarray(C).tolist()
        self.start_samples = np.asarray(start_samples).tolist()
        self.end_samples = np.asarray(end_samples).tolist()
        self.phi_keys = np.asarray(phi_keys).tolist()
        self.phi_values = np.asarray(phi_values).tolist()

    def _run_of(self, i):
        # index of the run holding BWT position i, via rank1 on the run-start marks
        w = i >> 6
        word = self.mark_words[w] & ((2 << (i & 63)) - 1)
        return self.mark_ranks[w] + word.bit_count() - 1

    def rank(self, c, i):
        if i <= 0:
            return 0
        j = self._run_of(i - 1)
        sigma = self.sigma
        k = self.runs_before[j * sigma + c]
        total = self.cum_lengths[self.sym_run_offsets[c] + c + k]
        if self.run_heads[j] == c:
            total += i - self.run_starts[j]
        return total

    def access(self, i):
        return self.run_heads[self._run_of(i)]

    def lf(self, i):
        c = self.access(i)
        return self.C[c] + self.rank(c, i)

    def step(self, lo, hi, toehold, c):
        """One backward-search step; returns ``(lo, hi, toehold)``, toehold -1 when empty."""
        nlo = self.C[c] + self.rank(c, lo)
        nhi = self.C[c] + self.rank(c, hi)
        if nlo >= nhi:
            return nlo, nhi, -1
        j = self._run_of(hi - 1)
        if self.run_heads[j] == c:
            t = toehold
        else:
            k = self.runs_before[j * self.sigma + c]
            last = self.sym_runs[self.sym_run_offsets[c] + k - 1]
            t = self.end_samples[last]
        t -= 1
        if t < 0:
            t += self.n
        return nlo, nhi, t

    def count(self, pattern):
        """Longest-suffix backward search.

        Returns ``(matched, lo, hi, toehold)`` for the last non-empty range.
        """
        pattern = np.asarray(pattern, dtype=np.uint8).tobytes()
        lo, hi, t = 0, self.n, self.end_samples[-1]
        matched = 0
        for idx in range(len(pattern) - 1, -1, -1):
            nlo, nhi, nt = self.step(lo, hi, t, pattern[idx])
            if nlo >= nhi:
                break
            lo, hi, t = nlo, nhi, nt
            matched += 1
        return matched, lo, hi, t

    def phi(self, j):
        keys = self.phi_keys
        lo, hi = 0, len(keys)
        while lo < hi:
            mid = (lo + hi) >> 1
            if keys[mid] <= j:
                lo = mid + 1
            else:
                hi = mid
        k = lo - 1
        return self.phi_values[k] + (j - keys[k])

    def walk(self, start, count):
        out = []
        j = start
        for _ in range(count):
            out.append(j)
            if len(out) < count:
                j = self.phi(j)
        return out
