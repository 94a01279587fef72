# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same interface and results as ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int32_t, int64_t, uint8_t, uint64_t

cnp.import_array()

NAME = "cython"


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef void _bucket_bounds(int64_t[::1] counts, int64_t[::1] out, bint ends) noexcept nogil:
    cdef int64_t total = 0
    cdef Py_ssize_t c
    for c in range(counts.shape[0]):
        total += counts[c]
        out[c] = total if ends else total - counts[c]


cdef void _induce(const int32_t[::1] s, int64_t[::1] sa, uint8_t[::1] stype,
                  int64_t[::1] counts, int64_t[::1] bkt,
                  const int64_t[::1] lms_sorted) noexcept nogil:
    cdef Py_ssize_t n = s.shape[0], i
    cdef int64_t j
    cdef int32_t c
    for i in range(n):
        sa[i] = -1
    _bucket_bounds(counts, bkt, True)
    for i in range(lms_sorted.shape[0] - 1, -1, -1):
        j = lms_sorted[i]
        c = s[j]
        bkt[c] -= 1
        sa[bkt[c]] = j
    _bucket_bounds(counts, bkt, False)
    for i in range(n):
        j = sa[i] - 1
        if j >= 0 and not stype[j]:
            c = s[j]
            sa[bkt[c]] = j
            bkt[c] += 1
    _bucket_bounds(counts, bkt, True)
    for i in range(n - 1, -1, -1):
        j = sa[i] - 1
        if j >= 0 and stype[j]:
            c = s[j]
            bkt[c] -= 1
            sa[bkt[c]] = j


cdef _sais(const int32_t[::1] s, int64_t k):
    cdef Py_ssize_t n = s.shape[0], i, m, d
    cdef int64_t p, prev, name
    sa_arr = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] sa = sa_arr
    if n == 1:
        sa[0] = 0
        return sa_arr
    stype_arr = np.zeros(n, dtype=np.uint8)
    cdef uint8_t[::1] stype = stype_arr
    is_lms_arr = np.zeros(n, dtype=np.uint8)
    cdef uint8_t[::1] is_lms = is_lms_arr
    counts_arr = np.zeros(k, dtype=np.int64)
    cdef int64_t[::1] counts = counts_arr
    cdef int64_t[::1] bkt = np.empty(k, dtype=np.int64)

    stype[n - 1] = 1
    m = 0
    with nogil:
        for i in range(n - 2, -1, -1):
            stype[i] = s[i] < s[i + 1] or (s[i] == s[i + 1] and stype[i + 1])
        for i in range(1, n):
            if stype[i] and not stype[i - 1]:
                is_lms[i] = 1
                m += 1
        for i in range(n):
            counts[s[i]] += 1

    lms_arr = np.empty(m, dtype=np.int64)
    cdef int64_t[::1] lms = lms_arr
    m = 0
    for i in range(1, n):
        if is_lms[i]:
            lms[m] = i
            m += 1

    _induce(s, sa, stype, counts, bkt, lms)

    names_arr = np.full(n, -1, dtype=np.int64)
    cdef int64_t[::1] names = names_arr
    name = -1
    prev = -1
    with nogil:
        for i in range(n):
            p = sa[i]
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

    reduced_arr = np.empty(m, dtype=np.int32)
    cdef int32_t[::1] reduced = reduced_arr
    for i in range(m):
        reduced[i] = <int32_t>names[lms[i]]
    cdef int64_t[::1] sub
    if name + 1 < m:
        sub = _sais(reduced, name + 1)
    else:
        sub = np.empty(m, dtype=np.int64)
        for i in range(m):
            sub[reduced[i]] = i
    sorted_arr = np.empty(m, dtype=np.int64)
    cdef int64_t[::1] lms_sorted = sorted_arr
    for i in range(m):
        lms_sorted[i] = lms[sub[i]]
    _induce(s, sa, stype, counts, bkt, lms_sorted)
    return sa_arr


def sais(text, alphabet_size):
    """Suffix array of ``text`` (ints in ``[0, alphabet_size)``) by induced sorting."""
    s = np.ascontiguousarray(text, dtype=np.int32)
    return _sais(s, alphabet_size)


cdef class RunIndex:
    """Query engine over a run-length BWT."""

    cdef readonly int64_t n
    cdef int64_t sigma
    cdef const uint8_t[::1] run_heads
    cdef const int64_t[::1] run_starts
    cdef const uint64_t[::1] mark_words
    cdef const int64_t[::1] mark_ranks
    cdef const int64_t[::1] runs_before
    cdef const int64_t[::1] cum_lengths
    cdef const int64_t[::1] sym_runs
    cdef const int64_t[::1] sym_run_offsets
    cdef const int64_t[::1] C
    cdef const int64_t[::1] start_samples
    cdef const int64_t[::1] end_samples
    cdef const int64_t[::1] phi_keys
    cdef const int64_t[::1] phi_values
    cdef object _keep

    backend = NAME

    def __init__(self, n, run_heads, run_starts, mark_words, mark_ranks,
                 runs_before, cum_lengths, sym_runs, sym_run_offsets, C,
                 start_samples, end_samples, phi_keys, phi_values):
        i64 = lambda a: np.ascontiguousarray(a, dtype=np.int64)
        arrays = (np.ascontiguousarray(run_heads, dtype=np.uint8), i64(run_starts),
                  np.ascontiguousarray(mark_words, dtype=np.uint64), i64(mark_ranks),
                  i64(runs_before), i64(cum_lengths), i64(sym_runs), i64(sym_run_offsets),
                  i64(C), i64(start_samples), i64(end_samples), i64(phi_keys), i64(phi_values))
        self._keep = arrays
        self.n = n
        self.sigma = len(C)
        (self.run_heads, self.run_starts, self.mark_words, self.mark_ranks,
         self.runs_before, self.cum_lengths, self.sym_runs, self.sym_run_offsets,
         self.C, self.start_samples, self.end_samples, self.phi_keys,
         self.phi_values) = arrays

    cdef inline int64_t _run_of(self, int64_t i) noexcept nogil:
        cdef int64_t w = i >> 6
        cdef int b = i & 63
        cdef uint64_t mask = (<uint64_t>2 << b) - 1 if b < 63 else <uint64_t>0xFFFFFFFFFFFFFFFF
        return self.mark_ranks[w] + __builtin_popcountll(self.mark_words[w] & mask) - 1

    cdef inline int64_t _rank(self, int c, int64_t i) noexcept nogil:
        if i <= 0:
            return 0
        cdef int64_t j = self._run_of(i - 1)
        cdef int64_t k = self.runs_before[j * self.sigma + c]
        cdef int64_t total = self.cum_lengths[self.sym_run_offsets[c] + c + k]
        if self.run_heads[j] == c:
            total += i - self.run_starts[j]
        return total

    cdef inline void _step(self, int64_t lo, int64_t hi, int64_t toehold, int c,
                           int64_t* out) noexcept nogil:
        cdef int64_t nlo = self.C[c] + self._rank(c, lo)
        cdef int64_t nhi = self.C[c] + self._rank(c, hi)
        cdef int64_t j, k, t
        out[0] = nlo
        out[1] = nhi
        if nlo >= nhi:
            out[2] = -1
            return
        j = self._run_of(hi - 1)
        if self.run_heads[j] == c:
            t = toehold
        else:
            k = self.runs_before[j * self.sigma + c]
            t = self.end_samples[self.sym_runs[self.sym_run_offsets[c] + k - 1]]
        t -= 1
        if t < 0:
            t += self.n
        out[2] = t

    cdef inline int64_t _phi(self, int64_t j) noexcept nogil:
        cdef Py_ssize_t lo = 0, hi = self.phi_keys.shape[0], mid
        while lo < hi:
            mid = (lo + hi) >> 1
            if self.phi_keys[mid] <= j:
                lo = mid + 1
            else:
                hi = mid
        return self.phi_values[lo - 1] + (j - self.phi_keys[lo - 1])

    def rank(self, int c, int64_t i):
        return self._rank(c, i)

    def access(self, int64_t i):
        return self.run_heads[self._run_of(i)]

    def lf(self, int64_t i):
        cdef int c = self.run_heads[self._run_of(i)]
        return self.C[c] + self._rank(c, i)

    def step(self, int64_t lo, int64_t hi, int64_t toehold, int c):
        """One backward-search step; returns ``(lo, hi, toehold)``, toehold -1 when empty."""
        cdef int64_t out[3]
        self._step(lo, hi, toehold, c, out)
        return out[0], out[1], out[2]

    def count(self, pattern):
        """Longest-suffix backward search.

        Returns ``(matched, lo, hi, toehold)`` for the last non-empty range.
        """
        cdef const uint8_t[::1] p = np.ascontiguousarray(pattern, dtype=np.uint8)
        cdef int64_t lo = 0, hi = self.n, t = self.end_samples[self.end_samples.shape[0] - 1]
        cdef int64_t matched = 0
        cdef int64_t out[3]
        cdef Py_ssize_t idx
        with nogil:
            for idx in range(p.shape[0] - 1, -1, -1):
                self._step(lo, hi, t, p[idx], out)
                if out[0] >= out[1]:
                    break
                lo = out[0]
                hi = out[1]
                t = out[2]
                matched += 1
        return matched, lo, hi, t

    def phi(self, int64_t j):
        return self._phi(j)

    def walk(self, int64_t start, Py_ssize_t count):
        out_arr = np.empty(count, dtype=np.int64)
        cdef int64_t[::1] out = out_arr
        cdef int64_t j = start
        cdef Py_ssize_t i
        with nogil:
            for i in range(count):
                out[i] = j
                if i + 1 < count:
                    j = self._phi(j)
        return out_arr.tolist()
