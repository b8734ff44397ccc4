# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot inner loops (sieve, sumset marking, moments).

Contracts match `romanoff._kernels_py` exactly; both backends are exercised
against each other in the test suite and the benchmark.
"""

import numpy as np


def sieve_odd_segment(long long low, Py_ssize_t count, long long[::1] base_primes):
    """Primality flags for the odd numbers low, low+2, ..., low+2*(count-1)."""
    flags_arr = np.ones(count, dtype=np.uint8)
    cdef unsigned char[::1] flags = flags_arr
    cdef long long hi, p, start
    cdef Py_ssize_t i, j, step
    if count == 0:
        return flags_arr
    hi = low + 2 * (count - 1)
    for i in range(base_primes.shape[0]):
        p = base_primes[i]
        if p * p > hi:
            break
        start = (low + p - 1) // p * p
        if start < p * p:
            start = p * p
        if start % 2 == 0:
            start += p
        if start > hi:
            continue
        j = (start - low) // 2
        step = <Py_ssize_t> p
        while j < count:
            flags[j] = 0
            j += step
    return flags_arr


def or_shifted(const unsigned char[::1] src, long long[::1] offsets, Py_ssize_t length):
    """out[i] = OR over offsets a of src[i - a]."""
    out_arr = np.zeros(length, dtype=np.uint8)
    cdef unsigned char[::1] out = out_arr
    cdef Py_ssize_t a, i, m, k
    cdef Py_ssize_t n = src.shape[0]
    for k in range(offsets.shape[0]):
        a = <Py_ssize_t> offsets[k]
        if a >= length:
            continue
        m = length - a
        if m > n:
            m = n
        for i in range(m):
            out[i + a] |= src[i]
    return out_arr


def add_shifted(const unsigned char[::1] src, long long[::1] offsets, Py_ssize_t length):
    """out[i] = sum over offsets a of src[i - a], as uint32 counts."""
    out_arr = np.zeros(length, dtype=np.uint32)
    cdef unsigned int[::1] out = out_arr
    cdef Py_ssize_t a, i, m, k
    cdef Py_ssize_t n = src.shape[0]
    for k in range(offsets.shape[0]):
        a = <Py_ssize_t> offsets[k]
        if a >= length:
            continue
        m = length - a
        if m > n:
            m = n
        for i in range(m):
            out[i + a] += src[i]
    return out_arr


def pair_count(const unsigned char[::1] flags, Py_ssize_t gap):
    """Number of indices i with flags[i] and flags[i + gap] both set."""
    if gap <= 0:
        raise ValueError(f"gap must be positive, got {gap}")
    cdef Py_ssize_t i
    cdef long long total = 0
    cdef Py_ssize_t n = flags.shape[0]
    if gap >= n:
        return 0
    for i in range(n - gap):
        if flags[i] and flags[i + gap]:
            total += 1
    return total


def moment_stats(const unsigned int[::1] counts):
    """(sum, sum of squares, #nonzero, #nonzero at odd indices >= 3)."""
    cdef long long total = 0, total_sq = 0, nnz = 0, nnz_odd = 0
    cdef long long c
    cdef Py_ssize_t i
    for i in range(counts.shape[0]):
        c = counts[i]
        if c:
            total += c
            total_sq += c * c
            nnz += 1
            if i >= 3 and (i & 1):
                nnz_odd += 1
    return total, total_sq, nnz, nnz_odd
