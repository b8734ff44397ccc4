"""Pure-Python (numpy) kernels: the fallback backend for the hot inner loops.

Same contracts as the compiled `_kernels` extension; `romanoff.kernels` picks
whichever is importable.  All arrays are plain numpy: uint8 flags, uint32
counts, int64 offsets.
"""

import numpy as np


def sieve_odd_segment(low: int, count: int, base_primes: np.ndarray) -> np.ndarray:
    """Primality flags for the odd numbers low, low+2, ..., low+2*(count-1).

    `low` must be odd and >= 1; `base_primes` are the odd primes p with
    p*p <= low + 2*(count-1).  The flag for the value 1 (if present) is the
    caller's job; p itself is never cleared.
    """
    flags = np.ones(count, dtype=np.uint8)
    if count == 0:
        return flags
    hi = low + 2 * (count - 1)
    for p in map(int, base_primes):
        if p * p > hi:
            break
        start = max(p * p, ((low + p - 1) // p) * p)
        if start % 2 == 0:
            start += p
        if start > hi:
            continue
        flags[(start - low) // 2 :: p] = 0
    return flags


def or_shifted(src: np.ndarray, offsets: np.ndarray, length: int) -> np.ndarray:
    """out[i] = OR over offsets a of src[i - a] (terms with i < a drop out)."""
    out = np.zeros(length, dtype=np.uint8)
    n = len(src)
    for a in map(int, offsets):
        if a >= length:
            continue
        m = min(length - a, n)
        np.bitwise_or(out[a : a + m], src[:m], out=out[a : a + m])
    return out


def add_shifted(src: np.ndarray, offsets: np.ndarray, length: int) -> np.ndarray:
    """out[i] = sum over offsets a of src[i - a], as uint32 counts."""
    out = np.zeros(length, dtype=np.uint32)
    n = len(src)
    for a in map(int, offsets):
        if a >= length:
            continue
        m = min(length - a, n)
        out[a : a + m] += src[:m]
    return out


def pair_count(flags: np.ndarray, gap: int) -> int:
    """Number of indices i with flags[i] and flags[i + gap] both set."""
    if gap <= 0:
        raise ValueError(f"gap must be positive, got {gap}")
    if gap >= len(flags):
        return 0
    return int(np.count_nonzero(flags[:-gap] & flags[gap:]))


def moment_stats(counts: np.ndarray) -> tuple:
    """(sum, sum of squares, #nonzero, #nonzero at odd indices >= 3)."""
    c = counts.astype(np.int64, copy=False)
    total = int(c.sum())
    total_sq = int(np.dot(c, c))
    nnz = int(np.count_nonzero(c))
    odd = c[3::2]
    nnz_odd = int(np.count_nonzero(odd))
    return total, total_sq, nnz, nnz_odd
