"""Segmented Eratosthenes sieve, prime-pair counts, and Mertens-type sums.

The bitmap is odd-only (one byte per odd number; 2 is special-cased), and all
segment work goes through the selected kernel backend.  Segments are
independent work units: counts merge by addition, flags by concatenation.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from romanoff import kernels
from romanoff.arith import factorize

DEFAULT_SEGMENT = 1 << 20  # numbers per segment; cache-resident by default


def _odd_base_primes(limit: int) -> np.ndarray:
    """Odd primes <= limit, by a small monolithic sieve (int64 for the kernels)."""
    if limit < 3:
        return np.zeros(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    primes = np.flatnonzero(flags).astype(np.int64)
    return primes[primes % 2 == 1]


@dataclass
class PrimeTable:
    """Odd-only primality bitmap for the odd numbers in [lo, limit].

    bits[i] flags lo_odd + 2*i, where lo_odd is the first odd value >= lo.
    The prime 2 never appears in the bitmap and is special-cased in counts.
    """

    lo: int
    limit: int
    bits: np.ndarray

    @property
    def lo_odd(self) -> int:
        return self.lo if self.lo % 2 == 1 else self.lo + 1

    def is_prime(self, n: int) -> bool:
        if n == 2:
            return self.lo <= 2 <= self.limit
        if n < self.lo or n > self.limit or n % 2 == 0:
            return False
        return bool(self.bits[(n - self.lo_odd) // 2])

    def count(self) -> int:
        two = 1 if self.lo <= 2 <= self.limit else 0
        return two + int(np.count_nonzero(self.bits))

    def primes(self) -> list:
        out = [2] if self.lo <= 2 <= self.limit else []
        out.extend((self.lo_odd + 2 * np.flatnonzero(self.bits)).tolist())
        return out


def sieve_range(lo: int, hi: int, segment_size: int = DEFAULT_SEGMENT) -> PrimeTable:
    """Primality bitmap for [lo, hi] via segmented sieving with base primes <= sqrt(hi)."""
    if lo < 0 or hi < lo:
        raise ValueError(f"bad range [{lo}, {hi}]")
    if hi > 1 << 62:
        raise ValueError(f"range end {hi} exceeds the 2^62 cap")
    base = _odd_base_primes(math.isqrt(hi))
    first = lo if lo % 2 == 1 else lo + 1
    chunks = []
    odd_per_seg = max(segment_size // 2, 1)
    start = first
    while start <= hi:
        count = min(odd_per_seg, (hi - start) // 2 + 1)
        chunks.append(kernels.sieve_odd_segment(start, count, base))
        start += 2 * count
    bits = np.concatenate(chunks) if chunks else np.zeros(0, dtype=np.uint8)
    if first == 1 and len(bits):
        bits[0] = 0
    return PrimeTable(lo=lo, limit=hi, bits=bits)


def prime_flags(x: int, segment_size: int = DEFAULT_SEGMENT) -> np.ndarray:
    """uint8 array over 0..x with 1 exactly at primes (both parities)."""
    table = sieve_range(0, x, segment_size)
    flags = np.zeros(x + 1, dtype=np.uint8)
    if x >= 2:
        flags[2] = 1
    if x >= 1:
        flags[1::2] = table.bits
    return flags


def prime_count(x: int, segment_size: int = DEFAULT_SEGMENT) -> int:
    """pi(x), summing per-segment counts without keeping the whole bitmap."""
    if x < 2:
        return 0
    base = _odd_base_primes(math.isqrt(x))
    total = 1  # the prime 2
    odd_per_seg = max(segment_size // 2, 1)
    start = 1
    while start <= x:
        count = min(odd_per_seg, (x - start) // 2 + 1)
        bits = kernels.sieve_odd_segment(start, count, base)
        if start == 1:
            bits[0] = 0
        total += int(np.count_nonzero(bits))
        start += 2 * count
    return total


def prime_pairs_count(x: int, h: int, segment_size: int = DEFAULT_SEGMENT) -> int:
    """pi_2(x, h): pairs of primes at distance |h| with the larger one <= x.

    For odd h one prime must be 2, so the count is 0 or 1; the even case is a
    shifted-AND over the bitmap.
    """
    if h == 0:
        raise ValueError("h must be nonzero")
    h = abs(h)
    if h > x:
        return 0
    if h % 2 == 1:
        table = sieve_range(0, x, segment_size)
        return 1 if (2 + h <= x and table.is_prime(2 + h)) else 0
    flags = prime_flags(x, segment_size)
    return kernels.pair_count(flags, h)


def singular_product(h: int) -> Fraction:
    """prod over distinct primes p | h of (1 + 1/p), exact; 1 for |h| = 1."""
    if h == 0:
        raise ValueError("singular product undefined for h = 0")
    out = Fraction(1)
    for p in factorize(abs(h)):
        out *= Fraction(p + 1, p)
    return out


def prime_recip_sum(z: float, segment_size: int = DEFAULT_SEGMENT) -> float:
    """sum of 1/p over odd primes 2 < p < z, in double precision."""
    if z < 3:
        raise ValueError(f"need z >= 3, got {z}")
    limit = math.ceil(z) - 1  # largest integer < z
    if limit < 3:
        return 0.0
    table = sieve_range(3, limit, segment_size)
    values = 3 + 2 * np.flatnonzero(table.bits)
    return float(np.sum(1.0 / values))
