"""Representation function r(n), sumset densities, moments, Cauchy-Schwarz.

r(n) counts pairs (p, a) with p prime, a in the full floor-power sumset and
p + a = n.  Moments run over all n <= x; the headline density is reported
among odd n, which is where the representation problem lives.
"""

from dataclasses import dataclass

import numpy as np

from romanoff import kernels, sieve
from romanoff.arith import is_prime
from romanoff.floorpow import ExponentSpec, X_CAP, seq_values, sums_of_powers

# Dense counting arrays only: past this, one run would blow every runtime
# budget in the acceptance suite anyway.
DENSE_CAP = 10**8


@dataclass(frozen=True)
class ExponentSumSet:
    """Distinct values 2**floor(k_1^{r_1}) + ... + 2**floor(k_t^{r_t}) <= bound."""

    bound: int
    values: tuple


@dataclass(frozen=True)
class DensityReport:
    x: int
    odd_total: int
    representable: int
    density: float
    sum_r: int
    sum_r2: int
    cs_lower: float
    representable_all: int  # over all n <= x, for the exact Cauchy-Schwarz check
    density_all: float


def _exponent_lists(spec: ExponentSpec, x: int) -> list:
    max_exp = x.bit_length() - 1
    return [seq_values(r, max_exp) for r in spec.rs]


def exponent_sums(spec: ExponentSpec, x: int) -> ExponentSumSet:
    """The full t-fold sumset (no lambda-thinning), deduplicated and sorted."""
    if x < 1 or x > X_CAP:
        raise ValueError(f"bound {x} out of range [1, 2^62]")
    return ExponentSumSet(bound=x, values=tuple(sums_of_powers(_exponent_lists(spec, x), x)))


def exponent_sum_witnesses(spec: ExponentSpec, x: int) -> dict:
    """Map each sumset value <= x to one exponent tuple producing it.

    Deterministic: coordinates are consumed in order and the first (smallest
    partial value, smallest exponent) writer wins.
    """
    if x < 1 or x > X_CAP:
        raise ValueError(f"bound {x} out of range [1, 2^62]")
    acc = {0: ()}
    for exps in _exponent_lists(spec, x):
        nxt = {}
        for v in sorted(acc):
            tup = acc[v]
            for e in exps:
                w = v + (1 << e)
                if w > x:
                    break
                nxt.setdefault(w, tup + (e,))
        acc = nxt
    return acc


def check_representable(spec: ExponentSpec, n: int):
    """Witness (p, exponent tuple) with p + sum 2**e_i = n, or None.

    Scans sumset values in increasing order, so the witness is deterministic.
    Primality of the complement comes from Miller-Rabin, independent of the
    sieve path used by the bulk experiments.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n < 2:
        return None
    witnesses = exponent_sum_witnesses(spec, n)
    for a in sorted(witnesses):
        p = n - a
        if p >= 2 and is_prime(p):
            return p, witnesses[a]
    return None


def mark_representable(sums: ExponentSumSet, x: int) -> np.ndarray:
    """uint8 bitmap over 0..x: bit n set iff n odd and n - a is prime for some a."""
    if x > DENSE_CAP:
        raise ValueError(f"x = {x} exceeds the dense bitmap cap {DENSE_CAP}")
    offsets = np.array([a for a in sums.values if a <= x], dtype=np.int64)
    flags = sieve.prime_flags(x)
    marked = kernels.or_shifted(flags, offsets, x + 1)
    marked[0::2] = 0  # odd n only
    return marked


def density_report(spec: ExponentSpec, x: int) -> DensityReport:
    """Counts, densities, and the exact first/second moments at scale x."""
    if x < 4:
        raise ValueError(f"need x >= 4, got {x}")
    if x > DENSE_CAP:
        raise ValueError(f"x = {x} exceeds the dense counting cap {DENSE_CAP}")
    offsets = np.array(exponent_sums(spec, x).values, dtype=np.int64)
    flags = sieve.prime_flags(x)
    counts = kernels.add_shifted(flags, offsets, x + 1)
    sum_r, sum_r2, nnz_all, nnz_odd = kernels.moment_stats(counts)
    odd_total = (x - 1) // 2
    # Cauchy-Schwarz, exact in integers: (sum r)^2 <= #{r>=1} * sum r^2
    assert sum_r * sum_r <= nnz_all * sum_r2
    return DensityReport(
        x=x,
        odd_total=odd_total,
        representable=nnz_odd,
        density=nnz_odd / odd_total,
        sum_r=sum_r,
        sum_r2=sum_r2,
        cs_lower=(sum_r * sum_r) / (x * sum_r2) if sum_r2 else 0.0,
        representable_all=nnz_all,
        density_all=nnz_all / x,
    )


def dichotomy_experiment(spec: ExponentSpec, x_grid: list) -> list:
    """One report per scale; the grid must be increasing."""
    if list(x_grid) != sorted(set(x_grid)):
        raise ValueError(f"x grid must be strictly increasing, got {x_grid}")
    return [density_report(spec, x) for x in x_grid]


def upper_bound_density(spec: ExponentSpec, x: int) -> float:
    """The trivial counting bound pi(x) * |sumset| / x (can exceed 1)."""
    if x < 1 or x > X_CAP:
        raise ValueError(f"bound {x} out of range [1, 2^62]")
    size = len(exponent_sums(spec, x).values)
    if size == 0:
        return 0.0
    return sieve.prime_count(x) * size / x
