"""Congruences 2**floor(k^r) = g (mod d) and the order-based machinery on top.

The exponent-form reduction replaces the congruence by floor(k^r) = l modulo
the order of 2; counting, gap analysis, the weighted d-sums and the
order-series partial sums all live here.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from romanoff.arith import factorize, mult_order2, pow_mod
from romanoff.floorpow import floor_pow
from romanoff.sawtooth import ExponentPair


@dataclass(frozen=True)
class CongruenceQuery:
    d: int
    g: int
    r: Fraction
    k_max: int

    def __post_init__(self):
        if self.d < 1 or self.d % 2 == 0:
            raise ValueError(f"d must be odd and positive, got {self.d}")
        if not 0 <= self.g < self.d:
            raise ValueError(f"g must be a residue mod {self.d}, got {self.g}")


@dataclass(frozen=True)
class ClusterReport:
    """Minimal-gap data for solutions of floor(k^r) = l (mod e2(d))."""

    d: int
    ell: int
    e2: int
    count: int
    min_gap: Optional[int]
    witness_k: Optional[int]
    floor_diff: Optional[int]  # floor((k'+L)^r) - floor(k'^r), exact
    implied_bound: Optional[float]  # (k'+L)^r - k'^r + 1
    bound_satisfied: Optional[bool]


@dataclass(frozen=True)
class WeightedSums:
    X: float
    r1: Fraction
    pair: ExponentPair
    w1: float
    w2: float
    w3: float
    d_count: int  # admissible d actually summed (d = 1 included)
    e2_cutoff: float
    smooth_cutoff: float


@dataclass(frozen=True)
class EtPartialSum:
    n: int
    eps: float
    partial: float
    # complete dyadic blocks (2^j, 2^{j+1}] <= n, as (j, lo, hi, value)
    increments: tuple


@lru_cache(maxsize=32)
def _floor_pows(r: Fraction, k_max: int) -> tuple:
    return tuple(floor_pow(k, r) for k in range(1, k_max + 1))


def count_solutions_bruteforce(q: CongruenceQuery) -> int:
    """#{k <= k_max : 2**floor(k^r) = g (mod d)} by direct evaluation (the oracle)."""
    g = q.g % q.d
    return sum(1 for e in _floor_pows(q.r, q.k_max) if pow_mod(2, e, q.d) == g)


def reduce_congruence(d: int, g: int) -> Optional[int]:
    """Discrete log of g in the cyclic group <2> mod d, or None if unsolvable.

    Returns l in [0, e2(d)) with 2**l = g (mod d).  Baby-step giant-step over
    the order; a direct scan is cheaper below 64.
    """
    if d < 1 or d % 2 == 0:
        raise ValueError(f"d must be odd and positive, got {d}")
    g = g % d
    if d == 1:
        return 0
    if math.gcd(g, d) > 1:
        return None
    order = mult_order2(d)
    if order < 64:
        c = 1
        for ell in range(order):
            if c == g:
                return ell
            c = c * 2 % d
        return None
    m = math.isqrt(order) + 1
    baby = {}
    c = 1
    for j in range(m):
        baby.setdefault(c, j)
        c = c * 2 % d
    giant = pow(pow(2, m, d), -1, d)
    c = g
    for i in range(m + 1):
        if c in baby:
            return (i * m + baby[c]) % order
        c = c * giant % d
    return None


def count_solutions_reduced(d: int, ell: int, r: Fraction, k_max: int) -> int:
    """#{k <= k_max : floor(k^r) = ell (mod e2(d))} with exact floors."""
    e2 = mult_order2(d)
    if not 0 <= ell < e2:
        raise ValueError(f"ell must lie in [0, e2(d)) = [0, {e2})")
    return sum(1 for e in _floor_pows(r, k_max) if e % e2 == ell)


def cluster_gap_analysis(d: int, ell: int, r: Fraction, k_max: int) -> ClusterReport:
    """Minimal gap between consecutive solutions beyond sqrt(k_max), plus the
    order bound e2(d) <= (k'+L)^r - k'^r + 1 it implies.

    The bound is certified exactly: consecutive solutions have floor values
    differing by a positive multiple of e2(d) (for r >= 1), so
    floor((k'+L)^r) - floor(k'^r) >= e2(d) already implies the real-valued
    inequality.
    """
    e2 = mult_order2(d)
    if not 0 <= ell < e2:
        raise ValueError(f"ell must lie in [0, e2(d)) = [0, {e2})")
    pows = _floor_pows(r, k_max)
    sols = [k for k, e in enumerate(pows, start=1) if e % e2 == ell]
    threshold = math.isqrt(k_max)
    tail = [k for k in sols if k > threshold]
    if len(tail) < 2:
        return ClusterReport(d, ell, e2, len(sols), None, None, None, None, None)
    gaps = [(tail[i + 1] - tail[i], tail[i]) for i in range(len(tail) - 1)]
    min_gap, witness = min(gaps)
    lo, hi = pows[witness - 1], floor_pow(witness + min_gap, r)
    diff = hi - lo
    rf = r.numerator / r.denominator
    implied = (witness + min_gap) ** rf - witness**rf + 1.0
    return ClusterReport(
        d=d,
        ell=ell,
        e2=e2,
        count=len(sols),
        min_gap=min_gap,
        witness_k=witness,
        floor_diff=diff,
        implied_bound=implied,
        bound_satisfied=diff >= e2 or e2 == 1,
    )


@lru_cache(maxsize=None)
def _order_of_odd_prime(p: int) -> int:
    return mult_order2(p)


def weighted_sums(X: float, r1: Fraction, pair: ExponentPair) -> WeightedSums:
    """The three weighted sums over admissible squarefree odd smooth d.

    Admissible: d squarefree, odd, P+(d) < log X and
    e2(d) <= (log X)^(1 - 1/r1) * log log X; d = 1 always qualifies.
    """
    if X < math.exp(math.e):
        raise ValueError(f"need X >= e^e so that log log X > 1, got {X}")
    if r1 <= 1:
        raise ValueError(f"need r1 > 1, got {r1}")
    log_x = math.log(X)
    inv_r1 = 1 / float(r1)
    e2_cutoff = log_x ** (1 - inv_r1) * math.log(log_x)
    kappa, lam = float(pair.kappa), float(pair.lambda_)
    w2_logx_exp = inv_r1 * (float(r1) * kappa + lam) / (1 + kappa)
    w2_e2_exp = -kappa / (1 + kappa)

    primes = [p for p in range(3, math.ceil(log_x)) if p < log_x and _is_small_prime(p)]
    if len(primes) > 24:
        raise ValueError(f"{len(primes)} smooth primes is past desk scale")

    w1 = w2 = w3 = 0.0
    d_count = 0

    def visit(idx: int, d: int, e2: int):
        nonlocal w1, w2, w3, d_count
        # e2 only grows under lcm, so supersets of an inadmissible d are pruned
        if e2 > e2_cutoff:
            return
        d_count += 1
        w1 += (1 / d) * log_x**inv_r1 / e2
        w2 += (1 / d) * log_x**w2_logx_exp * e2**w2_e2_exp
        w3 += (1 / d) * e2**inv_r1
        for j in range(idx, len(primes)):
            p = primes[j]
            visit(j + 1, d * p, math.lcm(e2, _order_of_odd_prime(p)))

    visit(0, 1, 1)
    return WeightedSums(
        X=X,
        r1=r1,
        pair=pair,
        w1=w1,
        w2=w2,
        w3=w3,
        d_count=d_count,
        e2_cutoff=e2_cutoff,
        smooth_cutoff=log_x,
    )


def _is_small_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, math.isqrt(p) + 1))


def _order_table(n: int) -> list:
    """e2(d) for every odd d <= n, computed multiplicatively via factorization."""
    cache = {}

    def order_pp(p: int, e: int) -> int:
        key = (p, e)
        if key not in cache:
            cache[key] = mult_order2(p**e)
        return cache[key]

    out = [0] * (n + 1)
    if n >= 1:
        out[1] = 1
    for d in range(3, n + 1, 2):
        m = 1
        for p, e in factorize(d).items():
            m = math.lcm(m, order_pp(p, e))
        out[d] = m
    return out


def et_partial_sum(N: int, eps: float) -> EtPartialSum:
    """Partial sum of 1/(d * e2(d)^eps) over odd d <= N, with dyadic increments.

    Increments cover only complete blocks (2^j, 2^{j+1}] <= N; the d = 1 term
    and any truncated tail block still count toward the partial sum.
    """
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    if eps <= 0:
        raise ValueError(f"need eps > 0, got {eps}")
    orders = _order_table(N)
    total = 1.0  # d = 1, e2 = 1
    blocks = []
    j, lo, hi = 0, 1, 2
    block_sum = 0.0
    for d in range(3, N + 1, 2):
        while d > hi:
            if hi <= N:
                blocks.append((j, lo, hi, block_sum))
            block_sum = 0.0
            j, lo, hi = j + 1, hi, hi * 2
        term = 1.0 / (d * orders[d] ** eps)
        total += term
        block_sum += term
    if hi <= N:
        blocks.append((j, lo, hi, block_sum))
    return EtPartialSum(n=N, eps=eps, partial=total, increments=tuple(blocks))
