"""Sawtooth sums psi(Y*k^alpha + theta), exponent pairs, and the dyadic bound.

psi jumps by 1 at integers, so a term whose argument sits near an integer is
recomputed with exact integer arithmetic: floor(k^alpha * 2^B) is an exact
big-integer root, which brackets the argument in a 2^-B window and decides the
fractional part unambiguously.  No term is ever placed by a borderline float.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional, Union

from romanoff.arith import int_root

Real = Union[Fraction, float, int]

# fast-path guard: distance to the nearest integer below which a term is
# recomputed exactly (absolute floor + generous relative slack)
_GUARD_ABS = 1e-9
_GUARD_REL = 1e-12


@dataclass(frozen=True)
class ExponentPair:
    """A van der Corput exponent pair; named lambda_ to avoid the split lambda."""

    kappa: Fraction
    lambda_: Fraction

    def __post_init__(self):
        if not (0 <= self.kappa <= Fraction(1, 2) <= self.lambda_ <= 1):
            raise ValueError(f"({self.kappa}, {self.lambda_}) is outside the exponent-pair box")


@dataclass(frozen=True)
class PsiSumQuery:
    K: float
    Y: Real
    theta: float
    alpha: Fraction

    def __post_init__(self):
        if self.K < 3:
            raise ValueError(f"need K >= 3, got {self.K}")
        if self.Y <= 0:
            raise ValueError(f"need Y > 0, got {self.Y}")
        if abs(self.theta) > 1:
            raise ValueError(f"need |theta| <= 1, got {self.theta}")
        if self.alpha <= 0 or self.alpha.denominator == 1:
            raise ValueError(f"alpha must be positive and non-integer, got {self.alpha}")


@dataclass(frozen=True)
class PsiRangeSum:
    total: float
    s1: float
    s2: float
    split_k: int  # S1 covers k <= split_k, the largest k with k^r <= m
    s1_terms: int


@dataclass(frozen=True)
class PairCondition:
    value: Fraction  # r1 * kappa + lambda_
    satisfied: bool


@dataclass(frozen=True)
class ScanRow:
    alpha: Fraction
    Y: Real
    theta: float
    K: int
    abs_sum: float
    bound: float
    ratio: float


def psi(t: float) -> float:
    """{t} - 1/2, the mean-zero fractional part."""
    return t - math.floor(t) - 0.5


def _psi_term_exact(Y: Fraction, alpha: Fraction, theta: Fraction, k: int) -> float:
    """psi(Y * k^alpha + theta) with the integer part placed exactly."""
    p, q = alpha.numerator, alpha.denominator
    n = k**p
    root = int_root(n, q)
    if root**q == n:  # k^alpha is an exact integer
        arg = Y * root + theta
        return float(arg - math.floor(arg)) - 0.5
    bits = 192
    while True:
        s = int_root(n << (q * bits), q)  # floor(k^alpha * 2^bits)
        lo = Y * Fraction(s, 1 << bits) + theta
        hi = Y * Fraction(s + 1, 1 << bits) + theta
        if math.floor(lo) == math.floor(hi):
            return float(lo - math.floor(lo)) - 0.5
        bits *= 2  # argument extraordinarily close to an integer; tighten


def _psi_term(Y: Real, alpha: Fraction, theta: float, k: int) -> float:
    a = float(Y) * math.pow(k, float(alpha)) + theta
    f = a - math.floor(a)
    if min(f, 1.0 - f) > _GUARD_ABS + abs(a) * _GUARD_REL:
        return f - 0.5
    return _psi_term_exact(Fraction(Y), alpha, Fraction(theta), k)


def psi_sum_dyadic(query: PsiSumQuery) -> float:
    """sum of psi(Y * k^alpha + theta) over K <= k < 2K."""
    k_lo = math.ceil(query.K)
    k_hi = math.ceil(2 * query.K) - 1
    return sum(_psi_term(query.Y, query.alpha, query.theta, k) for k in range(k_lo, k_hi + 1))


def psi_sum_range(r: Fraction, m: int, theta: float, k_lo: int, k_hi: int) -> PsiRangeSum:
    """sum of psi(k^r / m + theta) for k_lo <= k <= k_hi, split at k = m^{1/r}.

    The split point is exact (k^num <= m^den) and the total is defined as
    s1 + s2, so the split is additive by construction.
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    if k_lo > k_hi:
        raise ValueError(f"empty range [{k_lo}, {k_hi}]")
    y = Fraction(1, m)
    split_k = int_root(m**r.denominator, r.numerator)
    cut = min(split_k, k_hi)
    s1 = sum(_psi_term(y, r, theta, k) for k in range(k_lo, cut + 1))
    s2 = sum(_psi_term(y, r, theta, k) for k in range(max(cut + 1, k_lo), k_hi + 1))
    return PsiRangeSum(
        total=s1 + s2,
        s1=s1,
        s2=s2,
        split_k=split_k,
        s1_terms=max(0, cut - k_lo + 1),
    )


def pair_family(q: int) -> ExponentPair:
    """The pair (1/(4Q-2), 1 - (q+1)/(4Q-2)) with Q = 2^q, exact rationals."""
    if q < 1:
        raise ValueError(f"need q >= 1, got {q}")
    denom = 4 * 2**q - 2
    return ExponentPair(kappa=Fraction(1, denom), lambda_=1 - Fraction(q + 1, denom))


def pair_condition(r1: Fraction, pair: ExponentPair) -> PairCondition:
    """Exact evaluation of r1*kappa + lambda_ and the predicate < 1."""
    value = r1 * pair.kappa + pair.lambda_
    return PairCondition(value=value, satisfied=value < 1)


def lemma1_bound(query: PsiSumQuery, pair: ExponentPair) -> float:
    """K^(1-alpha)/Y + Y^(kappa/(1+kappa)) * K^((lambda_+kappa*alpha)/(1+kappa))."""
    K, Y, alpha = query.K, float(query.Y), float(query.alpha)
    kappa, lam = float(pair.kappa), float(pair.lambda_)
    return K ** (1 - alpha) / Y + Y ** (kappa / (1 + kappa)) * K ** ((lam + kappa * alpha) / (1 + kappa))


def lemma1_ratio_scan(alpha_list, Y_list, theta_list, K_list, pair: ExponentPair) -> list:
    """|dyadic psi sum| / lemma-1 bound over the whole parameter grid.

    Rows come out in grid order (alpha, Y, theta, K), so repeat runs are
    byte-identical.
    """
    rows = []
    for alpha, Y, theta, K in product(alpha_list, Y_list, theta_list, K_list):
        query = PsiSumQuery(K=K, Y=Y, theta=theta, alpha=alpha)
        s = abs(psi_sum_dyadic(query))
        bound = lemma1_bound(query, pair)
        rows.append(ScanRow(alpha=alpha, Y=Y, theta=theta, K=K, abs_sum=s, bound=bound, ratio=s / bound))
    return rows


# the default grid used by the CLI `lemma1 --scan default` and the acceptance run
DEFAULT_SCAN_ALPHAS = (Fraction(3, 2), Fraction(5, 2))
DEFAULT_SCAN_YS = (Fraction(1, 3), Fraction(1, 7), Fraction(1, 31))
DEFAULT_SCAN_THETAS = (0.0, 0.37)
DEFAULT_SCAN_KS = tuple(2**j for j in range(8, 15))
DEFAULT_SCAN_PAIR = pair_family(1)
