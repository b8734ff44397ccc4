"""Floor-power sequences floor(k**r), the lambda-split, and the sparse sumset.

Exponents are exact rationals throughout: floor(k**(p/q)) is computed as the
exact integer q-th root of k**p, never through floating point, so the sequences
are bit-exact arbitrarily close to perfect powers.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from romanoff.arith import int_root

# Largest admissible sumset bound: keeps every element (and every n tested
# against it) inside one machine word for the array kernels.
X_CAP = 1 << 62

FULL_ROMANOFF = "full_romanoff"
SPLIT = "split"
DEFICIENT = "deficient"


def parse_exponent(text: str) -> Fraction:
    """Parse '3/2' or '1.5' to the same exact rational."""
    try:
        r = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational exponent: {text!r}") from None
    if r <= 0:
        raise ValueError(f"exponent must be positive: {text!r}")
    return r


@dataclass(frozen=True)
class ExponentSpec:
    """The tuple (r_1, ..., r_t) of positive rational exponents."""

    rs: tuple

    def __post_init__(self):
        if len(self.rs) < 1:
            raise ValueError("need at least one exponent")
        if any(r <= 0 for r in self.rs):
            raise ValueError(f"exponents must be positive: {self.rs}")

    @classmethod
    def from_string(cls, text: str) -> "ExponentSpec":
        return cls(tuple(parse_exponent(tok) for tok in text.split(",")))

    @property
    def t(self) -> int:
        return len(self.rs)

    @property
    def inverse_sum(self) -> Fraction:
        return sum((Fraction(1) / r for r in self.rs), Fraction(0))


@dataclass(frozen=True)
class Split:
    """Classification of a spec: which representation regime it falls in.

    kind = "split" carries the index s and the exact thinning exponent
    lam >= 1 with 1/r_1 + ... + 1/r_{s-1} + 1/(lam * r_s) = 1.
    """

    kind: str
    s: Optional[int] = None
    lam: Optional[Fraction] = None


@dataclass(frozen=True)
class SparseSet:
    """Values of the thinned sumset up to `bound`, sorted and distinct."""

    bound: int
    values: tuple


def floor_pow(k: int, r: Fraction) -> int:
    """floor(k ** r) exactly, r = num/den rational > 0."""
    if k < 1:
        raise ValueError(f"floor_pow needs k >= 1, got {k}")
    return int_root(k**r.numerator, r.denominator)


def seq_values(r: Fraction, max_exp: int) -> list:
    """Distinct values of floor(k**r) that are <= max_exp, sorted.

    For r <= 1 consecutive values differ by at most 1, so the value set is
    exactly 1..max_exp; for r > 1 the sequence is strictly increasing in k.
    """
    if max_exp < 1:
        return []
    if r <= 1:
        return list(range(1, max_exp + 1))
    vals = []
    k = 1
    while True:
        v = floor_pow(k, r)
        if v > max_exp:
            break
        vals.append(v)
        k += 1
    return vals


def thinned_seq_values(r: Fraction, lam: Fraction, max_exp: int) -> list:
    """Distinct values of floor(floor(k**lam) ** r) that are <= max_exp, sorted."""
    if max_exp < 1:
        return []
    vals = []
    last = None
    k = 1
    while True:
        v = floor_pow(floor_pow(k, lam), r)
        if v > max_exp:
            break
        if v != last:
            vals.append(v)
            last = v
        k += 1
    return vals


def split_lambda(spec: ExponentSpec) -> Split:
    """Classify a spec and, in the split case, solve for the thinning exponent.

    If some 1/r_i >= 1 the plain power-of-two sequence already appears and no
    thinning is needed; if the inverse sum stays below 1 the spec is deficient.
    Otherwise s is the least index whose partial inverse sum reaches 1 and
    lam = 1 / (r_s * (1 - sum_{i<s} 1/r_i)), all in exact rationals.
    """
    if any(1 / r >= 1 for r in spec.rs):
        return Split(kind=FULL_ROMANOFF)
    if spec.inverse_sum < 1:
        return Split(kind=DEFICIENT)
    partial = Fraction(0)
    for i, r in enumerate(spec.rs, start=1):
        if partial + 1 / r >= 1:
            lam = 1 / (r * (1 - partial))
            assert lam >= 1
            assert partial + 1 / (lam * r) == 1
            return Split(kind=SPLIT, s=i, lam=lam)
        partial += 1 / r
    raise AssertionError("unreachable: inverse_sum >= 1 guarantees a split index")


def _check_bound(x: int) -> None:
    if x < 1:
        raise ValueError(f"bound must be positive, got {x}")
    if x > X_CAP:
        raise ValueError(f"bound {x} exceeds the 2^62 cap")


def sparse_exponent_lists(split: Split, spec: ExponentSpec, x: int) -> list:
    """Per-coordinate attainable exponents <= log2(x) for the thinned sumset."""
    if split.kind != SPLIT:
        raise ValueError(f"sparse set needs a split spec, got kind={split.kind}")
    _check_bound(x)
    max_exp = x.bit_length() - 1  # floor(log2 x)
    lists = [seq_values(spec.rs[i], max_exp) for i in range(split.s - 1)]
    lists.append(thinned_seq_values(spec.rs[split.s - 1], split.lam, max_exp))
    return lists


def sums_of_powers(exponent_lists: list, x: int) -> list:
    """All distinct values sum_i 2**e_i <= x over the Cartesian product, sorted.

    Partial sums are kept <= x at every stage, which prunes the enumeration
    (summands are positive, so any admissible tuple has admissible prefixes).
    """
    values = {0}
    for exps in exponent_lists:
        if not exps:
            return []
        powers = [1 << e for e in exps]
        values = {v + p for v in values for p in powers if v + p <= x}
        if not values:
            return []
    return sorted(values)


def gen_sparse_set(split: Split, spec: ExponentSpec, x: int) -> SparseSet:
    """Materialize the thinned sumset up to x.

    Elements are 2**floor(k_1^{r_1}) + ... + 2**floor(k_{s-1}^{r_{s-1}})
    + 2**floor(floor(k_s^lam)^{r_s}); coinciding powers merge in binary and
    equal values are deduplicated.  x below the least element gives an empty
    (still valid) set.
    """
    lists = sparse_exponent_lists(split, spec, x)
    return SparseSet(bound=x, values=tuple(sums_of_powers(lists, x)))


def count_sparse(split: Split, spec: ExponentSpec, x: int) -> int:
    """|sparse set up to x|; the enumeration is tiny (O(polylog x)) either way."""
    return len(gen_sparse_set(split, spec, x).values)
