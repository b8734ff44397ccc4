"""Exact integer arithmetic: modular powers, order of 2, Möbius, P+, integer roots.

Everything here is a pure function of its arguments.  The smallest-prime-factor
table is built lazily, grows on demand and is only ever appended to, so
concurrent readers are safe once it exists.
"""

import math
from dataclasses import dataclass

import numpy as np

# Inputs at or below this bound are factored via the SPF table; anything
# larger falls back to trial division plus deterministic Brent rho.
SPF_TABLE_CAP = 10**7

_spf = None  # lazily built numpy int64 array; _spf[n] = smallest prime factor


@dataclass(frozen=True)
class OrderRecord:
    """(d, e2(d), P+(d), mu(d)) for odd d."""

    d: int
    e2: int
    pplus: int
    mu: int


def pow_mod(base: int, exp: int, modulus: int) -> int:
    """base**exp mod modulus; O(log exp) multiplications, no overflow."""
    if modulus <= 0:
        raise ValueError(f"modulus must be positive, got {modulus}")
    if exp < 0:
        raise ValueError(f"exponent must be nonnegative, got {exp}")
    return pow(base, exp, modulus)


def _ensure_spf(limit: int) -> np.ndarray:
    global _spf
    if _spf is not None and len(_spf) > limit:
        return _spf
    n = max(limit, 10**5)
    # grow in big steps so repeated slightly-larger queries don't rebuild
    n = 1 << n.bit_length()
    n = min(max(n, limit + 1), SPF_TABLE_CAP + 1)
    spf = np.arange(n, dtype=np.int64)
    for p in range(2, math.isqrt(n - 1) + 1):
        if spf[p] == p:
            sl = spf[p * p :: p]
            np.minimum(sl, p, out=sl)
    _spf = spf
    return _spf


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond 64-bit inputs we ever see."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    """Deterministic Brent cycle-finding; returns a nontrivial factor of composite n."""
    if n % 2 == 0:
        return 2
    for c in range(1, 64):
        y, r, q = 2, 1, 1
        g, x, ys = 1, 0, 0
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to factor {n}")


def factorize(n: int) -> dict:
    """Prime factorization {p: e}.  SPF walk when the table covers n."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = {}
    if n <= SPF_TABLE_CAP:
        spf = _ensure_spf(n)
        while n > 1:
            p = int(spf[n])
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
        return out
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _brent_rho(m)
        stack.append(d)
        stack.append(m // d)
    return out


def mobius(d: int) -> int:
    """Möbius function: 0 on non-squarefree d, else (-1)^(number of prime factors)."""
    if d < 1:
        raise ValueError(f"mobius needs d >= 1, got {d}")
    f = factorize(d)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def largest_prime_factor(d: int) -> int:
    """P+(d), with P+(1) = 1."""
    if d < 1:
        raise ValueError(f"P+ needs d >= 1, got {d}")
    if d == 1:
        return 1
    return max(factorize(d))


def _order2_prime_power(p: int, e: int) -> int:
    """Multiplicative order of 2 modulo p**e, p an odd prime."""
    # order mod p divides p-1: strip primes of p-1 that keep 2^m = 1
    m = p - 1
    for q in factorize(p - 1):
        while m % q == 0 and pow(2, m // q, p) == 1:
            m //= q
    # lift: order mod p^e is m * p^j for the least admissible j
    pe = p**e
    while pow(2, m, pe) != 1:
        m *= p
    return m


def mult_order2(d: int) -> int:
    """e2(d): the least m >= 1 with d | 2**m - 1.  Requires odd d; e2(1) = 1.

    Computed as the lcm of the orders modulo each prime power of d, then
    checked against the minimality invariant.
    """
    if d < 1:
        raise ValueError(f"e2 needs d >= 1, got {d}")
    if d % 2 == 0:
        raise ValueError(f"e2 is defined for odd d only, got {d}")
    if d == 1:
        return 1
    m = 1
    for p, e in factorize(d).items():
        m = math.lcm(m, _order2_prime_power(p, e))
    assert pow(2, m, d) == 1
    for q in factorize(m):
        assert pow(2, m // q, d) != 1, (d, m, q)
    return m


def order_record(d: int) -> OrderRecord:
    return OrderRecord(d=d, e2=mult_order2(d), pplus=largest_prime_factor(d), mu=mobius(d))


def int_root(n: int, q: int) -> int:
    """floor(n ** (1/q)) exactly, for n >= 0, q >= 1.

    A float (or Newton) estimate seeds the answer; the final while loops make
    the result exact even right at perfect powers.
    """
    if q < 1:
        raise ValueError(f"root index must be >= 1, got {q}")
    if n < 0:
        raise ValueError(f"int_root needs n >= 0, got {n}")
    if q == 1 or n < 2:
        return n
    if q == 2:
        return math.isqrt(n)
    if q >= n.bit_length():
        return 1
    if n.bit_length() <= 52:
        v = int(n ** (1.0 / q))
    else:
        # integer Newton, converging from above
        v = 1 << -(-n.bit_length() // q)
        while True:
            w = ((q - 1) * v + n // v ** (q - 1)) // q
            if w >= v:
                break
            v = w
    while v**q > n:
        v -= 1
    while (v + 1) ** q <= n:
        v += 1
    return v


def divisors(n: int) -> list:
    """All positive divisors of n, sorted."""
    ds = [1]
    for p, e in factorize(n).items():
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)
