"""Brute-force ground truth, sharing no code path with the enumeration engine.

Everything here evaluates defining sums directly: partitions are listed one by
one, coefficient sequences come from naive product expansion, and the special
counts are small dynamic programs.  Deliberately unoptimized.
"""

from fractions import Fraction
from functools import lru_cache

from .arith import rising_factorial
from .series import TruncatedSeries


def _ascending_partitions(n):
    # Kelleher's accel_asc; yields each partition as an ascending part list
    if n == 0:
        yield []
        return
    a = [0] * (n + 1)
    k = 1
    a[1] = n
    while k != 0:
        x = a[k - 1] + 1
        y = a[k] - 1
        k -= 1
        while x <= y:
            a[k] = x
            y -= x
            k += 1
        a[k] = x + y
        yield a[: k + 1]


def enumerate_partitions(n):
    """Yield each partition of n once, as a {part: multiplicity} dict."""
    if n < 0:
        raise ValueError("n must be non-negative")
    for parts in _ascending_partitions(n):
        freq = {}
        for p in parts:
            freq[p] = freq.get(p, 0) + 1
        yield freq


def count_partitions(n):
    """p(n) by direct enumeration."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return sum(1 for _ in _ascending_partitions(n))


def _bval(b, k):
    return Fraction(b(k)) if callable(b) else Fraction(b[k])


def _weight(freq, b, z):
    z = Fraction(z)
    w = Fraction(1)
    for part, r in freq.items():
        w *= rising_factorial(_bval(b, part), r) / _factorial(r) * z ** r
    return w


@lru_cache(maxsize=None)
def _factorial(r):
    out = 1
    for i in range(2, r + 1):
        out *= i
    return out


def p_direct(n, b, z):
    """Direct evaluation of the partition-sum formula for P(n)."""
    if n == 0:
        return Fraction(1)
    return sum((_weight(freq, b, z) for freq in enumerate_partitions(n)), Fraction(0))


def f_direct(k, n, b, z):
    """Direct evaluation of F_k(n): the r_k-weighted sum over partitions with part k."""
    total = Fraction(0)
    for freq in enumerate_partitions(n):
        rk = freq.get(k, 0)
        if rk:
            total += rk * _weight(freq, b, z)
    return total


def brute_expand(factors, N):
    """Expand prod_k (1 - z q^k)^(-b_k) by multiplying binomial series.

    Each factor contributes sum_r rising(b_k, r)/r! z^r q^(kr), truncated at N.
    """
    out = TruncatedSeries([1], N)
    for z, b in factors:
        z = Fraction(z)
        for k in range(1, N + 1):
            bk = _bval(b, k)
            if bk == 0:
                continue
            coeffs = [Fraction(0)] * (N + 1)
            for r in range(0, N // k + 1):
                coeffs[k * r] = rising_factorial(bk, r) / _factorial(r) * z ** r
            out = out * TruncatedSeries(coeffs)
    return out


@lru_cache(maxsize=None)
def _gap2(n, m):
    # partitions of n into parts >= m whose successive parts differ by >= 2
    if n == 0:
        return 1
    total = 0
    for smallest in range(m, n + 1):
        total += _gap2(n - smallest, smallest + 2)
    return total


def gap2_partition_counts(N):
    """Counts of partitions whose parts mutually differ by at least 2, 0..N."""
    return [_gap2(n, 1) for n in range(N + 1)]
