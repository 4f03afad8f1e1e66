"""Exact integer arithmetic and divisor machinery.

Everything works on Python ints, which are arbitrary precision, so counts
like 5**12 and far beyond are exact by construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cache


def binomial(n: int, k: int) -> int:
    """C(n, k) as an exact integer; 0 when k > n."""
    return math.comb(n, k)


def divisors(n: int) -> list[int]:
    """All divisors of n >= 1, in increasing order."""
    if n < 1:
        raise ValueError(f"divisors requires n >= 1, got {n}")
    small = []
    large = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    large.reverse()
    return small + large


def factorize(k: int) -> list[tuple[int, int]]:
    """Prime factorization of k >= 1 as (prime, exponent) pairs, primes increasing.

    factorize(1) is the empty product []. Trial division only: inputs here
    are string lengths, not cryptographic moduli.
    """
    if k < 1:
        raise ValueError(f"factorize requires k >= 1, got {k}")
    factors = []
    p = 2
    while p * p <= k:
        if k % p == 0:
            e = 0
            while k % p == 0:
                k //= p
                e += 1
            factors.append((p, e))
        p += 1
    if k > 1:
        factors.append((k, 1))
    return factors


def q_coefficient(nu: int) -> int:
    """Signed squarefree indicator: (-1)**m when nu is a product of m distinct
    primes, 0 when any prime repeats (the classical Moebius function).

    q_coefficient(1) is +1, the empty product of zero primes.
    """
    if nu < 1:
        raise ValueError(f"q_coefficient requires nu >= 1, got {nu}")
    factors = factorize(nu)
    if any(e > 1 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


@dataclass(frozen=True)
class ChainTally:
    """Ordered factorizations of one integer, counted by parity of their length."""

    even_count: int
    odd_count: int

    @property
    def delta(self) -> int:
        return self.even_count - self.odd_count


@cache
def _parity_counts(k: int) -> tuple[int, int]:
    # (even, odd) counts of ordered factorizations of k into factors >= 2;
    # k = 1 carries the single empty factorization, which is even.
    if k == 1:
        return 1, 0
    even = 0
    odd = 0
    for d in divisors(k):
        if d == 1:
            continue
        sub_even, sub_odd = _parity_counts(k // d)
        # prepending the factor d flips the parity of the tail
        even += sub_odd
        odd += sub_even
    return even, odd


def chain_tally(k: int) -> ChainTally:
    """Count the ordered factorizations k = k1 * k2 * ... * km, all factors >= 2,
    split by even/odd m.

    Each factorization stands for exactly one divisor chain
    1 | k1 | k1*k2 | ... | k, so `delta` is the number of even chains minus the
    number of odd ones. Exponential in the number of prime factors; intended
    for k up to around 10**4.
    """
    if k < 1:
        raise ValueError(f"chain_tally requires k >= 1, got {k}")
    even, odd = _parity_counts(k)
    return ChainTally(even, odd)
