"""Exact integer arithmetic helpers and the two transcendental evaluators.

Everything exact goes through ``int`` and :class:`fractions.Fraction`.  The
only real-valued functions are :func:`zeta_int` and :func:`digamma`, both
returning :class:`mpmath.mpf` values computed at a requested number of
decimal digits.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import mpmath

DEFAULT_DIGITS = 50
GUARD_DIGITS = 10


class PrimeTable:
    """Primes up to ``limit`` by the sieve of Eratosthenes, grown on demand."""

    def __init__(self, limit: int = 1000):
        self.limit = 1
        self.primes: list[int] = []
        self.extend(limit)

    def extend(self, limit: int) -> None:
        if limit <= self.limit:
            return
        limit = max(limit, 2 * self.limit)
        sieve = bytearray([1]) * (limit + 1)
        sieve[0:2] = b"\x00\x00"
        for i in range(2, math.isqrt(limit) + 1):
            if sieve[i]:
                sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
        self.primes = [i for i in range(limit + 1) if sieve[i]]
        self.limit = limit

    def upto(self, n: int) -> list[int]:
        self.extend(n)
        from bisect import bisect_right

        return self.primes[: bisect_right(self.primes, n)]

    def between(self, lo: float, hi: int) -> list[int]:
        """Primes p with lo < p <= hi."""
        return [p for p in self.upto(hi) if p > lo]


PRIMES = PrimeTable()


def primes_upto(n: int) -> list[int]:
    return PRIMES.upto(n)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    PRIMES.extend(p)
    from bisect import bisect_left

    i = bisect_left(PRIMES.primes, p)
    return i < len(PRIMES.primes) and PRIMES.primes[i] == p


@lru_cache(maxsize=4096)
def lcm_upto(N: int) -> int:
    """D_N = lcm(1, ..., N)."""
    if N < 1:
        raise ValueError("lcm_upto needs N >= 1")
    result = 1
    for p in primes_upto(N):
        pk = p
        while pk * p <= N:
            pk *= p
        result *= pk
    return result


def ord_p(x, p: int) -> int:
    """p-adic valuation of a nonzero integer or rational."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("valuation of 0 is undefined")
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def legendre(N: int, p: int) -> int:
    """ord_p(N!) = sum of floor(N / p^i)."""
    v = 0
    while N:
        N //= p
        v += N
    return v


def harmonic(m: int, s: int) -> Fraction:
    """H_s(m) = sum_{l=1}^{m} 1/l^s."""
    if m < 0:
        raise ValueError(f"harmonic sum with negative upper limit {m}")
    return _harmonic_table(s, m)[m]


_HARMONIC: dict[int, list[Fraction]] = {}


def _harmonic_table(s: int, m: int) -> list[Fraction]:
    table = _HARMONIC.setdefault(s, [Fraction(0)])
    while len(table) <= m:
        l = len(table)
        table.append(table[-1] + Fraction(1, l**s))
    return table


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n (with B_1 = -1/2), exact."""
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2:
        return Fraction(0)
    # sum_{k<n+1} binom(n+1, k) B_k = 0
    total = Fraction(0)
    for k in range(n):
        total += math.comb(n + 1, k) * bernoulli(k)
    return -total / (n + 1)


def zeta_int(s: int, digits: int = DEFAULT_DIGITS) -> mpmath.mpf:
    """Riemann zeta at an integer s >= 2 by Euler-Maclaurin summation."""
    if s < 2:
        raise ValueError("zeta_int needs s >= 2")
    return _zeta_cached(s, digits)


@lru_cache(maxsize=256)
def _zeta_cached(s: int, digits: int) -> mpmath.mpf:
    with mpmath.workdps(digits + GUARD_DIGITS):
        # the tail terms shrink like (2m / (2 pi N))^(2m); N = m keeps the
        # ratio below 1/pi^2, so m a little above `digits` is plenty
        N = digits + GUARD_DIGITS
        m = N
        total = mpmath.fsum(mpmath.mpf(k) ** -s for k in range(1, N))
        Nf = mpmath.mpf(N)
        total += Nf ** (1 - s) / (s - 1) + Nf**-s / 2
        rising = mpmath.mpf(s)  # s (s+1) ... (s+2j-2)
        power = Nf ** (-s - 1)
        for j in range(1, m + 1):
            b = bernoulli(2 * j)
            term = mpmath.mpf(b.numerator) / b.denominator / math.factorial(2 * j)
            total += term * rising * power
            rising *= (s + 2 * j - 1) * (s + 2 * j)
            power /= Nf * Nf
        return +total


def digamma(x, digits: int = DEFAULT_DIGITS) -> mpmath.mpf:
    """psi(x) for a positive rational x.

    Recurrence psi(x) = psi(x + N) - sum 1/(x + i) moves the argument past
    ``digits``, where the asymptotic Bernoulli series converges quickly.
    """
    x = Fraction(x)
    if x <= 0:
        raise ValueError("digamma is evaluated only at positive arguments")
    return _digamma_cached(x, digits)


@lru_cache(maxsize=65536)
def _digamma_cached(x: Fraction, digits: int) -> mpmath.mpf:
    with mpmath.workdps(digits + GUARD_DIGITS):
        big = digits + GUARD_DIGITS
        shift = max(0, math.ceil(big - x))
        xm = mpmath.mpf(x.numerator) / x.denominator
        correction = mpmath.fsum(1 / (xm + i) for i in range(shift))
        z = xm + shift
        z2 = z * z
        acc = mpmath.log(z) - 1 / (2 * z)
        zpow = z2
        for j in range(1, big + 1):
            b = bernoulli(2 * j)
            acc -= mpmath.mpf(b.numerator) / b.denominator / (2 * j) / zpow
            zpow *= z2
        return +(acc - correction)


def to_mpf(x) -> mpmath.mpf:
    x = Fraction(x)
    return mpmath.mpf(x.numerator) / x.denominator
