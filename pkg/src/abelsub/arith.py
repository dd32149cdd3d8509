"""Elementary multiplicative arithmetic: factorization, divisors, sigma, tau."""

from __future__ import annotations

from functools import lru_cache
from math import isqrt

import numpy as np


class Factorization(tuple):
    """Sorted ``((prime, multiplicity), ...)`` pairs."""

    def value(self) -> int:
        out = 1
        for p, e in self:
            out *= p ** e
        return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


@lru_cache(maxsize=4096)
def factor(n: int) -> Factorization:
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return Factorization(out)


def divisors(n: int) -> list[int]:
    """Positive divisors of ``n`` in increasing order."""
    divs = [1]
    for p, e in factor(n):
        divs = [d * p ** k for d in divs for k in range(e + 1)]
    return sorted(divs)


def sigma(n: int) -> int:
    out = 1
    for p, e in factor(n):
        out *= (p ** (e + 1) - 1) // (p - 1)
    return out


def tau_sq(n: int) -> int:
    """Number of divisors of ``n**2``."""
    out = 1
    for _, e in factor(n):
        out *= 2 * e + 1
    return out


def primes_upto(n: int) -> np.ndarray:
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p::p] = False
    return np.flatnonzero(sieve)


def smallest_prime_factor(n: int) -> np.ndarray:
    """``spf[k]`` for ``0 <= k <= n``; ``spf[0] = spf[1] = 0``."""
    spf = np.zeros(n + 1, dtype=np.int64)
    for p in range(2, isqrt(n) + 1):
        if spf[p] == 0:
            seg = spf[p * p::p]
            seg[seg == 0] = p
    idx = np.arange(n + 1, dtype=np.int64)
    rest = (spf == 0) & (idx >= 2)
    spf[rest] = idx[rest]
    return spf
