"""Subgroups of ``Z_m x Z_n`` for arbitrary ``m, n``.

Each subgroup corresponds to exactly one tuple ``(a, b, c, d, l)`` with
``a | m``, ``b | a``, ``c | n``, ``d | c``, ``a/b == c/d`` and
``1 <= l <= a/b`` coprime to ``a/b``; it is generated by ``(m/a, l*n/c)`` and
``(0, n/d)``, has order ``a*d``, exponent ``lcm(a, c)`` and invariant factors
``(gcd(b, d), lcm(a, c))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .arith import divisors, sigma
from .pgroup import DomainError

DEFAULT_LIMIT = 10 ** 6


@dataclass(frozen=True, order=True)
class SubgroupKey:
    a: int
    b: int
    c: int
    d: int
    l: int

    def validate(self, m: int, n: int) -> None:
        a, b, c, d, l = self.a, self.b, self.c, self.d, self.l
        if min(a, b, c, d, l) < 1:
            raise DomainError(f"{self}: entries must be positive")
        if m % a or a % b or n % c or c % d:
            raise DomainError(f"{self}: divisibility a|m, b|a, c|n, d|c fails for ({m}, {n})")
        if a * d != b * c:
            raise DomainError(f"{self}: a/b != c/d")
        e = a // b
        if l > e or gcd(l, e) != 1:
            raise DomainError(f"{self}: l must be a unit in 1..a/b")

    def order(self) -> int:
        return self.a * self.d

    def exponent(self) -> int:
        return lcm(self.a, self.c)

    def type(self) -> tuple[int, int]:
        return gcd(self.b, self.d), lcm(self.a, self.c)

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return self.a, self.b, self.c, self.d, self.l


def _check_mn(m: int, n: int, limit: int | None = DEFAULT_LIMIT) -> None:
    if m < 1 or n < 1:
        raise DomainError(f"moduli must be positive, got ({m}, {n})")
    if limit is not None and max(m, n) > limit:
        raise DomainError(f"moduli ({m}, {n}) exceed limit {limit}")


def enumerate_keys(m: int, n: int) -> list[SubgroupKey]:
    """Every subgroup key for ``Z_m x Z_n``, sorted by ``(a, b, c, d, l)``."""
    _check_mn(m, n)
    out = []
    dn = divisors(n)
    for a in divisors(m):
        for b in divisors(a):
            e = a // b
            units = [l for l in range(1, e + 1) if gcd(l, e) == 1]
            for c in dn:
                if c % e:
                    continue
                d = c // e
                for l in units:
                    out.append(SubgroupKey(a, b, c, d, l))
    out.sort()
    return out


def materialize(key: SubgroupKey, m: int, n: int) -> frozenset[tuple[int, int]]:
    """Element set of the subgroup, coordinates reduced mod ``m`` and ``n``."""
    key.validate(m, n)
    a, c, d, l = key.a, key.c, key.d, key.l
    sx, sy, sz = m // a, n // c, n // d
    return frozenset(((i * sx) % m, (i * l * sy + j * sz) % n) for i in range(a) for j in range(d))


def key_invariants(key: SubgroupKey) -> tuple[int, int, tuple[int, int]]:
    """``(order, exponent, (d1, d2))``."""
    return key.order(), key.exponent(), key.type()


def count_exponent_mn(m: int, n: int, E: int) -> int:
    """Number of subgroups of exponent ``E``: sum of ``gcd(i, j)`` over ``i|m, j|n, lcm(i,j)=E``."""
    _check_mn(m, n)
    if E < 1 or lcm(m, n) % E:
        return 0
    dm = [i for i in divisors(m) if E % i == 0]
    dn = [j for j in divisors(n) if E % j == 0]
    return sum(gcd(i, j) for i in dm for j in dn if lcm(i, j) == E)


def count_exponent_mn_products(m: int, n: int, E: int) -> int:
    """Same count as :func:`count_exponent_mn` via ``(1/E) * sum i*j``."""
    _check_mn(m, n)
    if E < 1 or lcm(m, n) % E:
        return 0
    total = sum(i * j for i in divisors(m) for j in divisors(n) if lcm(i, j) == E)
    q, r = divmod(total, E)
    assert r == 0
    return q


def total_mn(m: int, n: int) -> int:
    _check_mn(m, n)
    dn = divisors(n)
    return sum(gcd(i, j) for i in divisors(m) for j in dn)


class ExponentDistribution(dict):
    """Map ``E -> s_E(m, n)`` over exponents with a nonzero count, ascending."""

    def total(self) -> int:
        return sum(self.values())

    def to_json(self) -> dict[str, int]:
        return {str(E): c for E, c in sorted(self.items())}


def exponent_distribution(m: int, n: int) -> ExponentDistribution:
    _check_mn(m, n)
    counts: dict[int, int] = {}
    dn = divisors(n)
    for i in divisors(m):
        for j in dn:
            E = lcm(i, j)
            counts[E] = counts.get(E, 0) + gcd(i, j)
    return ExponentDistribution(sorted(counts.items()))


def distribution_from_keys(keys) -> ExponentDistribution:
    counts: dict[int, int] = {}
    for k in keys:
        counts[k.exponent()] = counts.get(k.exponent(), 0) + 1
    return ExponentDistribution(sorted(counts.items()))


def cyclic_equivalent_count(n: int, E: int) -> int:
    """``s_E(n, n)``, written as a sum over ``i, j | E`` with ``gcd(E/i, E/j) = 1``.

    Also the number of cyclic subgroups of ``Z_E x Z_E``.
    """
    if n < 1 or E < 1 or n % E:
        raise DomainError(f"{E} does not divide {n}")
    dE = divisors(E)
    return sum(gcd(i, j) for i in dE for j in dE if gcd(E // i, E // j) == 1)


def sum_of_exponents(m: int, n: int) -> int:
    _check_mn(m, n)
    return sigma(m) * sigma(n)
