"""Counting subgroups of finite abelian p-groups by type and by exponent.

Every count is an :class:`IntPoly` in the prime ``p``. The general route is the
type-counting formula ``alpha(lam, mu)`` summed over subgroup types with a given
first part; the rank-2 and rank-3 functions are closed-form fast paths that
must agree with it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .arith import factor, is_prime
from .partition import Partition, as_partition, conjugate, contains, partitions_of, subpartitions_with_first_part
from .polyring import ONE, P, ZERO, IntPoly, gauss_binom, geometric


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


# -- type counts -------------------------------------------------------------

def alpha(lam, mu) -> IntPoly:
    """Number of subgroups of type ``mu`` in the p-group of type ``lam``."""
    lam, mu = as_partition(lam), as_partition(mu)
    if not contains(lam, mu):
        raise DomainError(f"type not contained: {mu} is not below {lam}")
    a, b = conjugate(lam), conjugate(mu)
    exp = 0
    out = ONE
    for i in range(lam.first()):
        ai, bi, bnext = a[i], b[i], b[i + 1]
        exp += (ai - bi) * bnext
        out = out * gauss_binom(ai - bnext, bi - bnext)
    return out.shift(exp)


def count_exponent(lam, i: int) -> IntPoly:
    """Subgroups of exponent ``p^i``, by summing ``alpha`` over types with first part ``i``.

    Works for any rank.
    """
    lam = as_partition(lam)
    if i < 0 or i > lam.first():
        return ZERO
    out = ZERO
    for mu in subpartitions_with_first_part(lam, i):
        out = out + alpha(lam, mu)
    return out


# -- rank 2 ------------------------------------------------------------------

def count_exponent_rank2(l1: int, l2: int, i: int) -> IntPoly:
    if not l1 >= l2 >= 0:
        raise DomainError(f"need l1 >= l2 >= 0, got ({l1}, {l2})")
    if i < 0 or i > l1:
        return ZERO
    if i == 0:
        return ONE
    if i <= l2:
        # 1 + sum_{j<i} (p+1) p^(i-j-1)
        return (P + 1) * geometric(0, i - 1) + 1
    return geometric(0, l2)


def total_rank2(l1: int, l2: int) -> IntPoly:
    out = ZERO
    for i in range(l1 + 1):
        out = out + count_exponent_rank2(l1, l2, i)
    return out


# -- rank 3 ------------------------------------------------------------------

def _rank3(lam) -> tuple[int, int, int]:
    lam = as_partition(lam)
    if lam.rank() > 3:
        raise DomainError(f"rank of {lam} exceeds 3")
    return lam[0], lam[1], lam[2]


def count_type_rank3(lam, i: int, j: int, l: int) -> IntPoly:
    """Number of subgroups of type ``(i, j, l)`` in a group of rank at most 3."""
    l1, l2, l3 = _rank3(lam)
    if not i >= j >= l >= 0:
        raise DomainError(f"need i >= j >= l >= 0, got ({i}, {j}, {l})")
    if i > l1 or j > l2 or l > l3:
        raise DomainError(f"type ({i}, {j}, {l}) not contained in {lam}")
    q = P * P + P + 1
    if i <= l3:
        if l < j < i:
            return ((P + 1) * q).shift(2 * i - 2 * l - 3)
        if l < j == i or l == j < i:
            return q.shift(2 * (i - l - 1))
        return ONE
    if i <= l2:
        if j <= l3:
            if l < j:
                return ((P + 1) * (P + 1)).shift(l3 + i - 2 * l - 2)
            return (P + 1).shift(l3 + i - 2 * j - 1)
        if j < i:
            return (P + 1).shift(2 * l3 + i - j - 2 * l - 1)
        return ONE.shift(2 * (l3 - l))
    if j > l3:
        return ONE.shift(l2 + 2 * l3 - j - 2 * l)
    if l < j:
        return (P + 1).shift(l2 + l3 - 2 * l - 1)
    return ONE.shift(l2 + l3 - 2 * l)


def count_exponent_rank3(lam, i: int) -> IntPoly:
    l1, l2, l3 = _rank3(lam)
    if l3 == 0:
        return count_exponent_rank2(l1, l2, i)
    if i < 0 or i > l1:
        return ZERO
    out = ZERO
    for j in range(min(i, l2) + 1):
        for l in range(min(j, l3) + 1):
            out = out + count_type_rank3(lam, i, j, l)
    return out


def total_rank3(lam) -> IntPoly:
    l1, l2, l3 = _rank3(lam)
    if l3 == 0:
        return total_rank2(l1, l2)
    out = ZERO
    for i in range(l1 + 1):
        out = out + count_exponent_rank3(lam, i)
    return out


# Rational closed forms, evaluated at a concrete prime. These are reference
# targets for the polynomial routes above, not an alternative computation path.

def total_rank2_closed(l1: int, l2: int, p: int) -> Fraction:
    num = ((l1 - l2 + 1) * p ** (l2 + 2) - (l1 - l2 - 1) * p ** (l2 + 1)
           - (l1 + l2 + 3) * p + (l1 + l2 + 1))
    return Fraction(num, (p - 1) ** 2)


def count_exponent_rank2_closed(l1: int, l2: int, i: int, p: int) -> Fraction:
    if i == 0:
        return Fraction(1)
    if i <= l2:
        return Fraction(p ** (i + 1) + p ** i - 2, p - 1)
    return Fraction(p ** (l2 + 1) - 1, p - 1)


def count_exponent_rank3_closed(lam, i: int, p: int) -> Fraction:
    l1, l2, l3 = _rank3(lam)
    den = (p * p - 1) * (p - 1)
    if i == 0:
        return Fraction(1)
    if i <= l3:
        num = p ** (2 * i - 1) * ((i + 1) * p ** 4 + (i - 1) * p ** 3 - p ** 2 - (i + 2) * p - i) + 3
    elif i <= l2:
        num = (l3 + 1) * p ** (l3 + i) * (p * p - 1) * (p + 1) - 2 * p ** (2 * l3 + 2) + 2
    else:
        num = (l3 + 1) * p ** (l2 + l3 + 1) * (p * p - 1) - p ** (2 * l3 + 2) + 1
    return Fraction(num, den)


def total_rank3_closed(lam, p: int) -> Fraction:
    l1, l2, l3 = _rank3(lam)
    c = l3 + 1
    d = l1 - l2
    s = l2 + l3
    num = (c * (d + 1) * p ** (s + 5) + 2 * c * p ** (s + 4) - 2 * c * d * p ** (s + 3)
           - 2 * c * p ** (s + 2) + c * (d - 1) * p ** (s + 1)
           - (l1 + l2 - l3 + 3) * p ** (2 * l3 + 4) - 2 * p ** (2 * l3 + 3)
           + (l1 + l2 - l3 - 1) * p ** (2 * l3 + 2)
           + (l1 + l2 + l3 + 5) * p ** 2 + 2 * p - (l1 + l2 + l3 + 1))
    return Fraction(num, (p * p - 1) ** 2 * (p - 1))


# -- exponent p and p^2, any rank ---------------------------------------------

def count_exponent_p(k: int) -> IntPoly:
    """Nontrivial subspaces of ``F_p^k``: subgroups of exponent p in any rank-k group."""
    if k < 1:
        raise DomainError("rank must be positive")
    out = ZERO
    for r in range(1, k + 1):
        out = out + gauss_binom(k, r)
    return out


def count_exponent_p2(lam) -> IntPoly:
    lam = as_partition(lam).truncate(2)
    k = lam.rank()
    t = sum(1 for x in lam if x == 2)
    out = ZERO
    for r in range(1, t + 1):
        for s in range(k - r + 1):
            out = out + (gauss_binom(k - r, s) * gauss_binom(t, r)).shift(r * (k - r - s))
    return out


# -- profiles ----------------------------------------------------------------

@dataclass(frozen=True)
class ExponentProfile:
    """``counts[i]`` is the number of subgroups of exponent ``p^i``."""

    lam: Partition
    counts: tuple[IntPoly, ...]

    def __len__(self):
        return len(self.counts)

    def __getitem__(self, i):
        return self.counts[i]

    def total(self) -> IntPoly:
        out = ZERO
        for c in self.counts:
            out = out + c
        return out

    def at(self, p: int) -> list[int]:
        return [c.eval(p) for c in self.counts]


def exponent_profile(lam) -> ExponentProfile:
    lam = as_partition(lam)
    return ExponentProfile(lam, tuple(count_exponent(lam, i) for i in range(lam.first() + 1)))


def profiles_isomorphic(lam, kappa, p: int) -> bool:
    """Do the two p-groups have equally many subgroups of each exponent ``p^i``?"""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    a = exponent_profile(lam).at(p)
    b = exponent_profile(kappa).at(p)
    n = max(len(a), len(b))
    a += [0] * (n - len(a))
    b += [0] * (n - len(b))
    return a == b


# -- arbitrary finite abelian groups ------------------------------------------

@dataclass(frozen=True)
class GroupSpec:
    """A finite abelian group as its primary components ``((p, lam), ...)``."""

    components: tuple[tuple[int, Partition], ...]

    def __init__(self, components: Iterable[tuple[int, object]]):
        comps = {}
        for p, lam in components:
            if not is_prime(p):
                raise DomainError(f"{p} is not prime")
            if p in comps:
                raise DomainError(f"prime {p} listed twice")
            lam = as_partition(lam)
            if lam.rank():
                comps[p] = lam
        object.__setattr__(self, "components", tuple(sorted(comps.items())))

    @classmethod
    def from_moduli(cls, moduli: Sequence[int]) -> GroupSpec:
        """Primary decomposition of ``Z_m1 x Z_m2 x ...``."""
        by_prime: dict[int, list[int]] = {}
        for m in moduli:
            if m < 1:
                raise DomainError(f"modulus must be positive, got {m}")
            for p, e in factor(m):
                by_prime.setdefault(p, []).append(e)
        return cls((p, sorted(es, reverse=True)) for p, es in by_prime.items())

    def order(self) -> int:
        out = 1
        for p, lam in self.components:
            out *= p ** lam.weight()
        return out

    def exponent(self) -> int:
        out = 1
        for p, lam in self.components:
            out *= p ** lam.first()
        return out


def count_exponent_general(G: GroupSpec, d: int) -> int:
    """Number of subgroups of exponent ``d`` in ``G``; 0 if there are none."""
    if d < 1:
        raise DomainError("exponent must be positive")
    comps = dict(G.components)
    val = {p: e for p, e in factor(d)}
    if any(p not in comps for p in val):
        return 0
    out = 1
    for p, lam in comps.items():
        out *= count_exponent(lam, val.get(p, 0)).eval(p)
    return out


def all_partitions(max_weight: int, max_rank: int | None = None) -> list[Partition]:
    out = []
    for w in range(max_weight + 1):
        out.extend(partitions_of(w, max_len=max_rank))
    return out
