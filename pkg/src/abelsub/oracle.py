"""Brute-force subgroup enumeration for small groups ``Z_m1 x ... x Z_mr``.

Deliberately naive: a subgroup generated by ``g1, ..., gk`` is the sum
``<g1> + ... + <gk>`` of cyclic subgroups, and every subgroup of a group with
``r`` cyclic factors needs at most ``r`` generators. So all subgroups are the
distinct sums of at most ``r`` cyclic subgroups. Nothing here relies on the
counting formulas it is used to check.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm, prod
from typing import Iterable, Sequence

import numpy as np

from .arith import factor
from .rank2 import ExponentDistribution

DEFAULT_BOUND = 4096
RANK3_BOUND = 729
# full addition table below this order
TABLE_BOUND = 1024


class ResourceError(RuntimeError):
    """Group too large for brute force."""


class AbelianGroupTable:
    """The group ``Z_m1 x ... x Z_mr``; elements are coordinate tuples."""

    def __init__(self, moduli: Sequence[int], bound: int | None = None):
        moduli = tuple(int(m) for m in moduli)
        if any(m < 1 for m in moduli):
            raise ValueError(f"moduli must be positive: {moduli}")
        if bound is None:
            bound = RANK3_BOUND if len(moduli) >= 3 else DEFAULT_BOUND
        self.moduli = moduli
        self.order = prod(moduli)
        if self.order > bound:
            raise ResourceError(f"group of order {self.order} exceeds brute-force bound {bound}")
        self.rank = len(moduli)
        self._mod = np.array(moduli or (1,), dtype=np.int64)
        # mixed-radix weights, last coordinate fastest
        w = [1] * len(moduli)
        for k in range(len(moduli) - 2, -1, -1):
            w[k] = w[k + 1] * moduli[k + 1]
        self._weights = np.array(w or [0], dtype=np.int64)
        idx = np.arange(self.order, dtype=np.int64)
        if moduli:
            self.coords = (idx[:, None] // self._weights) % self._mod
        else:
            self.coords = np.zeros((1, 1), dtype=np.int64)
        self.orders = np.array([self._element_order(c) for c in self.coords.tolist()], dtype=np.int64)
        self._table = None
        if self.order <= TABLE_BOUND:
            s = self.coords[:, None, :] + self.coords[None, :, :]
            self._table = self.encode(s.reshape(-1, s.shape[-1])).reshape(self.order, self.order)

    def __repr__(self):
        return "AbelianGroupTable(" + " x ".join(f"Z_{m}" for m in self.moduli) + ")"

    def _element_order(self, c) -> int:
        return lcm(*(m // gcd(x, m) for x, m in zip(c, self.moduli))) if self.moduli else 1

    def encode(self, coords) -> np.ndarray:
        coords = np.asarray(coords, dtype=np.int64) % self._mod
        return coords @ self._weights if self.moduli else np.zeros(len(coords), dtype=np.int64)

    def index(self, element: Sequence[int]) -> int:
        if len(element) != self.rank:
            raise ValueError(f"element {element} has wrong length for {self}")
        return int(self.encode([element])[0])

    def element(self, k: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self.coords[k])[: self.rank]

    def cyclic(self, k: int) -> np.ndarray:
        mult = np.arange(int(self.orders[k]), dtype=np.int64)
        return np.unique(self.encode(mult[:, None] * self.coords[k][None, :]))

    def join(self, H: np.ndarray, K: np.ndarray) -> np.ndarray:
        if self._table is not None:
            return np.unique(self._table[H[:, None], K[None, :]])
        s = self.coords[H][:, None, :] + self.coords[K][None, :, :]
        return np.unique(self.encode(s.reshape(-1, s.shape[-1])))


@dataclass(frozen=True)
class SubgroupSet:
    """Canonically sorted element tuples of a subgroup."""

    elements: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return tuple(x) in set(self.elements)

    def as_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.elements)


def _to_set(G: AbelianGroupTable, arr: np.ndarray) -> SubgroupSet:
    return SubgroupSet(tuple(G.element(int(k)) for k in arr))


def _closure_array(G: AbelianGroupTable, gens: Iterable[int]) -> np.ndarray:
    H = np.zeros(1, dtype=np.int64)
    for g in gens:
        H = G.join(H, G.cyclic(g))
    return H


def closure(generators: Iterable[Sequence[int]], G: AbelianGroupTable) -> SubgroupSet:
    """Smallest subgroup containing ``generators``."""
    return _to_set(G, _closure_array(G, [G.index(g) for g in generators]))


def _all_subgroup_arrays(G: AbelianGroupTable, levels: int | None = None) -> list[np.ndarray]:
    if levels is None:
        levels = G.rank
    found: dict[bytes, np.ndarray] = {}
    cyclic: dict[bytes, tuple[int, np.ndarray]] = {}
    seen = np.zeros(G.order, dtype=bool)
    for k in range(G.order):
        if seen[k]:
            continue
        C = G.cyclic(k)
        # every generator of C gives the same subgroup
        seen[C[G.orders[C] == len(C)]] = True
        cyclic[C.tobytes()] = (k, C)
    found.update({key: C for key, (_, C) in cyclic.items()})
    frontier = dict(found)
    for _ in range(max(levels, 1) - 1):
        nxt: dict[bytes, np.ndarray] = {}
        for H in frontier.values():
            member = np.zeros(G.order, dtype=bool)
            member[H] = True
            for g, C in cyclic.values():
                if member[g]:
                    continue
                J = G.join(H, C)
                key = J.tobytes()
                if key not in found:
                    found[key] = J
                    nxt[key] = J
        frontier = nxt
        if not frontier:
            break
    return sorted(found.values(), key=lambda a: (len(a), a.tolist()))


def all_subgroups(G: AbelianGroupTable, levels: int | None = None) -> list[SubgroupSet]:
    """Every subgroup exactly once, as sums of at most ``levels`` cyclic subgroups (default: rank)."""
    return [_to_set(G, a) for a in _all_subgroup_arrays(G, levels)]


def _orders_of(H: SubgroupSet, G: AbelianGroupTable) -> list[int]:
    return [G._element_order(x) for x in H.elements]


def subgroup_exponent(H: SubgroupSet, G: AbelianGroupTable) -> int:
    return lcm(*_orders_of(H, G))


def _invariant_factors(orders: list[int], rank: int) -> tuple[int, ...]:
    # per prime p: #{x : ord(x) | p^j} = p^(c_1 + ... + c_j), c = conjugate of the p-type
    n = len(orders)
    per_prime = []
    for p, _ in factor(n) if n > 1 else []:
        parts = []
        prev = 1
        j = 1
        while True:
            cnt = sum(1 for o in orders if (p ** j) % o == 0)
            if cnt == prev:
                break
            c, e = cnt // prev, 0
            while c > 1:
                c //= p
                e += 1
            parts.append(e)
            prev = cnt
            j += 1
        # parts is the conjugate partition; conjugate back
        per_prime.append((p, [sum(1 for x in parts if x >= i) for i in range(1, max(parts) + 1)]))
    k = max([len(t) for _, t in per_prime], default=0)
    factors = []
    for slot in range(k):
        factors.append(prod(p ** t[slot] for p, t in per_prime if slot < len(t)))
    factors.sort()
    return tuple([1] * (rank - len(factors)) + factors)


def subgroup_type(H: SubgroupSet, G: AbelianGroupTable) -> tuple[int, ...]:
    """Invariant factors ``d1 | d2 | ...`` of ``H``, padded with 1s to the rank of ``G``."""
    return _invariant_factors(_orders_of(H, G), max(G.rank, 1))


def _exp_of_array(G: AbelianGroupTable, a: np.ndarray) -> int:
    return lcm(*(int(o) for o in np.unique(G.orders[a])))


def oracle_distribution(G: AbelianGroupTable) -> ExponentDistribution:
    counts: dict[int, int] = {}
    for a in _all_subgroup_arrays(G):
        E = _exp_of_array(G, a)
        counts[E] = counts.get(E, 0) + 1
    return ExponentDistribution(sorted(counts.items()))


def oracle_exponent_sum(G: AbelianGroupTable) -> int:
    return sum(_exp_of_array(G, a) for a in _all_subgroup_arrays(G))


def oracle_cyclic_count(G: AbelianGroupTable) -> int:
    """Subgroups with at most one nontrivial invariant factor."""
    out = 0
    for a in _all_subgroup_arrays(G):
        t = _invariant_factors([int(o) for o in G.orders[a]], max(G.rank, 1))
        if sum(1 for d in t if d > 1) <= 1:
            out += 1
    return out


def dump_subgroups(G: AbelianGroupTable) -> list[list[list[int]]]:
    """JSON-ready list of subgroups, each a list of elements."""
    return [[list(x) for x in H.elements] for H in all_subgroups(G)]
