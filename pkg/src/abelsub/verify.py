"""Cross-checks of the counting formulas against the brute-force oracle."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import asymptotics as asy
from . import pgroup, rank2
from .arith import is_prime
from .oracle import RANK3_BOUND, AbelianGroupTable, _all_subgroup_arrays, _exp_of_array as _exponent_of, oracle_distribution
from .partition import Partition, partitions_of

SUITES = ("rank2", "rank3", "asym")


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}" + (f" ({self.detail})" if self.detail else "")


def check_rank2(max_order: int = 256, key_order: int = 256) -> list[Check]:
    bad_dist, bad_keys, bad_sum = [], [], []
    n_groups = 0
    for m in range(1, max_order + 1):
        for n in range(1, max_order // m + 1):
            n_groups += 1
            G = AbelianGroupTable((m, n))
            arrays = _all_subgroup_arrays(G)
            exps = [_exponent_of(G, a) for a in arrays]
            dist: dict[int, int] = {}
            for E in exps:
                dist[E] = dist.get(E, 0) + 1
            if dist != rank2.exponent_distribution(m, n):
                bad_dist.append((m, n))
            if sum(exps) != rank2.sum_of_exponents(m, n):
                bad_sum.append((m, n))
            if m * n <= key_order:
                brute = {frozenset(G.element(int(k)) for k in a) for a in arrays}
                keyed = [rank2.materialize(k, m, n) for k in rank2.enumerate_keys(m, n)]
                if len(set(keyed)) != len(keyed) or set(keyed) != brute:
                    bad_keys.append((m, n))
    return [
        Check(f"rank2 oracle distribution == gcd-sum formula, mn <= {max_order}", not bad_dist,
              f"{n_groups} groups" if not bad_dist else f"mismatch at {bad_dist[:5]}"),
        Check(f"rank2 oracle exponent sum == sigma(m)sigma(n), mn <= {max_order}", not bad_sum,
              f"{n_groups} groups" if not bad_sum else f"mismatch at {bad_sum[:5]}"),
        Check(f"rank2 key subgroups == oracle subgroups, mn <= {min(key_order, max_order)}", not bad_keys,
              "" if not bad_keys else f"mismatch at {bad_keys[:5]}"),
    ]


def pgroup_cases(max_order: int, primes=None, max_rank: int = 3):
    """``(p, lam)`` for every p-group of rank <= max_rank with order <= max_order."""
    if primes is None:
        primes = [p for p in range(2, max_order + 1) if is_prime(p)]
    for p in primes:
        w = 0
        while p ** w <= max_order:
            for lam in partitions_of(w, max_len=max_rank):
                yield p, lam
            w += 1


def check_pgroup_oracle(max_order: int, primes=None) -> Check:
    bad, n = [], 0
    for p, lam in pgroup_cases(min(max_order, RANK3_BOUND), primes):
        n += 1
        moduli = [p ** x for x in lam] or [1]
        dist = oracle_distribution(AbelianGroupTable(moduli))
        for i in range(lam.first() + 1):
            if dist.get(p ** i, 0) != pgroup.count_exponent(lam, i).eval(p):
                bad.append((p, str(lam), i))
    label = "all primes" if primes is None else f"p in {tuple(primes)}"
    return Check(f"p-group oracle counts == summation formula, order <= {max_order}, {label}", not bad,
                 f"{n} groups" if not bad else f"mismatch at {bad[:5]}")


def check_closed_forms(max_first: int = 4, primes=(2, 3, 5, 7)) -> list[Check]:
    poly_bad, rational_bad, n = [], [], 0
    for w in range(3 * max_first + 1):
        for lam in partitions_of(w, max_part=max_first, max_len=3):
            for i in range(lam.first() + 1):
                n += 1
                ref = pgroup.count_exponent(lam, i)
                if lam.rank() <= 2 and pgroup.count_exponent_rank2(lam[0], lam[1], i) != ref:
                    poly_bad.append((str(lam), i))
                if pgroup.count_exponent_rank3(lam, i) != ref:
                    poly_bad.append((str(lam), i))
                if lam.rank() == 3:
                    for p in primes:
                        if pgroup.count_exponent_rank3_closed(lam, i, p) != ref.eval(p):
                            rational_bad.append((str(lam), i, p))
                if lam.rank() == 2 and lam[1] >= 1:
                    for p in primes:
                        if pgroup.count_exponent_rank2_closed(lam[0], lam[1], i, p) != ref.eval(p):
                            rational_bad.append((str(lam), i, p))
    return [
        Check(f"closed-form polynomials == summation, rank <= 3, first part <= {max_first}", not poly_bad,
              f"{n} cases" if not poly_bad else f"mismatch at {poly_bad[:5]}"),
        Check(f"rational closed forms == polynomial values at p in {tuple(primes)}", not rational_bad,
              "" if not rational_bad else f"mismatch at {rational_bad[:5]}"),
    ]


def check_asymptotics(n_max: int = 2000, s_max: int = 500) -> list[Check]:
    mob_bad = [n for n in range(1, n_max + 1) if not asy.mobius_check(n)]
    bound_bad = [(p, nu) for p in (2, 3, 5, 7) for nu in range(1, 11)
                 if not abs(asy.g_prime_power(p, nu)) < asy.g_bound(p, nu)]
    f_bad = [n for n in range(1, n_max + 1) if not Fraction(0) < asy.f_value(n) <= 1]
    s_bad = [n for n in range(1, s_max + 1) if asy.s_nn(n) != rank2.total_mn(n, n)]
    return [
        Check(f"sum_(d|n) g(d) == f(n), n <= {n_max}", not mob_bad, "" if not mob_bad else f"fails at {mob_bad[:5]}"),
        Check("|g(p^nu)| < (2nu-1)/p^nu, p <= 7, nu <= 10", not bound_bad, "" if not bound_bad else str(bound_bad[:5])),
        Check(f"0 < f(n) <= 1, n <= {n_max}", not f_bad, "" if not f_bad else f"fails at {f_bad[:5]}"),
        Check(f"s(n) == double divisor gcd sum, n <= {s_max}", not s_bad, "" if not s_bad else f"fails at {s_bad[:5]}"),
    ]


def run_suite(suite: str = "all", max_order: int = 256) -> list[Check]:
    suites = SUITES if suite == "all" else (suite,)
    out: list[Check] = []
    for s in suites:
        if s == "rank2":
            out += check_rank2(max_order, key_order=min(max_order, 256))
        elif s == "rank3":
            out.append(check_pgroup_oracle(max_order))
            out += check_closed_forms()
        elif s == "asym":
            out += check_asymptotics()
        else:
            raise ValueError(f"unknown suite {s!r}")
    return out
