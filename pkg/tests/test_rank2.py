import random
from math import gcd, lcm

import pytest
from hypothesis import given, settings, strategies as st

from abelsub.arith import divisors, sigma
from abelsub.oracle import AbelianGroupTable, SubgroupSet, subgroup_exponent, subgroup_type
from abelsub.pgroup import DomainError, count_exponent_rank2, exponent_profile
from abelsub.rank2 import (
    SubgroupKey, count_exponent_mn, count_exponent_mn_products, cyclic_equivalent_count,
    distribution_from_keys, enumerate_keys, exponent_distribution, key_invariants, materialize,
    sum_of_exponents, total_mn,
)

PAPER_12_18 = {1: 1, 2: 4, 3: 5, 4: 3, 6: 20, 9: 4, 12: 15, 18: 16, 36: 12}


def test_enumerate_examples():
    assert enumerate_keys(1, 1) == [SubgroupKey(1, 1, 1, 1, 1)]
    assert len(enumerate_keys(12, 18)) == 80
    for p in (2, 3, 7):
        assert len(enumerate_keys(p, 1)) == 2
    keys = enumerate_keys(6, 4)
    assert keys == sorted(keys)


def test_materialize_examples():
    assert materialize(SubgroupKey(1, 1, 1, 1, 1), 4, 6) == {(0, 0)}
    m, n = 4, 6
    full = materialize(SubgroupKey(m, m, n, n, 1), m, n)
    assert full == {(x, y) for x in range(m) for y in range(n)}
    with pytest.raises(DomainError):
        materialize(SubgroupKey(2, 1, 2, 1, 2), 4, 4)
    with pytest.raises(DomainError):
        materialize(SubgroupKey(3, 1, 3, 1, 1), 4, 4)


def test_key_invariants_examples():
    assert key_invariants(SubgroupKey(1, 1, 1, 1, 1)) == (1, 1, (1, 1))
    assert key_invariants(SubgroupKey(4, 2, 2, 1, 1)) == (4, 4, (1, 4))
    G = AbelianGroupTable((4, 4))
    H = SubgroupSet(tuple(sorted(materialize(SubgroupKey(4, 2, 2, 1, 1), 4, 4))))
    assert len(H) == 4 and subgroup_exponent(H, G) == 4 and subgroup_type(H, G) == (1, 4)
    assert key_invariants(SubgroupKey(6, 6, 4, 4, 1)) == (24, 12, (2, 12))


def test_keys_are_a_bijection_onto_distinct_subgroups():
    for m in range(1, 25):
        for n in range(1, 25):
            keys = enumerate_keys(m, n)
            sets = [materialize(k, m, n) for k in keys]
            assert len(set(sets)) == len(sets) == total_mn(m, n)


def test_key_invariants_agree_with_elements():
    for m in range(1, 17):
        for n in range(1, 17):
            G = AbelianGroupTable((m, n))
            for k in enumerate_keys(m, n):
                elems = materialize(k, m, n)
                H = SubgroupSet(tuple(sorted(elems)))
                order, exp, typ = key_invariants(k)
                assert len(elems) == order == k.a * k.d
                assert subgroup_exponent(H, G) == exp
                assert subgroup_type(H, G) == typ
                d1, d2 = typ
                assert d2 % d1 == 0 and d1 * d2 == order
                for x in elems:
                    for y in elems:
                        assert ((x[0] + y[0]) % m, (x[1] + y[1]) % n) in elems


def test_count_examples():
    assert count_exponent_mn(12, 18, 6) == 20
    assert count_exponent_mn(12, 18, 12) == 15
    assert count_exponent_mn(12, 18, 1) == 1
    assert count_exponent_mn(12, 18, 5) == 0
    assert count_exponent_mn(7, 9, 1) == 1


def test_gcd_sum_equals_product_sum():
    for m in range(1, 101):
        for n in range(1, 101):
            for E in divisors(lcm(m, n)):
                assert count_exponent_mn(m, n, E) == count_exponent_mn_products(m, n, E)


def test_totals_and_sums_of_exponents():
    assert total_mn(12, 18) == 80
    assert total_mn(1, 1) == 1
    assert total_mn(16, 4) == 29
    for m in range(1, 61):
        for n in range(1, 61):
            dist = exponent_distribution(m, n)
            assert dist.total() == total_mn(m, n)
            assert sum(E * c for E, c in dist.items()) == sigma(m) * sigma(n) == sum_of_exponents(m, n)


def test_distribution_examples():
    assert dict(exponent_distribution(12, 18)) == PAPER_12_18
    assert dict(distribution_from_keys(enumerate_keys(12, 18))) == PAPER_12_18
    assert dict(exponent_distribution(1, 1)) == {1: 1}
    prof = exponent_profile((2, 1)).at(2)
    assert dict(exponent_distribution(4, 2)) == {2 ** i: c for i, c in enumerate(prof)}
    assert exponent_distribution(12, 18).to_json()["36"] == 12


def test_distribution_matches_key_aggregation():
    for m in range(1, 31):
        for n in range(1, 31):
            assert exponent_distribution(m, n) == distribution_from_keys(enumerate_keys(m, n))


def test_sum_of_exponents_examples():
    assert sum_of_exponents(1, 1) == 1
    assert sum_of_exponents(12, 18) == 1092
    assert sum_of_exponents(5, 1) == 6


def test_cyclic_equivalent_count():
    assert cyclic_equivalent_count(10, 1) == 1
    for p in (2, 3, 5, 7):
        assert cyclic_equivalent_count(2 * p, p) == p + 2
    # brute force: Z_6 x Z_6 has 20 cyclic subgroups
    assert cyclic_equivalent_count(36, 6) == 20
    for n in range(1, 61):
        for E in divisors(n):
            assert cyclic_equivalent_count(n, E) == count_exponent_mn(n, n, E)
    with pytest.raises(DomainError):
        cyclic_equivalent_count(10, 3)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_prime_power_case_matches_pgroup_formula(p):
    for l1 in range(5):
        for l2 in range(l1 + 1):
            for i in range(l1 + 1):
                assert count_exponent_mn(p ** l1, p ** l2, p ** i) == count_exponent_rank2(l1, l2, i).eval(p)


coprime_pairs = st.tuples(st.integers(1, 40), st.integers(1, 40), st.integers(1, 40), st.integers(1, 40))


@settings(max_examples=200, deadline=None)
@given(coprime_pairs, st.data())
def test_multiplicative_across_coprime_parts(mn, data):
    m1, n1, m2, n2 = mn
    if gcd(m1 * n1, m2 * n2) != 1:
        return
    E1 = data.draw(st.sampled_from(divisors(lcm(m1, n1))))
    E2 = data.draw(st.sampled_from(divisors(lcm(m2, n2))))
    assert count_exponent_mn(m1 * m2, n1 * n2, E1 * E2) == count_exponent_mn(m1, n1, E1) * count_exponent_mn(m2, n2, E2)


def test_key_identity_gcd_times_lcm():
    for m in range(1, 41):
        for n in range(1, 41):
            for k in enumerate_keys(m, n):
                assert gcd(k.b, k.d) * lcm(k.a, k.c) == k.a * k.d
                assert lcm(k.a, k.c) % gcd(k.b, k.d) == 0
