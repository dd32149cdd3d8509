import pytest

from abelsub.oracle import (
    AbelianGroupTable, ResourceError, all_subgroups, closure, dump_subgroups, oracle_cyclic_count,
    oracle_distribution, oracle_exponent_sum, subgroup_exponent, subgroup_type,
)
from abelsub.rank2 import cyclic_equivalent_count, enumerate_keys, exponent_distribution, materialize


def is_subgroup(H, moduli):
    elems = H.as_set()
    zero = tuple(0 for _ in moduli)
    if zero not in elems:
        return False
    for x in elems:
        if tuple(-a % m for a, m in zip(x, moduli)) not in elems:
            return False
        for y in elems:
            if tuple((a + b) % m for a, b, m in zip(x, y, moduli)) not in elems:
                return False
    return True


def test_closure_examples():
    G = AbelianGroupTable((4, 2))
    assert closure([], G).elements == ((0, 0),)
    assert closure([(1, 0)], G).elements == ((0, 0), (1, 0), (2, 0), (3, 0))
    assert len(closure([(1, 0), (0, 1)], G)) == 8
    G3 = AbelianGroupTable((2, 4, 3))
    assert len(closure([(1, 0, 0), (0, 1, 0), (0, 0, 1)], G3)) == 24


def test_all_subgroups_examples():
    assert len(all_subgroups(AbelianGroupTable((2, 2)))) == 5
    assert len(all_subgroups(AbelianGroupTable((5,)))) == 2
    assert len(all_subgroups(AbelianGroupTable((12, 18)))) == 80


def test_subgroups_are_closed_and_distinct():
    for moduli in [(4, 6), (2, 2, 2), (3, 9), (2, 4, 2)]:
        subs = all_subgroups(AbelianGroupTable(moduli))
        assert len(set(subs)) == len(subs)
        assert all(is_subgroup(H, moduli) for H in subs)


def test_rank_many_generators_suffice():
    # one more generator than the rank finds nothing new
    for moduli in [(2, 2), (4, 2), (2, 2, 2), (4, 4), (8, 8), (2, 4, 8), (6, 6)]:
        G = AbelianGroupTable(moduli)
        assert set(all_subgroups(G)) == set(all_subgroups(G, levels=len(moduli) + 1))


def test_exponent_and_type():
    G = AbelianGroupTable((4, 2))
    subs = all_subgroups(G)
    assert subgroup_exponent(subs[0], G) == 1
    full = subs[-1]
    assert len(full) == 8
    assert subgroup_exponent(full, G) == 4 and subgroup_type(full, G) == (2, 4)
    G3 = AbelianGroupTable((4, 2, 2))
    full3 = all_subgroups(G3)[-1]
    assert subgroup_type(full3, G3) == (2, 2, 4)
    G6 = AbelianGroupTable((6, 4))
    assert subgroup_type(all_subgroups(G6)[-1], G6) == (2, 12)


def test_materialized_keys_carry_their_invariants():
    G = AbelianGroupTable((12, 18))
    by_set = {H.as_set(): H for H in all_subgroups(G)}
    for k in enumerate_keys(12, 18):
        H = by_set[materialize(k, 12, 18)]
        assert subgroup_exponent(H, G) == k.exponent()
        assert subgroup_type(H, G) == k.type()


def test_distributions():
    assert dict(oracle_distribution(AbelianGroupTable((12, 18)))) == {
        1: 1, 2: 4, 3: 5, 4: 3, 6: 20, 9: 4, 12: 15, 18: 16, 36: 12}
    assert dict(oracle_distribution(AbelianGroupTable((1,)))) == {1: 1}
    assert oracle_exponent_sum(AbelianGroupTable((12, 18))) == 1092


def test_rank2_formula_agreement_small():
    for m in range(1, 41):
        for n in range(1, 400 // m + 1):
            if m * n > 120:
                continue
            assert oracle_distribution(AbelianGroupTable((m, n))) == exponent_distribution(m, n)


def test_keys_equal_brute_force_subgroups():
    for m in range(1, 33):
        for n in range(1, 64 // m + 1):
            brute = {H.as_set() for H in all_subgroups(AbelianGroupTable((m, n)))}
            assert {materialize(k, m, n) for k in enumerate_keys(m, n)} == brute


def test_cyclic_count():
    for E in range(1, 13):
        assert oracle_cyclic_count(AbelianGroupTable((E, E))) == cyclic_equivalent_count(E, E)


def test_bounds():
    with pytest.raises(ResourceError):
        AbelianGroupTable((100, 100))
    with pytest.raises(ResourceError):
        AbelianGroupTable((10, 10, 10))
    AbelianGroupTable((64, 64))


def test_dump_is_json_ready():
    dump = dump_subgroups(AbelianGroupTable((2, 2)))
    assert len(dump) == 5 and dump[0] == [[0, 0]]
