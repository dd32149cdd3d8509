"""
Brute-force subgroup lists
==========================

For small groups every subgroup can simply be listed, as sums of
cyclic subgroups. This is the yardstick for the formulas.
"""

from abelsub import count_exponent, exponent_distribution
from abelsub.oracle import AbelianGroupTable, all_subgroups, oracle_cyclic_count, oracle_distribution, subgroup_type
from abelsub.partition import Partition

G = AbelianGroupTable((4, 4))
subs = all_subgroups(G)
print(G, len(subs), "subgroups")
for H in subs:
    print(len(H), subgroup_type(H, G))

# compare with the gcd-sum formula
G = AbelianGroupTable((12, 18))
print(dict(oracle_distribution(G)) == dict(exponent_distribution(12, 18)))

# a rank three 2-group against the polynomial counts at p = 2
lam = Partition.parse("2.1.1")
dist = oracle_distribution(AbelianGroupTable((4, 2, 2)))
print([dist.get(2 ** i, 0) for i in range(3)], [count_exponent(lam, i).eval(2) for i in range(3)])

# cyclic subgroups of Z_6 x Z_6
print(oracle_cyclic_count(AbelianGroupTable((6, 6))))
