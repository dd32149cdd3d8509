"""
Z_m x Z_n for arbitrary m, n
============================

Each subgroup has a key (a, b, c, d, l); the number with exponent E is a
gcd sum over divisor pairs. Here both views are set side by side.
"""

from collections import Counter

import numpy as np

from abelsub import enumerate_keys, exponent_distribution, materialize, sum_of_exponents, total_mn

m, n = 12, 18
keys = enumerate_keys(m, n)
print(len(keys), "subgroups,", total_mn(m, n), "by the gcd sum")

# distribution by exponent, from the keys and from the formula
by_key = Counter(k.exponent() for k in keys)
print(sorted(by_key.items()))
print(dict(exponent_distribution(m, n)))

# one subgroup in full
k = keys[40]
H = materialize(k, m, n)
print(k, "order", k.order(), "type", k.type())
print(sorted(H))

# orders of all subgroups as an array
orders = np.array([k.order() for k in keys])
print("orders:", np.unique(orders, return_counts=True))

# sum of exponents is sigma(m) * sigma(n)
print(sum(E * c for E, c in exponent_distribution(m, n).items()), sum_of_exponents(m, n))

# a table of totals for small m, n
T = np.array([[total_mn(i, j) for j in range(1, 13)] for i in range(1, 13)])
print(T)
