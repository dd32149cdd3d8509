"""
Subgroups of a p-group, sorted by exponent
==========================================

A finite abelian p-group is fixed by a partition: (4, 2) means
Z_{p^4} x Z_{p^2}. Counts come out as polynomials in p, so one
computation covers every prime at once.
"""

from abelsub import Partition, count_exponent, exponent_profile, profiles_isomorphic
from abelsub.pgroup import count_exponent_p, count_exponent_p2, total_rank2, total_rank3
from abelsub.polyring import render

lam = Partition.parse("4.2")
profile = exponent_profile(lam)
for i, poly in enumerate(profile.counts):
    print(f"exponent p^{i}: {render(poly)}")

# the profile sums to the total number of subgroups
print("total:", render(profile.total()), "==", render(total_rank2(4, 2)))

# evaluate at a few primes
for p in (2, 3, 5):
    print(p, profile.at(p), sum(profile.at(p)))

# rank three works the same way
lam3 = Partition.parse("4.2.2")
print([render(q) for q in exponent_profile(lam3).counts])
print("total:", render(total_rank3(lam3)))

# exponent p: elementary abelian subgroups, only the rank matters
print(render(count_exponent_p(4)))
# exponent p^2 only sees parts truncated at 2
print(render(count_exponent_p2(Partition.parse("4.2.1.1"))))
print(render(count_exponent(Partition.parse("2.2.1.1"), 2)))

# groups of the same order with different types never share a profile
print(profiles_isomorphic(Partition.parse("2.2"), Partition.parse("3.1"), 2))
print(profiles_isomorphic(Partition.parse("3.1"), Partition.parse("3.1"), 2))
