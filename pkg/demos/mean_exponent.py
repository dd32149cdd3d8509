"""
Average exponent of the subgroups of Z_n x Z_n
==============================================

A(n) = sigma(n)^2 / s(n), with s(n) the number of subgroups. Its partial
sums grow like (M/2) x^2, where M comes from an Euler product.
"""

import numpy as np

from abelsub import asymptotics as asy

for n in (1, 2, 4, 6, 12, 360):
    print(n, asy.mean_exponent_A(n), float(asy.f_value(n)))

# f = A/n is multiplicative with Moebius transform g; check a few n
print(all(asy.mobius_check(n) for n in range(1, 200)))
print([str(asy.g_prime_power(2, nu)) for nu in range(1, 5)])

M, err = asy.mean_value_M(10 ** 5)
print(f"M ~ {M:.12f}, change from halving the prime limit {err:.1e}")

rows = asy.asymptotic_report([10 ** k for k in range(1, 6)], M=M)
print(asy.report_csv(rows))

# the ratio settles towards 1
ratios = np.array([r.ratio for r in rows])
print(np.abs(ratios - 1))

# exact and float partial sums agree
x = 2000
print(float(asy.partial_sum_A(x)), asy.partial_sum_A_float([x])[x])
