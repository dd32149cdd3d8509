"""Mean exponent of the subgroups of ``Z_n x Z_n`` and its average order.

``A(n) = sigma(n)^2 / s(n)`` where ``s(n)`` counts the subgroups of
``Z_n x Z_n``. ``A`` is multiplicative, ``f(n) = A(n)/n`` lies in ``(0, 1]``,
``g = mu * f`` is its Moebius transform, and ``sum_{n<=x} A(n)`` grows like
``(M/2) x^2`` with ``M`` the mean value of ``f`` given by an Euler product.

Everything is exact (``Fraction``) except :func:`mean_value_M` and the float
partial sums used for large ``x``.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arith import Factorization, divisors, factor, primes_upto, sigma, smallest_prime_factor, tau_sq
from .pgroup import DomainError


# exact sums are grouped by denominator; past this the float path is the practical one
EXACT_SUM_LIMIT = 10 ** 5


def s_prime_power(p: int, nu: int) -> int:
    """Number of subgroups of ``Z_{p^nu} x Z_{p^nu}``."""
    num = p ** (nu + 2) + p ** (nu + 1) - (2 * nu + 3) * p + 2 * nu + 1
    q, r = divmod(num, (p - 1) ** 2)
    assert r == 0
    return q


def s_nn(n: int) -> int:
    out = 1
    for p, e in factor(n):
        out *= s_prime_power(p, e)
    return out


def mean_exponent_A_prime_power(p: int, nu: int) -> Fraction:
    return Fraction((p ** (nu + 1) - 1) ** 2,
                    p ** (nu + 2) + p ** (nu + 1) - (2 * nu + 3) * p + 2 * nu + 1)


def mean_exponent_A(n: int) -> Fraction:
    if n < 1:
        raise DomainError("n must be positive")
    return Fraction(sigma(n) ** 2, s_nn(n))


def f_value(n: int) -> Fraction:
    return mean_exponent_A(n) / n


def g_prime_power(p: int, nu: int) -> Fraction:
    """``f(p^nu) - f(p^(nu-1))`` in closed form."""
    if nu < 1:
        raise DomainError("nu must be positive")
    S = sum(p ** i for i in range(nu))
    T = sum((2 * i + 1) * p ** (nu - 1 - i) for i in range(nu))
    return Fraction(2 * S * T * p + T - p * S * S * (2 * nu + 1),
                    p ** nu * T * (T * p + 2 * nu + 1))


def g_value(n: int) -> Fraction:
    out = Fraction(1)
    for p, e in factor(n):
        out *= g_prime_power(p, e)
    return out


def _local_factor(p: int, rel_tol: float) -> float:
    # (1 - 1/p) * sum_nu f(p^nu) / p^nu, summed until a term falls below rel_tol
    total = 1.0
    nu = 1
    while True:
        A = mean_exponent_A_prime_power(p, nu)
        term = float(A / p ** (2 * nu))
        total += term
        if term < rel_tol * total or nu > 200:
            break
        nu += 1
    return (1.0 - 1.0 / p) * total


def _euler_product(prime_limit: int, rel_tol: float) -> float:
    logs = [math.log(_local_factor(int(p), rel_tol)) for p in primes_upto(prime_limit)]
    return math.exp(math.fsum(logs))


def mean_value_M(prime_limit: int = 10 ** 5, rel_tol: float = 1e-15) -> tuple[float, float]:
    """Truncated Euler product for the mean value of ``f``.

    Returns ``(value, error_estimate)`` with the estimate taken as the change
    from halving the prime limit.
    """
    if prime_limit < 2:
        raise DomainError("prime_limit must be at least 2")
    value = _euler_product(prime_limit, rel_tol)
    half = _euler_product(max(prime_limit // 2, 1), rel_tol)
    return value, abs(value - half)


def _check_x(x: int, limit: int | None) -> None:
    if x < 1:
        raise DomainError("x must be positive")
    if limit is not None and x > limit:
        raise DomainError(f"x = {x} exceeds the exact-sum limit {limit}")


def partial_sum_A(x: int, limit: int | None = EXACT_SUM_LIMIT) -> Fraction:
    """Exact ``sum_{n<=x} A(n)``."""
    _check_x(x, limit)
    return _exact_sum(x, divide=False)


def partial_sum_f(x: int, limit: int | None = EXACT_SUM_LIMIT) -> Fraction:
    """Exact ``sum_{n<=x} A(n)/n``."""
    _check_x(x, limit)
    return _exact_sum(x, divide=True)


def _exact_sum(x: int, divide: bool) -> Fraction:
    # group terms by denominator to keep Fraction additions cheap
    by_den: dict[int, int] = {}
    for n in range(1, x + 1):
        num, den = sigma(n) ** 2, s_nn(n)
        if divide:
            den *= n
        by_den[den] = by_den.get(den, 0) + num
    return sum((Fraction(v, k) for k, v in by_den.items()), Fraction(0))


def _A_float_table(x: int) -> np.ndarray:
    """``A(n)`` for ``0 <= n <= x`` as binary64 (``A(0) = 0``), via a smallest-prime-factor sieve."""
    spf = smallest_prime_factor(x)
    out = np.zeros(x + 1)
    if x >= 1:
        out[1] = 1.0
    cache: dict[tuple[int, int], float] = {}
    for n in range(2, x + 1):
        p = int(spf[n])
        m, e = n // p, 1
        while m % p == 0:
            m //= p
            e += 1
        v = cache.get((p, e))
        if v is None:
            v = float(mean_exponent_A_prime_power(p, e))
            cache[(p, e)] = v
        out[n] = out[m] * v
    return out


def partial_sum_A_float(x_values) -> dict[int, float]:
    """``sum_{n<=x} A(n)`` in binary64 for each requested ``x``."""
    xs = sorted(set(int(x) for x in x_values))
    if not xs or xs[0] < 1:
        raise DomainError("x values must be positive")
    table = _A_float_table(xs[-1])
    cums = np.cumsum(table)
    return {x: float(cums[x]) for x in xs}


@dataclass(frozen=True)
class ReportRow:
    x: int
    sum_A: float
    prediction: float
    ratio: float


def asymptotic_report(x_values, prime_limit: int = 10 ** 5, rel_tol: float = 1e-15,
                      M: float | None = None) -> list[ReportRow]:
    """Compare ``sum_{n<=x} A(n)`` with ``(M/2) x^2`` at each ``x``."""
    xs = [int(x) for x in x_values]
    if xs != sorted(xs):
        raise DomainError("x values must be ascending")
    if M is None:
        M, _ = mean_value_M(prime_limit, rel_tol)
    sums = partial_sum_A_float(xs)
    rows = []
    for x in xs:
        pred = M / 2 * x * x
        rows.append(ReportRow(x, sums[x], pred, sums[x] / pred))
    return rows


def report_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["x", "sum_A", "prediction", "ratio"])
    for r in rows:
        w.writerow([r.x, repr(r.sum_A), repr(r.prediction), repr(r.ratio)])
    return buf.getvalue()


def mobius_check(n: int) -> bool:
    """``sum_{d|n} g(d) == f(n)``."""
    return sum((g_value(d) for d in divisors(n)), Fraction(0)) == f_value(n)


def g_bound(p: int, nu: int) -> Fraction:
    return Fraction(2 * nu - 1, p ** nu)


def tau_sq_bound_holds(n: int) -> bool:
    return abs(g_value(n)) <= Fraction(tau_sq(n), n)
