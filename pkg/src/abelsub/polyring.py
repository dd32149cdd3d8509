"""Polynomials in ``p`` with unbounded integer coefficients, and Gaussian binomials."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence


class IntPoly:
    """Dense polynomial; ``coeffs[k]`` is the coefficient of ``p**k``.

    Immutable. The zero polynomial has no coefficients.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        if k < 0:
            raise ValueError("negative degree")
        return cls((0,) * k + (c,))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-c for c in self._coeffs)

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self._coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> IntPoly:
        """Multiply by ``p**k``."""
        if k < 0:
            raise ValueError("negative shift")
        if not self._coeffs:
            return self
        return IntPoly((0,) * k + self._coeffs)

    def __call__(self, p: int) -> int:
        return self.eval(p)

    def eval(self, p):
        """Horner evaluation; exact for ``int`` and ``Fraction`` arguments."""
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * p + c
        return acc

    def __repr__(self):
        return f"IntPoly({list(self._coeffs)})"

    def __str__(self):
        return render(self)

    def to_json(self) -> list[int]:
        return list(self._coeffs)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> IntPoly:
        return cls(data)


ZERO = IntPoly()
ONE = IntPoly((1,))
P = IntPoly((0, 1))


def render(a: IntPoly, var: str = "p") -> str:
    """``3*p^2+5*p+7``; unit coefficients are dropped (``p^2+p+1``)."""
    terms = []
    for k in range(a.degree, -1, -1):
        c = a.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if k == 0:
            body = str(c)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if c == 1 else f"{c}*{mono}"
        terms.append((sign, body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += sign + body
    return out


def geometric(lo: int, hi: int) -> IntPoly:
    """``p^lo + p^(lo+1) + ... + p^hi`` (zero when ``hi < lo``)."""
    if hi < lo:
        return ZERO
    return IntPoly([0] * lo + [1] * (hi - lo + 1))


@lru_cache(maxsize=None)
def gauss_binom(n: int, k: int) -> IntPoly:
    """Gaussian binomial coefficient as a polynomial in ``p``.

    Built from ``[n,k] = [n-1,k-1] + p^k [n-1,k]``. Out-of-range ``k`` gives 0.
    """
    if n < 0 or k < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return gauss_binom(n - 1, k - 1) + gauss_binom(n - 1, k).shift(k)


def galois_number(n: int) -> IntPoly:
    """Number of subspaces of ``F_p^n``."""
    out = ZERO
    for k in range(n + 1):
        out = out + gauss_binom(n, k)
    return out
