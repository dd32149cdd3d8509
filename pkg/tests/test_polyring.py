from math import comb, prod

import pytest
from hypothesis import given, strategies as st

from abelsub.polyring import ONE, P, ZERO, IntPoly, galois_number, gauss_binom, render

polys = st.lists(st.integers(-50, 50), max_size=6).map(IntPoly)


def test_basic_arithmetic():
    assert (P + 1) + ZERO == P + 1
    assert (P + 1) * IntPoly((-1, 1)) == IntPoly((-1, 0, 1))
    assert ONE.shift(3) == IntPoly((0, 0, 0, 1))
    assert IntPoly((5, 0, 0)).degree == 0
    assert ZERO.degree == -1 and ZERO.coeffs == ()


def test_eval():
    assert IntPoly((2, 2, 1)).eval(2) == 10
    assert ZERO.eval(7) == 0
    assert IntPoly((7, 5, 3)).eval(3) == 49
    assert IntPoly((1,) * 40).eval(10 ** 6) == sum(10 ** (6 * k) for k in range(40))


@pytest.mark.parametrize("coeffs, text", [
    ((7, 5, 3), "3*p^2+5*p+7"),
    ((2, 1), "p+2"),
    ((), "0"),
    ((-1, 0, 1), "p^2-1"),
    ((0, -2), "-2*p"),
    ((1, 1, 1), "p^2+p+1"),
])
def test_render(coeffs, text):
    assert render(IntPoly(coeffs)) == text


def test_json_is_ascending():
    assert IntPoly((7, 5, 3)).to_json() == [7, 5, 3]
    assert IntPoly.from_json([7, 5, 3]) == IntPoly((7, 5, 3))


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@given(polys, st.integers(0, 5), st.integers(-4, 4))
def test_shift_and_eval_homomorphism(a, k, x):
    if not a.is_zero():
        assert a.shift(k).degree == a.degree + k
    assert a.shift(k).eval(x) == a.eval(x) * x ** k
    assert (a * a).eval(x) == a.eval(x) ** 2


def _quotient(n, k, p):
    # defining quotient of products of (p^i - 1)
    num = prod(p ** i - 1 for i in range(1, n + 1))
    den = prod(p ** i - 1 for i in range(1, k + 1)) * prod(p ** i - 1 for i in range(1, n - k + 1))
    assert num % den == 0
    return num // den


def test_gauss_binom_examples():
    assert gauss_binom(5, 0) == ONE
    assert gauss_binom(2, 1) == P + 1
    assert gauss_binom(4, 2) == IntPoly((1, 1, 2, 1, 1))
    for p in (2, 3, 5):
        assert gauss_binom(4, 2).eval(p) == _quotient(4, 2, p)
    assert gauss_binom(3, 4) == ZERO and gauss_binom(3, -1) == ZERO


def test_gauss_binom_properties():
    for n in range(13):
        for k in range(n + 1):
            g = gauss_binom(n, k)
            assert g == gauss_binom(n, n - k)
            assert g.eval(1) == comb(n, k)
            assert all(c >= 0 for c in g.coeffs)
            if k >= 1:
                assert g == gauss_binom(n - 1, k - 1) + gauss_binom(n - 1, k).shift(k)


def test_gauss_binom_matches_product_identity():
    for p in (2, 3, 5):
        for n in range(11):
            full = prod(p ** i - 1 for i in range(1, n + 1))
            for k in range(n + 1):
                left = (gauss_binom(n, k).eval(p) * prod(p ** i - 1 for i in range(1, k + 1))
                        * prod(p ** i - 1 for i in range(1, n - k + 1)))
                assert left == full


def test_galois_numbers_count_subspaces():
    # subspaces of F_2^n: 1, 2, 5, 16, 67
    assert [galois_number(n).eval(2) for n in range(5)] == [1, 2, 5, 16, 67]
