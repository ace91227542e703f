from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from padictrees.core import INF, InvalidPrimeError, Prime, as_rational, padic_abs, valuation_int, valuation_rat

primes = st.sampled_from([2, 3, 5, 7, 11, 101])
nonzero = st.integers(-(10**30), 10**30).filter(bool)
rationals = st.fractions(max_denominator=10**6)


def naive_valuation(n: int, p: int):
    if n == 0:
        return INF
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@pytest.mark.parametrize(
    "n, p, v",
    [(8, 2, 3), (1, 2, 0), (2**100 * 3, 2, 100), (-45, 3, 2), (0, 5, INF), (7**20, 7, 20), (-1, 11, 0)],
)
def test_valuation_int(n, p, v):
    assert valuation_int(n, p) == v


@pytest.mark.parametrize(
    "r, p, v",
    [("3/2", 2, -1), ("3/2", 3, 1), ("3/5", 3, 1), ("4/5", 5, -1), (Fraction(0), 7, INF), ("-27/2", 3, 3)],
)
def test_valuation_rat(r, p, v):
    assert valuation_rat(Fraction(r), p) == v


def test_worked_values():
    assert valuation_rat(Fraction(2**2 + 4), 2) == 3
    assert valuation_rat(Fraction(1 + 4), 2) == 0


def test_padic_abs():
    assert padic_abs(Fraction(3, 4), 2) == 4
    assert padic_abs(Fraction(18), 3) == Fraction(1, 9)
    assert padic_abs(0, 5) == 0


@pytest.mark.parametrize("p", [0, 1, 4, -3, 91, 2**61 + 1])
def test_bad_primes(p):
    with pytest.raises(InvalidPrimeError):
        Prime(p)


def test_prime_is_an_int():
    p = Prime(2**61 - 1)
    assert p == 2**61 - 1 and str(Prime(7)) == "7" and f"{Prime(7)}" == "7"
    with pytest.raises(InvalidPrimeError):
        Prime("7")


def test_infinity_order_and_arithmetic():
    assert INF > 10**100 and not INF < 0 and INF >= INF
    assert INF + 3 == INF and 3 + INF == INF and INF - 5 == INF
    assert min(INF, 4) == 4 and str(INF) == "inf"


def test_as_rational_rejects_floats():
    assert as_rational("7/21") == Fraction(1, 3)
    with pytest.raises(TypeError):
        as_rational(0.5)


@given(nonzero, primes)
def test_matches_naive(n, p):
    assert valuation_int(n, p) == naive_valuation(n, p)


@given(rationals, rationals, primes)
def test_multiplicative(a, b, p):
    assert valuation_rat(a * b, p) == valuation_rat(a, p) + valuation_rat(b, p)


@given(rationals, rationals, primes)
def test_ultrametric(a, b, p):
    va, vb = valuation_rat(a, p), valuation_rat(b, p)
    assert valuation_rat(a + b, p) >= min(va, vb)
    if va != vb:
        assert valuation_rat(a + b, p) == min(va, vb)
    assert padic_abs(a + b, p) <= max(padic_abs(a, p), padic_abs(b, p))
