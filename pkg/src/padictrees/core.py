"""Exact p-adic valuations and absolute values over the rationals.

Rationals are plain :class:`fractions.Fraction` values (always reduced, with a
positive denominator).  The valuation of zero is the singleton :data:`INF`,
which compares greater than every integer and absorbs addition.
"""

from __future__ import annotations

import operator
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC
from typing import Union

from sympy import isprime

__all__ = [
    "INF",
    "Infinity",
    "InvalidPrimeError",
    "Prime",
    "Valuation",
    "as_rational",
    "padic_abs",
    "valuation_int",
    "valuation_rat",
]


class Infinity:
    """The valuation of zero.  Use the :data:`INF` singleton."""

    _instance: "Infinity | None" = None

    def __new__(cls) -> "Infinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __str__(self) -> str:
        return "inf"

    def __reduce__(self):
        return (Infinity, ())

    def __hash__(self) -> int:
        return hash("padictrees.INF")

    def __eq__(self, other: object) -> bool:
        return other is self

    def __lt__(self, other: object) -> bool:
        if other is self or isinstance(other, int):
            return False
        return NotImplemented

    def __le__(self, other: object) -> bool:
        if other is self:
            return True
        if isinstance(other, int):
            return False
        return NotImplemented

    def __gt__(self, other: object) -> bool:
        if other is self:
            return False
        if isinstance(other, int):
            return True
        return NotImplemented

    def __ge__(self, other: object) -> bool:
        if other is self or isinstance(other, int):
            return True
        return NotImplemented

    def __add__(self, other: object) -> "Infinity":
        if other is self or isinstance(other, int):
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: object) -> "Infinity":
        if isinstance(other, int):
            return self
        return NotImplemented


INF = Infinity()

Valuation = Union[int, Infinity]


class InvalidPrimeError(ValueError):
    """Raised when a modulus that should be prime is not."""


@lru_cache(maxsize=256)
def _checked(p: int) -> int:
    if p < 2 or not isprime(p):
        raise InvalidPrimeError(f"{p} is not a prime")
    return p


class Prime(int):
    """An ``int`` known to be prime; primality is checked on construction."""

    def __new__(cls, p) -> "Prime":
        if isinstance(p, Prime):
            return p
        try:
            value = operator.index(p)
        except TypeError:
            raise InvalidPrimeError(f"{p!r} is not an integer") from None
        return super().__new__(cls, _checked(value))

    def __repr__(self) -> str:
        return f"Prime({int(self)})"

    __str__ = int.__repr__
    __format__ = int.__format__


def as_rational(x) -> Fraction:
    """Coerce an int, Fraction or ``"a/b"`` string to a Fraction, exactly.

    Floats are rejected: nothing in this package is approximate.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def valuation_int(n: int, p: int) -> Valuation:
    """Return the exponent of the largest power of ``p`` dividing ``n``.

    >>> valuation_int(8, 2)
    3
    >>> valuation_int(0, 3)
    INF
    """
    p = Prime(p)
    n = operator.index(n)
    if n == 0:
        return INF
    if p == 2:
        n = abs(n)
        return (n & -n).bit_length() - 1
    v = 0
    while True:
        q, r = divmod(n, p)
        if r:
            return v
        n = q
        v += 1


def valuation_rat(r, p: int) -> Valuation:
    """``nu_p(a/b) = nu_p(a) - nu_p(b)``; may be negative, ``INF`` for zero."""
    r = as_rational(r)
    if r == 0:
        return INF
    return valuation_int(r.numerator, p) - valuation_int(r.denominator, p)


def padic_abs(r, p: int) -> Fraction:
    """The p-adic absolute value ``p**(-nu_p(r))`` as an exact rational."""
    p = Prime(p)
    v = valuation_rat(r, p)
    if v is INF:
        return Fraction(0)
    return Fraction(1, p**v) if v >= 0 else Fraction(p ** (-v))
