"""Truncated base-p digit expansions of rationals.

Two indexing conventions are offered.  :func:`expand` starts at the valuation
of the number so that the first digit is nonzero (negative exponents allowed).
:func:`digits_from_zero` always starts at exponent 0 and keeps leading zeros;
it is the form the tree code consumes position by position.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import Prime, Valuation, as_rational, valuation_rat

__all__ = [
    "DigitExpansion",
    "congruence_order",
    "digits_from_zero",
    "expand",
    "is_padic_integer",
    "residue_mod",
    "truncation_value",
]


@dataclass(frozen=True)
class DigitExpansion:
    """``source`` ~ sum(d * prime**(start_exponent + i) for i, d in enumerate(digits))."""

    prime: int
    start_exponent: int
    digits: tuple[int, ...]
    source: Fraction

    def __post_init__(self):
        if any(not 0 <= d < self.prime for d in self.digits):
            raise ValueError("digit out of range")
        if self.source != 0 and self.digits and self.digits[0] == 0:
            raise ValueError("leading digit of a nonzero expansion must be nonzero")

    @property
    def precision(self) -> int:
        """Exponent up to which the partial sum agrees with ``source``."""
        return self.start_exponent + len(self.digits)

    def partial_sum(self) -> Fraction:
        return Fraction(truncation_value(self.digits, self.prime)) * Fraction(self.prime) ** self.start_exponent

    def __str__(self) -> str:
        if not self.digits:
            return "0"
        p = self.prime
        return " + ".join(
            f"{d}·{p}^{self.start_exponent + i}" for i, d in enumerate(self.digits)
        )


def is_padic_integer(r, p: int) -> bool:
    """True iff ``r`` lies in Z_p, i.e. ``p`` does not divide its denominator."""
    p = Prime(p)
    return as_rational(r).denominator % p != 0


def residue_mod(r, p: int, k: int) -> int:
    """The integer in ``[0, p**k)`` congruent to the p-adic integer ``r``."""
    p = Prime(p)
    r = as_rational(r)
    if r.denominator % p == 0:
        raise ValueError(f"{r} is not a {p}-adic integer")
    m = p**k
    if m == 1:
        return 0
    return r.numerator * pow(r.denominator, -1, m) % m


def _base_digits(value: int, p: int, count: int) -> list[int]:
    out = []
    for _ in range(count):
        value, d = divmod(value, p)
        out.append(d)
    return out


def expand(r, p: int, count: int) -> DigitExpansion:
    """First ``count`` digits of ``r`` starting at exponent ``nu_p(r)``.

    >>> str(expand(Fraction(4, 5), 5, 3))
    '4·5^-1 + 0·5^0 + 0·5^1'
    """
    p = Prime(p)
    if count < 1:
        raise ValueError("count must be positive")
    r = as_rational(r)
    if r == 0:
        return DigitExpansion(p, 0, (), r)
    n0 = valuation_rat(r, p)
    unit = r / Fraction(p) ** n0
    digits = _base_digits(residue_mod(unit, p, count), p, count)
    return DigitExpansion(p, n0, tuple(digits), r)


def digits_from_zero(r, p: int, count: int) -> tuple[int, ...]:
    """Digits ``c_0 .. c_{count-1}`` of a p-adic integer, leading zeros kept."""
    p = Prime(p)
    if count < 0:
        raise ValueError("count must be nonnegative")
    return tuple(_base_digits(residue_mod(r, p, count), p, count))


def truncation_value(digits: Sequence[int], p: int) -> int:
    """``sum(d * p**j)``, the integer whose base-p digits are ``digits``."""
    total = 0
    for d in reversed(digits):
        total = total * p + d
    return total


def congruence_order(r1, r2, p: int) -> Valuation:
    """Largest ``r`` with ``r1 = r2 mod p**r`` (``INF`` when equal).

    >>> congruence_order(9, Fraction(-1, 3), 2)
    2
    """
    if not (is_padic_integer(r1, p) and is_padic_integer(r2, p)):
        raise ValueError("congruence order is only defined on p-adic integers")
    return valuation_rat(as_rational(r1) - as_rational(r2), p)
