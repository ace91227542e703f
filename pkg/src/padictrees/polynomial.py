"""Univariate polynomials in ``n`` with exact rational coefficients.

:class:`FactoredPolynomial` is the form the tree builders work with: a
rational constant times canonical integer linear factors times a primitive
integer residual with no rational roots.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .core import as_rational

__all__ = [
    "FactoredPolynomial",
    "LinearFactor",
    "Polynomial",
    "ZeroPolynomialError",
    "evaluate",
    "expand",
    "factor_rational",
    "root",
]


class ZeroPolynomialError(ValueError):
    """The zero polynomial was given where a nonzero one is required."""


def _coeff_str(c: Fraction, first: bool, power: int) -> str:
    sign = "-" if c < 0 else "+"
    mag = abs(c)
    if power == 0:
        body = str(mag)
    elif mag == 1:
        body = ""
    elif mag.denominator == 1:
        body = str(mag)
    else:
        body = f"{mag}*"
    var = "" if power == 0 else ("n" if power == 1 else f"n^{power}")
    text = body + var
    if first:
        return text if sign == "+" else "-" + text
    return f" {sign} {text}"


@dataclass(frozen=True)
class Polynomial:
    """Coefficients are stored constant term first, without trailing zeros."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        cs = [as_rational(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def var(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def from_ints(cls, coeffs: Iterable[int]) -> "Polynomial":
        return cls(tuple(Fraction(c) for c in coeffs))

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def integer_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ValueError("polynomial has non-integer coefficients")
        return [c.numerator for c in self.coeffs]

    def clear_denominators(self) -> tuple[int, list[int]]:
        """Return ``(D, F)`` with ``D > 0`` minimal and ``F = D*self`` integral."""
        d = lcm(*(c.denominator for c in self.coeffs)) if self.coeffs else 1
        return d, [(c * d).numerator for c in self.coeffs]

    def __call__(self, x) -> Fraction:
        return evaluate(self, x)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "Polynomial":
        other = _lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Polynomial(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        other = _lift(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def compose_affine(self, shift, scale) -> "Polynomial":
        """Coefficients in ``t`` of ``self(shift + scale*t)``."""
        lin = Polynomial((shift, scale))
        result = Polynomial()
        for c in reversed(self.coeffs):
            result = result * lin + c
        return result

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c:
                parts.append(_coeff_str(c, not parts, power))
        return "".join(parts)


def _lift(x):
    if isinstance(x, Polynomial):
        return x
    try:
        return Polynomial.constant(as_rational(x))
    except TypeError:
        return NotImplemented


def evaluate(f: Polynomial, x) -> Fraction:
    """Exact Horner evaluation of ``f`` at a rational point."""
    x = as_rational(x)
    acc = Fraction(0)
    for c in reversed(f.coeffs):
        acc = acc * x + c
    return acc


@dataclass(frozen=True, order=True)
class LinearFactor:
    """``a*n + b`` with ``a > 0`` and ``gcd(a, b) = 1``."""

    a: int
    b: int

    def __post_init__(self):
        if self.a <= 0:
            raise ValueError("leading coefficient must be positive")
        if gcd(self.a, self.b) != 1:
            raise ValueError(f"gcd({self.a}, {self.b}) != 1")

    @classmethod
    def normalized(cls, a: int, b: int) -> tuple[Fraction, "LinearFactor"]:
        """Split ``a*n + b`` into ``scale * LinearFactor``."""
        if a == 0:
            raise ValueError("not a linear factor")
        g = gcd(a, b) * (1 if a > 0 else -1)
        return Fraction(g), cls(a // g, b // g)

    def root(self) -> Fraction:
        return Fraction(-self.b, self.a)

    def as_polynomial(self) -> Polynomial:
        return Polynomial((self.b, self.a))

    def __str__(self) -> str:
        lead = "n" if self.a == 1 else f"{self.a}n"
        if self.b == 0:
            return lead
        sign = "+" if self.b > 0 else "-"
        return f"({lead}{sign}{abs(self.b)})"


def root(l: LinearFactor) -> Fraction:
    """The rational root ``-b/a`` of a linear factor."""
    return l.root()


@dataclass(frozen=True)
class FactoredPolynomial:
    constant: Fraction
    linear_factors: tuple[LinearFactor, ...] = ()
    residual: Polynomial = field(default_factory=lambda: Polynomial.constant(1))

    def __post_init__(self):
        object.__setattr__(self, "constant", as_rational(self.constant))
        object.__setattr__(self, "linear_factors", tuple(sorted(self.linear_factors)))
        res = self.residual
        if not res.is_integral() or res.is_zero():
            raise ValueError("residual must be a nonzero integer polynomial")
        ints = res.integer_coeffs()
        if gcd(*ints) != 1 or ints[-1] < 0:
            raise ValueError("residual must be primitive with positive leading coefficient")
        if self.constant == 0 and (self.linear_factors or res.degree > 0):
            raise ValueError("zero constant with nontrivial factors")

    @classmethod
    def zero(cls) -> "FactoredPolynomial":
        return cls(Fraction(0))

    def is_zero(self) -> bool:
        return self.constant == 0

    def is_completely_factored(self) -> bool:
        """True when there is no residual factor of positive degree."""
        return self.residual.degree == 0

    @property
    def degree(self) -> int:
        if self.is_zero():
            return -1
        return len(self.linear_factors) + self.residual.degree

    def expand(self) -> Polynomial:
        out = Polynomial.constant(self.constant) * self.residual
        for lf in self.linear_factors:
            out = out * lf.as_polynomial()
        return out

    def __mul__(self, other: "FactoredPolynomial") -> "FactoredPolynomial":
        if not isinstance(other, FactoredPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return FactoredPolynomial.zero()
        return FactoredPolynomial(
            self.constant * other.constant,
            self.linear_factors + other.linear_factors,
            self.residual * other.residual,
        )

    def __pow__(self, e: int) -> "FactoredPolynomial":
        out = FactoredPolynomial(Fraction(1))
        for _ in range(e):
            out = out * self
        return out

    def __str__(self) -> str:
        return render(self)


def render(f: FactoredPolynomial) -> str:
    """Text form of ``f`` that :func:`padictrees.parser.parse` reads back."""
    if f.is_zero():
        return "0"
    parts = []
    counts: dict[LinearFactor, int] = {}
    for lf in f.linear_factors:
        counts[lf] = counts.get(lf, 0) + 1
    for lf, m in counts.items():
        parts.append(f"{lf}^{m}" if m > 1 else str(lf))
    if f.residual.degree > 0:
        parts.append(f"({f.residual})")
    c = f.constant
    if not parts:
        return str(c)
    if c == 1:
        return "*".join(parts)
    if c == -1:
        return "-" + "*".join(parts)
    return f"{c}*" + "*".join(parts)


def expand(f: FactoredPolynomial) -> Polynomial:
    """Multiply out a factored polynomial."""
    return f.expand()


def _primitive(ints: Sequence[int]) -> tuple[int, list[int]]:
    g = gcd(*ints)
    if ints[-1] < 0:
        g = -g
    return g, [c // g for c in ints]


def factor_rational(f: Polynomial) -> FactoredPolynomial:
    """Split off every rational root of ``f`` as a canonical linear factor.

    Factorisation over Z is delegated to sympy; the linear pieces are
    canonicalised and everything of higher degree is folded into the residual.
    """
    if f.is_zero():
        return FactoredPolynomial.zero()
    d, ints = f.clear_denominators()
    content, prim = _primitive(ints)
    constant = Fraction(content, d)
    if len(prim) == 1:
        return FactoredPolynomial(constant)

    from sympy import Poly, Symbol

    unit, pieces = Poly(list(reversed(prim)), Symbol("n"), domain="ZZ").factor_list()
    constant *= int(unit)
    linear: list[LinearFactor] = []
    residual = Polynomial.constant(1)
    for piece, mult in pieces:
        cs = [int(c) for c in reversed(piece.all_coeffs())]
        if cs[-1] < 0:
            cs = [-c for c in cs]
            constant *= (-1) ** mult
        if len(cs) == 2:
            linear.extend([LinearFactor(cs[1], cs[0])] * mult)
        else:
            residual = residual * Polynomial.from_ints(cs) ** mult
    return FactoredPolynomial(constant, tuple(linear), residual)
