"""Roots of integer polynomials in Z_p, found by lifting residues digit by digit.

A residue class ``a + p^k Z_p`` is *certified* when Hensel's lemma pins down
exactly one root inside it.  With ``mu = nu_p(F'(a))`` finite and ``k > mu``,
the class holds a root iff ``nu_p(F(a)) >= k + mu``, and then the root is
unique and simple.  Classes with ``k > mu`` that fail the test are root-free
and get pruned, which is what separates true root prefixes from the extra
solutions of ``F = 0 mod p^k`` that cluster around a root.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .core import INF, Prime, Valuation, valuation_int
from .expansion import truncation_value
from .polynomial import Polynomial, ZeroPolynomialError

__all__ = [
    "DEFAULT_NODE_BUDGET",
    "ResourceLimitError",
    "RootPrefix",
    "extend_certified",
    "roots_mod_pk",
    "zp_root_prefixes",
]

DEFAULT_NODE_BUDGET = 100_000


class ResourceLimitError(RuntimeError):
    """The lifting search examined more candidates than its budget allows."""


@dataclass(frozen=True, order=True)
class RootPrefix:
    digits: tuple[int, ...]
    prime: int
    certified: bool = False

    @property
    def value(self) -> int:
        return truncation_value(self.digits, self.prime)


def _int_coeffs(F) -> list[int]:
    if isinstance(F, Polynomial):
        cs = F.integer_coeffs()
    else:
        cs = [int(c) for c in F]
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        raise ZeroPolynomialError("the zero polynomial has every residue as a root")
    return cs


def _horner(cs: Sequence[int], x: int, m: int | None = None) -> int:
    acc = 0
    if m is None:
        for c in reversed(cs):
            acc = acc * x + c
    else:
        for c in reversed(cs):
            acc = (acc * x + c) % m
    return acc


def _derivative(cs: Sequence[int]) -> list[int]:
    return [i * c for i, c in enumerate(cs)][1:] or [0]


def roots_mod_pk(F, p: int, k: int, budget: int = DEFAULT_NODE_BUDGET) -> list[int]:
    """Sorted residues ``c`` in ``[0, p**k)`` with ``F(c) = 0 mod p**k``.

    >>> roots_mod_pk([7, 0, 1], 2, 4)
    [3, 5, 11, 13]
    """
    p = Prime(p)
    cs = _int_coeffs(F)
    if k < 0:
        raise ValueError("k must be nonnegative")
    level = [0]
    examined = 0
    for j in range(k):
        step = p**j
        mod = step * p
        nxt = []
        for c in level:
            for t in range(p):
                examined += 1
                if examined > budget:
                    raise ResourceLimitError(f"more than {budget} candidates while lifting mod {p}^{j + 1}")
                cand = c + t * step
                if _horner(cs, cand, mod) == 0:
                    nxt.append(cand)
        level = nxt
        if not level:
            break
    return sorted(level)


def _class_state(cs, dcs, a: int, k: int, p: int) -> tuple[str, Valuation, Valuation]:
    """Classify ``a + p^k Z_p`` as ``certified``, ``empty`` or ``open``."""
    fv = valuation_int(_horner(cs, a), p)
    if fv is not INF and fv < k:
        return "empty", fv, INF
    mu = valuation_int(_horner(dcs, a), p)
    if mu is INF or mu >= k:
        return "open", fv, mu
    return ("certified" if fv >= k + mu else "empty"), fv, mu


def _primitive(cs: list[int]) -> list[int]:
    g = gcd(*cs)
    return [c // g for c in cs]


def zp_root_prefixes(F, p: int, depth: int, budget: int = DEFAULT_NODE_BUDGET) -> list[RootPrefix]:
    """Length-``depth`` digit prefixes of the classes that may contain a Z_p root.

    Certified prefixes each contain exactly one simple root, so distinct
    certified prefixes are distinct roots.  Uncertified ones (repeated roots or
    insufficient depth) are returned with ``certified=False``.
    """
    p = Prime(p)
    if depth < 1:
        raise ValueError("depth must be positive")
    cs = _primitive(_int_coeffs(F))
    if len(cs) == 1:
        return []
    dcs = _derivative(cs)
    level: list[tuple[int, str]] = [(0, "open")]
    examined = 0
    for j in range(depth):
        step = p**j
        nxt = []
        for c, state in level:
            for t in range(p):
                examined += 1
                if examined > budget:
                    raise ResourceLimitError(f"more than {budget} classes while lifting mod {p}^{j + 1}")
                cand = c + t * step
                new_state, _, _ = _class_state(cs, dcs, cand, j + 1, p)
                if new_state != "empty":
                    nxt.append((cand, new_state))
        level = nxt
        if not level:
            return []
    out = []
    for c, state in level:
        digits = tuple((c // p**i) % p for i in range(depth))
        out.append(RootPrefix(digits, int(p), state == "certified"))
    return sorted(out)


def extend_certified(F, prefix: RootPrefix, extra: int) -> RootPrefix:
    """Follow the unique root of a certified class for ``extra`` more digits."""
    if not prefix.certified:
        raise ValueError("only certified prefixes have a unique extension")
    p = Prime(prefix.prime)
    cs = _primitive(_int_coeffs(F))
    dcs = _derivative(cs)
    digits = list(prefix.digits)
    a = truncation_value(digits, p)
    for _ in range(extra):
        k = len(digits)
        hits = [t for t in range(p) if _class_state(cs, dcs, a + t * p**k, k + 1, p)[0] == "certified"]
        if len(hits) != 1:
            raise ValueError(f"prefix {prefix.digits} is not a certified root class of F")
        a += hits[0] * p**k
        digits.append(hits[0])
    return RootPrefix(tuple(digits), int(p), True)
