"""Valuation trees read off from the roots of a factored polynomial.

For ``f = c * prod(a_i n + b_i)`` a node with digits ``d_0 .. d_{k-1}`` is
classified by comparing those digits with the p-adic digits of each root
``-b_i/a_i``: the first mismatch position ``v_i`` is the valuation the node
contributes for factor ``i``.  If some root matches all ``k`` digits the node
contains that root and does not terminate; otherwise it terminates with
valuation ``nu_p(c) + sum(v_i)``.  Factors whose root is not a p-adic integer
have valuation 0 everywhere and are dropped.

The two-factor cases (equal roots, one root outside Z_p, roots separating at
level ``r``) are all instances of this rule and are not coded separately.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .core import Prime, valuation_rat
from .empirical import DEFAULT_EXTRA_DEPTH, EmpiricalClassifier
from .expansion import digits_from_zero
from .polynomial import FactoredPolynomial, LinearFactor, ZeroPolynomialError
from .roots import extend_certified, zp_root_prefixes
from .tree import NodeId, NodeStatus, ValuationTree

__all__ = [
    "NotFactorableError",
    "build_analytic_tree",
    "build_partial_tree",
    "classify_node_linear",
    "infinite_branch_count",
]


class NotFactorableError(ValueError):
    """The polynomial has a residual factor without rational roots."""


def _linear_status(node: NodeId, base: int, root_digits: Sequence[Sequence[int]]) -> NodeStatus:
    total = base
    for digits in root_digits:
        for j, d in enumerate(node):
            if d != digits[j]:
                total += j
                break
        else:
            return NodeStatus.nonterminating()
    return NodeStatus.terminating(total)


def classify_node_linear(node: NodeId, constant, factors: Iterable[LinearFactor], p: int) -> NodeStatus:
    """Status of ``node`` in the tree of ``constant * prod(factors)``.

    Every factor must have its root in Z_p; drop the others first.
    """
    p = Prime(p)
    node = tuple(node)
    factors = list(factors)
    if any(lf.a % p == 0 for lf in factors):
        raise ValueError(f"a factor has a root outside Z_{p}; such factors must be dropped first")
    constant = Fraction(constant)
    if constant == 0:
        raise ZeroPolynomialError("zero constant")
    digits = [digits_from_zero(lf.root(), p, len(node)) for lf in factors]
    return _linear_status(node, valuation_rat(constant, p), digits)


class _LinearPart:
    """Constant valuation plus root digits of the Z_p-rooted linear factors."""

    def __init__(self, f: FactoredPolynomial, p: int, depth: int):
        self.base = valuation_rat(f.constant, p)
        self.factors = [lf for lf in f.linear_factors if lf.a % p]
        self.digits = [digits_from_zero(lf.root(), p, depth) for lf in self.factors]

    def status(self, node: NodeId) -> NodeStatus:
        return _linear_status(node, self.base, self.digits)


def _grow(tree: ValuationTree, classify) -> ValuationTree:
    frontier: list[NodeId] = [()]
    while frontier:
        nxt = []
        for node in frontier:
            status = classify(node)
            tree.nodes[node] = status
            if status.splits and len(node) < tree.depth:
                nxt.extend(node + (d,) for d in range(tree.prime))
        frontier = nxt
    return tree


def _check_nonzero(f: FactoredPolynomial, depth: int) -> None:
    if f.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no valuation tree")
    if depth < 0:
        raise ValueError("depth must be nonnegative")


def build_analytic_tree(f: FactoredPolynomial, p: int, depth: int) -> ValuationTree:
    """Exact tree of a completely factored polynomial.

    >>> from padictrees.parser import parse
    >>> t = build_analytic_tree(parse("2n-5"), 3, 2)
    >>> [str(t[d]) for d in t.sorted_nodes()]
    ['*', '0', '*', '0', '1', '1', '*']
    """
    _check_nonzero(f, depth)
    if not f.is_completely_factored():
        raise NotFactorableError(
            f"{f.residual} has no rational roots; use the partial or empirical engine"
        )
    p = Prime(p)
    lin = _LinearPart(f, p, depth)
    return _grow(ValuationTree(p, depth, str(f), "analytic"), lin.status)


def build_partial_tree(
    f: FactoredPolynomial,
    p: int,
    depth: int,
    root_depth: int | None = None,
    max_extra_depth: int = DEFAULT_EXTRA_DEPTH,
) -> ValuationTree:
    """Tree of a product whose residual factor has no rational roots.

    Nodes on a root path of a linear factor, or on a certified Z_p root of
    the residual, are non-terminating whatever the other factors do.  Off
    those paths the linear part has a fixed valuation, so the node's status
    is the residual's status shifted by it; the residual is classified by the
    empirical certificates.  Whatever they cannot settle stays unresolved.
    """
    _check_nonzero(f, depth)
    p = Prime(p)
    root_depth = depth if root_depth is None else root_depth
    lin = _LinearPart(f, p, depth)
    residual = f.residual
    paths: list[tuple[int, ...]] = []
    emp = None
    if residual.degree > 0:
        for pref in zp_root_prefixes(residual, p, max(root_depth, 1)):
            if not pref.certified:
                continue
            if len(pref.digits) < depth:
                pref = extend_certified(residual, pref, depth - len(pref.digits))
            paths.append(pref.digits[:depth])
        emp = EmpiricalClassifier(residual, p, max_extra_depth)

    def classify(node: NodeId) -> NodeStatus:
        status = lin.status(node)
        if status.is_nonterminating or emp is None:
            return status
        k = len(node)
        if any(path[:k] == node for path in paths):
            return NodeStatus.nonterminating()
        res = emp.classify(node)
        if res.is_terminating:
            return NodeStatus.terminating(status.valuation + res.valuation)
        return res

    return _grow(ValuationTree(p, depth, str(f), "partial"), classify)


def infinite_branch_count(f: FactoredPolynomial, p: int) -> int:
    """Number of distinct roots of ``f`` in Z_p, i.e. of infinite branches."""
    if not f.is_completely_factored():
        raise NotFactorableError("the count is only known for products of linear factors")
    p = Prime(p)
    return len({lf for lf in f.linear_factors if lf.a % p})
