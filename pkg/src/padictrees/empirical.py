"""Valuation trees from certificates on the polynomial itself.

Nothing here uses roots or factorisations, so this engine is an independent
check on the analytic one.  A node ``c + p^k Z`` is settled by one of:

* a shift certificate: writing ``F(c + p^k t) = sum G_j t^j``, if
  ``nu(G_0) < nu(G_j)`` for every ``j >= 1`` then every member has valuation
  ``nu(G_0)`` (this contains the plain ``F(c) != 0 mod p^k`` test);
* a witness pair: two members with different valuations;
* recursion into the ``p`` children, up to ``max_extra_depth`` levels.

Anything else is reported as unresolved, never guessed.
"""

from __future__ import annotations

from functools import lru_cache

from .core import INF, Prime, Valuation, valuation_int
from .expansion import truncation_value
from .polynomial import FactoredPolynomial, ZeroPolynomialError
from .tree import NodeId, NodeStatus, ValuationTree

__all__ = ["DEFAULT_EXTRA_DEPTH", "EmpiricalClassifier", "build_empirical_tree", "classify_node_empirical"]

DEFAULT_EXTRA_DEPTH = 4


def _shift(cs: list[int], c: int, m: int) -> list[int]:
    """Integer coefficients of ``F(c + m*t)``."""
    out: list[int] = []
    for a in reversed(cs):
        nxt = [0] * (len(out) + 1)
        for i, b in enumerate(out):
            nxt[i] += b * c
            nxt[i + 1] += b * m
        nxt[0] += a
        out = nxt
    return out


class EmpiricalClassifier:
    """Node classifier for one polynomial and prime, with memoised results."""

    def __init__(self, f, p: int, max_extra_depth: int = DEFAULT_EXTRA_DEPTH):
        if isinstance(f, FactoredPolynomial):
            f = f.expand()
        if f.is_zero():
            raise ZeroPolynomialError("the zero polynomial has no valuation tree")
        if max_extra_depth < 0:
            raise ValueError("max_extra_depth must be nonnegative")
        self.p = Prime(p)
        self.max_extra_depth = max_extra_depth
        denom, self._cs = f.clear_denominators()
        self._shift_val = valuation_int(denom, self.p)
        self._classify = lru_cache(maxsize=None)(self._classify_uncached)

    def valuation_at(self, n: int) -> Valuation:
        acc = 0
        for c in reversed(self._cs):
            acc = acc * n + c
        return valuation_int(acc, self.p) - self._shift_val

    def _certificate(self, c: int, k: int) -> Valuation | None:
        g = _shift(self._cs, c, self.p**k)
        w0 = valuation_int(g[0], self.p)
        if w0 is INF:
            return None
        if all(valuation_int(gj, self.p) > w0 for gj in g[1:]):
            return w0 - self._shift_val
        return None

    def classify(self, node: NodeId, extra: int | None = None) -> NodeStatus:
        if extra is None:
            extra = self.max_extra_depth
        return self._classify(tuple(node), extra)[0]

    def _classify_uncached(self, node: NodeId, extra: int):
        p = self.p
        k = len(node)
        c = truncation_value(node, p)
        w = self._certificate(c, k)
        if w is not None:
            return NodeStatus.terminating(w), {w: c}

        seen: dict[Valuation, int] = {}
        for t in (0, 1, 2, p, p + 1):
            x = c + t * p**k
            seen.setdefault(self.valuation_at(x), x)
            if len(seen) > 1:
                return _witnessed(seen), seen
        if extra == 0:
            return NodeStatus.unresolved(), seen

        child_vals = set()
        for d in range(p):
            status, obs = self._classify(node + (d,), extra - 1)
            for v, x in obs.items():
                seen.setdefault(v, x)
            if status.is_nonterminating:
                return NodeStatus.nonterminating(status.witness), seen
            if len(seen) > 1:
                return _witnessed(seen), seen
            child_vals.add(status.valuation if status.is_terminating else None)
        if len(child_vals) == 1 and None not in child_vals:
            return NodeStatus.terminating(child_vals.pop()), seen
        return NodeStatus.unresolved(), seen


def _witnessed(seen: dict[Valuation, int]) -> NodeStatus:
    v1, v2 = sorted(seen)[:2]
    return NodeStatus.nonterminating((seen[v1], seen[v2]))


def classify_node_empirical(f, node: NodeId, p: int, max_extra_depth: int = DEFAULT_EXTRA_DEPTH) -> NodeStatus:
    """Status of one node of the tree of ``f``, certified or ``unresolved``."""
    return EmpiricalClassifier(f, p, max_extra_depth).classify(node)


def build_empirical_tree(f, p: int, depth: int, max_extra_depth: int = DEFAULT_EXTRA_DEPTH) -> ValuationTree:
    """Grow the tree of ``f`` top-down with :class:`EmpiricalClassifier`."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    clf = EmpiricalClassifier(f, p, max_extra_depth)
    tree = ValuationTree(clf.p, depth, str(f), "empirical")
    frontier = [()]
    while frontier:
        nxt = []
        for node in frontier:
            status = clf.classify(node)
            tree.nodes[node] = status
            if status.splits and len(node) < depth:
                nxt.extend(node + (d,) for d in range(clf.p))
        frontier = nxt
    return tree
