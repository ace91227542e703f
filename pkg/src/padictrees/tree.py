"""Valuation-tree data model shared by every builder."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, NamedTuple

from .core import Valuation
from .expansion import truncation_value

__all__ = [
    "NodeId",
    "NodeStatus",
    "Status",
    "TreeDiff",
    "ValuationTree",
    "diff_trees",
]

# Digits d_0 .. d_{k-1} of a level-k node; () is the root.  The node holds the
# sequence terms n = d_0 + d_1 p + ... + d_{k-1} p^{k-1} + m p^k, m >= 0.
NodeId = tuple[int, ...]


class Status(str, Enum):
    TERMINATING = "terminating"
    NONTERMINATING = "nonterminating"
    UNRESOLVED = "unresolved"


@dataclass(frozen=True)
class NodeStatus:
    """Status of one node.

    ``witness`` (two members of the node with different valuations) is
    evidence, not identity: it is ignored by ``==``.
    """

    kind: Status
    valuation: Valuation | None = None
    witness: tuple[int, int] | None = field(default=None, compare=False)

    @classmethod
    def terminating(cls, v: Valuation) -> "NodeStatus":
        return cls(Status.TERMINATING, v)

    @classmethod
    def nonterminating(cls, witness: tuple[int, int] | None = None) -> "NodeStatus":
        return cls(Status.NONTERMINATING, None, witness)

    @classmethod
    def unresolved(cls) -> "NodeStatus":
        return cls(Status.UNRESOLVED)

    @property
    def is_terminating(self) -> bool:
        return self.kind is Status.TERMINATING

    @property
    def is_nonterminating(self) -> bool:
        return self.kind is Status.NONTERMINATING

    @property
    def is_unresolved(self) -> bool:
        return self.kind is Status.UNRESOLVED

    @property
    def splits(self) -> bool:
        return self.kind is not Status.TERMINATING

    def __str__(self) -> str:
        if self.kind is Status.TERMINATING:
            return str(self.valuation)
        return "*" if self.kind is Status.NONTERMINATING else "?"


@dataclass
class ValuationTree:
    """Materialised nodes of a p-adic valuation tree down to level ``depth``.

    Children exist exactly for splitting (non-terminating or unresolved)
    nodes above ``depth``.
    """

    prime: int
    depth: int
    generator: str
    engine: str
    nodes: dict[NodeId, NodeStatus] = field(default_factory=dict)

    def __getitem__(self, node: NodeId) -> NodeStatus:
        return self.nodes[tuple(node)]

    def __contains__(self, node) -> bool:
        return tuple(node) in self.nodes

    def __len__(self) -> int:
        return len(self.nodes)

    def sorted_nodes(self) -> list[NodeId]:
        return sorted(self.nodes, key=lambda d: (len(d), d))

    def children(self, node: NodeId) -> list[NodeId]:
        node = tuple(node)
        kids = [node + (d,) for d in range(self.prime)]
        return [k for k in kids if k in self.nodes]

    def level(self, k: int) -> list[NodeId]:
        return sorted(d for d in self.nodes if len(d) == k)

    def label(self, node: NodeId) -> int:
        """Branch label: the integer written above the edge into ``node``."""
        return truncation_value(node, self.prime)

    def walk(self) -> Iterator[tuple[NodeId, NodeStatus]]:
        for node in self.sorted_nodes():
            yield node, self.nodes[node]

    def open_paths(self) -> int:
        """Number of non-terminating nodes on the deepest level.

        Every ancestor of such a node is non-terminating as well, so this
        counts the maximal non-terminating paths that reach ``depth``.
        """
        return sum(1 for d in self.level(self.depth) if self.nodes[d].is_nonterminating)

    def is_finite_within_depth(self) -> bool:
        """True when some level ``<= depth`` has no splitting node.

        This proves the whole tree finite; ``False`` proves nothing.
        """
        for k in range(self.depth + 1):
            if not any(self.nodes[d].splits for d in self.level(k)):
                return True
        return False

    def truncated(self, depth: int) -> "ValuationTree":
        """The same tree cut at a shallower level."""
        depth = min(depth, self.depth)
        kept = {d: s for d, s in self.nodes.items() if len(d) <= depth}
        return ValuationTree(self.prime, depth, self.generator, self.engine, kept)


class TreeDiff(NamedTuple):
    disagreements: list[tuple[NodeId, NodeStatus, NodeStatus]]
    incomparable: list[tuple[NodeId, NodeStatus, NodeStatus]]


def diff_trees(t1: ValuationTree, t2: ValuationTree) -> TreeDiff:
    """Compare statuses on the nodes both trees materialise.

    Pairs involving an unresolved node are reported as incomparable rather
    than as disagreements.
    """
    if t1.prime != t2.prime:
        raise ValueError(f"cannot compare a {t1.prime}-adic tree with a {t2.prime}-adic tree")
    depth = min(t1.depth, t2.depth)
    disagreements, incomparable = [], []
    for node in t1.sorted_nodes():
        if len(node) > depth or node not in t2.nodes:
            continue
        s1, s2 = t1.nodes[node], t2.nodes[node]
        if s1.is_unresolved or s2.is_unresolved:
            if s1 != s2:
                incomparable.append((node, s1, s2))
        elif s1 != s2:
            disagreements.append((node, s1, s2))
    return TreeDiff(disagreements, incomparable)
