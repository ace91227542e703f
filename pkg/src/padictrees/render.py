"""Serialisable tree documents and their text renderings.

JSON is the interchange format.  ASCII, DOT and xymatrix LaTeX are
projections of a :class:`TreeDocument` and carry no extra information.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from functools import cached_property

from .core import INF
from .tree import NodeStatus, Status, ValuationTree

__all__ = [
    "FORMATS",
    "NodeRecord",
    "RenderConfig",
    "TreeDocument",
    "render",
    "to_ascii",
    "to_dot",
    "to_json",
    "to_latex",
]

FORMATS = ("ascii", "dot", "json", "latex")


@dataclass(frozen=True)
class RenderConfig:
    format: str = "ascii"
    depth: int = 5
    show_branch_labels: bool = True
    max_extra_depth: int = 4

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")
        if self.depth < 1:
            raise ValueError("depth must be at least 1")
        if self.max_extra_depth < 0:
            raise ValueError("max_extra_depth must be nonnegative")


@dataclass(frozen=True)
class NodeRecord:
    digits: tuple[int, ...]
    level: int
    status: str
    valuation: int | str | None
    label: int
    witness: tuple[int, int] | None = None

    @property
    def glyph(self) -> str:
        if self.status == Status.TERMINATING.value:
            return str(self.valuation)
        return "*" if self.status == Status.NONTERMINATING.value else "?"


@dataclass(frozen=True)
class TreeDocument:
    prime: int
    generator: str
    engine: str
    depth: int
    nodes: tuple[NodeRecord, ...] = field(default_factory=tuple)

    @classmethod
    def from_tree(cls, tree: ValuationTree) -> "TreeDocument":
        records = []
        for digits, status in tree.walk():
            records.append(_record(digits, status, tree.label(digits)))
        return cls(int(tree.prime), tree.generator, tree.engine, tree.depth, tuple(records))

    def to_dict(self) -> dict:
        out = asdict(self)
        for rec in out["nodes"]:
            rec["digits"] = list(rec["digits"])
            if rec["witness"] is not None:
                rec["witness"] = list(rec["witness"])
        out["nodes"] = list(out["nodes"])
        return {k: out[k] for k in ("prime", "generator", "engine", "depth", "nodes")}

    @classmethod
    def from_dict(cls, data: dict) -> "TreeDocument":
        nodes = tuple(
            NodeRecord(
                digits=tuple(n["digits"]),
                level=n["level"],
                status=n["status"],
                valuation=n["valuation"],
                label=n["label"],
                witness=None if n.get("witness") is None else tuple(n["witness"]),
            )
            for n in data["nodes"]
        )
        return cls(data["prime"], data["generator"], data["engine"], data["depth"], nodes)

    @classmethod
    def from_json(cls, text: str) -> "TreeDocument":
        return cls.from_dict(json.loads(text))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @cached_property
    def _kids(self) -> dict[tuple[int, ...], list[NodeRecord]]:
        index: dict[tuple[int, ...], list[NodeRecord]] = {}
        for r in self.nodes:
            if r.level:
                index.setdefault(r.digits[:-1], []).append(r)
        return index

    def children(self, rec: NodeRecord) -> list[NodeRecord]:
        return self._kids.get(rec.digits, [])


def _record(digits, status: NodeStatus, label: int) -> NodeRecord:
    v = status.valuation
    if v is INF:
        v = "inf"
    return NodeRecord(tuple(digits), len(digits), status.kind.value, v, label, status.witness)


def to_json(doc: TreeDocument) -> str:
    return doc.to_json()


def to_ascii(doc: TreeDocument, show_branch_labels: bool = True) -> str:
    """Indented tree, one line per node.  ``*`` splits, ``?`` is unresolved."""
    lines = [f"{doc.prime}-adic valuation tree of {doc.generator} [{doc.engine}, depth {doc.depth}]"]
    by_digits = {r.digits: r for r in doc.nodes}
    root = by_digits.get(())
    if root is None:
        return lines[0] + "\n"

    def emit(rec: NodeRecord, prefix: str, last: bool, is_root: bool) -> None:
        if is_root:
            lines.append(f"({rec.glyph})")
            child_prefix = ""
        else:
            branch = "`-- " if last else "|-- "
            label = f"{rec.label}: " if show_branch_labels else ""
            lines.append(f"{prefix}{branch}{label}({rec.glyph})")
            child_prefix = prefix + ("    " if last else "|   ")
        kids = doc.children(rec)
        for i, kid in enumerate(kids):
            emit(kid, child_prefix, i == len(kids) - 1, False)

    emit(root, "", True, True)
    return "\n".join(lines) + "\n"


def _dot_id(digits) -> str:
    return "r" + "".join(f"_{d}" for d in digits)


def to_dot(doc: TreeDocument, show_branch_labels: bool = True) -> str:
    """Graphviz source; nodes and edges ordered by (level, digits)."""
    title = json.dumps(f"{doc.prime}-adic valuation tree of {doc.generator}")
    out = [
        "graph valuation_tree {",
        f"  label={title};",
        "  node [shape=circle];",
    ]
    for rec in doc.nodes:
        out.append(f'  {_dot_id(rec.digits)} [label="{rec.glyph}"];')
    for rec in doc.nodes:
        if rec.level == 0:
            continue
        attrs = f' [label="{rec.label}"]' if show_branch_labels else ""
        out.append(f"  {_dot_id(rec.digits[:-1])} -- {_dot_id(rec.digits)}{attrs};")
    out.append("}")
    return "\n".join(out) + "\n"


def _layout(doc: TreeDocument) -> dict[tuple[int, ...], int]:
    """Column of each node.

    Leaves go left to right two columns apart; a parent sits over its middle
    child, or halfway between the outer children when there is an even number.
    """
    cols: dict[tuple[int, ...], int] = {}
    next_leaf = 0

    def place(rec: NodeRecord) -> int:
        nonlocal next_leaf
        kids = doc.children(rec)
        if not kids:
            col = next_leaf
            next_leaf += 2
        else:
            kid_cols = [place(k) for k in kids]
            if len(kid_cols) % 2:
                col = kid_cols[len(kid_cols) // 2]
            else:
                col = (kid_cols[0] + kid_cols[-1]) // 2
        cols[rec.digits] = col
        return col

    roots = [r for r in doc.nodes if r.level == 0]
    if roots:
        place(roots[0])
    return cols


def to_latex(doc: TreeDocument, show_branch_labels: bool = True) -> str:
    """An ``xymatrix`` with circled valuations, ``*`` and ``?``."""
    cols = _layout(doc)
    width = max(cols.values(), default=0) + 1
    grid = [["" for _ in range(width)] for _ in range(doc.depth + 1)]
    for rec in doc.nodes:
        cell = f"*+[Fo]{{{rec.glyph}}}"
        for kid in doc.children(rec):
            dx = cols[kid.digits] - cols[rec.digits]
            direction = "d" + ("l" * -dx if dx < 0 else "r" * dx)
            label = ""
            if show_branch_labels:
                label = f"_{{{kid.label}}}" if dx < 0 else f"^{{{kid.label}}}"
            cell += f" \\ar@{{-}}[{direction}]{label}"
        grid[rec.level][cols[rec.digits]] = cell
    rows = [" & ".join(row) + r" \\" for row in grid if any(row)]
    body = "\n".join(" " + r for r in rows)
    return f"\\[\n\\xymatrix{{\n{body}\n}}\n\\]\n"


def render(doc: TreeDocument, fmt: str, show_branch_labels: bool = True) -> str:
    if fmt == "json":
        return doc.to_json() + "\n"
    if fmt == "ascii":
        return to_ascii(doc, show_branch_labels)
    if fmt == "dot":
        return to_dot(doc, show_branch_labels)
    if fmt == "latex":
        return to_latex(doc, show_branch_labels)
    raise ValueError(f"unknown format {fmt!r}")
