"""p-adic valuations of polynomial sequences and their valuation trees."""

from .analytic import (
    NotFactorableError,
    build_analytic_tree,
    build_partial_tree,
    classify_node_linear,
    infinite_branch_count,
)
from .core import INF, InvalidPrimeError, Prime, padic_abs, valuation_int, valuation_rat
from .empirical import build_empirical_tree, classify_node_empirical
from .expansion import (
    DigitExpansion,
    congruence_order,
    digits_from_zero,
    expand,
    is_padic_integer,
    residue_mod,
    truncation_value,
)
from .parser import ParseError, parse, parse_polynomial
from .polynomial import (
    FactoredPolynomial,
    LinearFactor,
    Polynomial,
    ZeroPolynomialError,
    factor_rational,
    render,
)
from .render import RenderConfig, TreeDocument
from .roots import ResourceLimitError, RootPrefix, extend_certified, roots_mod_pk, zp_root_prefixes
from .tree import NodeStatus, Status, ValuationTree, diff_trees

__version__ = "0.1.0"

__all__ = [
    "INF",
    "DigitExpansion",
    "FactoredPolynomial",
    "InvalidPrimeError",
    "LinearFactor",
    "NodeStatus",
    "NotFactorableError",
    "ParseError",
    "Polynomial",
    "Prime",
    "RenderConfig",
    "ResourceLimitError",
    "RootPrefix",
    "Status",
    "TreeDocument",
    "ValuationTree",
    "ZeroPolynomialError",
    "build_analytic_tree",
    "build_empirical_tree",
    "build_partial_tree",
    "classify_node_empirical",
    "classify_node_linear",
    "congruence_order",
    "diff_trees",
    "digits_from_zero",
    "expand",
    "extend_certified",
    "factor_rational",
    "infinite_branch_count",
    "is_padic_integer",
    "padic_abs",
    "parse",
    "parse_polynomial",
    "render",
    "residue_mod",
    "roots_mod_pk",
    "truncation_value",
    "valuation_int",
    "valuation_rat",
    "zp_root_prefixes",
]
