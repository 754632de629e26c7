"""Generalised Euler characteristics of Gödel-logic formulas.

chi(f, n, k) counts the equivalence classes of (k+1)-valued assignments
satisfying f; chi == class_count(n, k) decides tautology in (k+1)-valued
Gödel logic, and k = n+1 decides the infinite-valued case.
"""

from _godelchi import (
    Formula,
    FormulaParseError,
    GuardExceeded,
    OrderPattern,
    Valuation,
    boolean_models,
    brute_chi,
    brute_class_count,
    brute_equivalence,
    chi,
    chi_as_valuation,
    chi_report,
    class_count,
    class_table,
    equivalent,
    eval,
    in_span_of_chis,
    independence_determinant,
    invariant_dimension,
    is_invariant,
    is_tautology_ginf,
    is_tautology_gk,
    maximal_chain,
    parse,
    pattern_of,
    patterns,
    satisfies,
    space_dims,
    tree_count,
    value_at_formula,
    value_at_pattern,
)

__all__ = [
    "Formula",
    "FormulaParseError",
    "GuardExceeded",
    "OrderPattern",
    "Valuation",
    "boolean_models",
    "brute_chi",
    "brute_class_count",
    "brute_equivalence",
    "chi",
    "chi_as_valuation",
    "chi_report",
    "class_count",
    "class_table",
    "equivalent",
    "eval",
    "in_span_of_chis",
    "independence_determinant",
    "invariant_dimension",
    "is_invariant",
    "is_tautology_ginf",
    "is_tautology_gk",
    "maximal_chain",
    "parse",
    "pattern_of",
    "patterns",
    "satisfies",
    "space_dims",
    "tree_count",
    "value_at_formula",
    "value_at_pattern",
]
