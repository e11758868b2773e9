"""Triangular decomposition of polynomial systems over the rationals."""

from __future__ import annotations

from .chain import RegularChain, empty_chain, iterated_resultant, reduce_by_chain, validate_chain
from .concurrency import Parallel, SolveConfig, SolveMode, Strategy
from .decompose import (
    Decomposition,
    is_not_included,
    merge_irredundant_lists,
    remove_redundant_components,
    triangularize,
    triangularize_bubble,
    triangularize_level,
)
from .kernel import intersect, regular_gcd, regularize
from .poly import Polynomial, VariableOrder, parse

__all__ = [
    "Decomposition",
    "Parallel",
    "Polynomial",
    "RegularChain",
    "SolveConfig",
    "SolveMode",
    "Strategy",
    "VariableOrder",
    "empty_chain",
    "intersect",
    "is_not_included",
    "iterated_resultant",
    "merge_irredundant_lists",
    "parse",
    "reduce_by_chain",
    "regular_gcd",
    "regularize",
    "remove_redundant_components",
    "triangularize",
    "triangularize_bubble",
    "triangularize_level",
    "validate_chain",
]
