"""Exact enumeration of small nontrivial squared squares."""

from .compositions import BorderComposition, border_compositions, filter_compositions
from .geometry import (
    Classification,
    Dissection,
    GeometryError,
    SquareElement,
    border_elements,
    classify,
    corner_elements,
    is_nontrivial,
    shares_full_edge,
)
from .search import (
    BudgetExceeded,
    EnumerationReport,
    SearchOptions,
    enumerate_range,
    enumerate_squares,
    enumerate_with_border,
)
from .symmetry import SymmetryOp, apply, canonical_key, orbit_size

__all__ = [
    "BorderComposition",
    "BudgetExceeded",
    "Classification",
    "Dissection",
    "EnumerationReport",
    "GeometryError",
    "SearchOptions",
    "SquareElement",
    "SymmetryOp",
    "apply",
    "border_compositions",
    "border_elements",
    "canonical_key",
    "classify",
    "corner_elements",
    "enumerate_range",
    "enumerate_squares",
    "enumerate_with_border",
    "filter_compositions",
    "is_nontrivial",
    "orbit_size",
    "shares_full_edge",
]
