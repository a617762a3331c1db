"""Exact combinatorics of plane trees: (k,m)-Catalan numbers, exhaustive
enumerators, and hook length polynomials, verified rather than assumed."""

from .counting import (
    catalan,
    catalan_k2_recurrence,
    catalan_km,
    catalan_km_recurrence,
    catalan_m,
    compositions,
    double_factorial_odd,
    special_rhs,
)
from .trees import (
    DEFAULT_CAP,
    EnumerationCapError,
    MarkedKmTree,
    PlaneTree,
    enumerate_km_trees,
    enumerate_mary_trees,
    enumerate_plane_forests,
    hook_table,
    is_complete_mary,
    is_km_tree,
    km_tree_order,
)
from .polys import RationalPolynomial, binom_poly
from .series import TruncatedPowerSeries, km_tree_series, verify_k2_ode

__all__ = [
    "DEFAULT_CAP",
    "EnumerationCapError",
    "MarkedKmTree",
    "PlaneTree",
    "RationalPolynomial",
    "TruncatedPowerSeries",
    "binom_poly",
    "catalan",
    "catalan_k2_recurrence",
    "catalan_km",
    "catalan_km_recurrence",
    "catalan_m",
    "compositions",
    "double_factorial_odd",
    "enumerate_km_trees",
    "enumerate_mary_trees",
    "enumerate_plane_forests",
    "hook_table",
    "is_complete_mary",
    "is_km_tree",
    "km_tree_order",
    "km_tree_series",
    "special_rhs",
    "verify_k2_ode",
]

__version__ = "0.1.0"
