"""Homogenization, Poincare transforms and reduction of dimension."""

from invsurf.transform.poincare import (
    PoincareChart,
    conjugate_field,
    dehomogenize_first,
    homogenize,
    normalize_direction,
    poincare_field,
    poincare_poly,
    pullback,
    reduce_dim,
)

__all__ = [
    "PoincareChart", "conjugate_field", "dehomogenize_first", "homogenize", "normalize_direction",
    "poincare_field", "poincare_poly", "pullback", "reduce_dim",
]
