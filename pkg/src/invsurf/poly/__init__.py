"""Sparse polynomials, vector fields, determinants and resultants."""

from invsurf.poly.matrix import SquareMatrix, bareiss_det, char_poly, poly_det, sylvester_resultant
from invsurf.poly.mpoly import NEG_INF, MPoly, NotDivisible, Quotient, exact_divide, grevlex_key
from invsurf.poly.vfield import PolyVectorField, divergence, lie_derivative

__all__ = [
    "SquareMatrix", "bareiss_det", "char_poly", "poly_det", "sylvester_resultant",
    "NEG_INF", "MPoly", "NotDivisible", "Quotient", "exact_divide", "grevlex_key",
    "PolyVectorField", "divergence", "lie_derivative",
]
