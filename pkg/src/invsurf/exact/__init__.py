"""Exact arithmetic: rationals, multiquadratic towers, one quadratic extension."""

from invsurf.exact.rational import Rational, as_rational, det, primitive, rank, rational_kernel, solve
from invsurf.exact.tower import (
    QQ,
    FieldElem,
    FieldTower,
    NotSquare,
    Square,
    create_tower,
    format_decimal,
    sqrt_in_field,
)
from invsurf.exact.quadext import QuadElem, QuadExt, canonical_radicand

__all__ = [
    "Rational", "as_rational", "det", "primitive", "rank", "rational_kernel", "solve",
    "QQ", "FieldElem", "FieldTower", "NotSquare", "Square", "create_tower", "format_decimal",
    "sqrt_in_field", "QuadElem", "QuadExt", "canonical_radicand",
]
