"""Polynomial text grammar, printing and JSON formats."""

from invsurf.parse_io.parser import ParseContext, infer_discriminants, parse_constant, parse_poly, resolve_surd
from invsurf.parse_io.printer import format_coefficient, print_poly

__all__ = [
    "ParseContext", "infer_discriminants", "parse_constant", "parse_poly", "resolve_surd",
    "format_coefficient", "print_poly",
]
