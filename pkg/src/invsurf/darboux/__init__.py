"""Semi-invariants, Jacobi multipliers and degree bounds."""

from invsurf.darboux.bounds import BoundsReport, Check, bounds_report, line_bound
from invsurf.darboux.roots import rational_roots
from invsurf.darboux.semi import (
    IRREDUCIBILITY_NOTE,
    Invalid,
    NotSemiInvariant,
    SearchResult,
    SemiInvariant,
    Valid,
    Verified,
    search_semi_invariants,
    verify_jacobi_multiplier,
    verify_semi_invariant,
)

__all__ = [
    "BoundsReport", "Check", "bounds_report", "line_bound", "rational_roots",
    "IRREDUCIBILITY_NOTE", "Invalid", "NotSemiInvariant", "SearchResult", "SemiInvariant",
    "Valid", "Verified", "search_semi_invariants", "verify_jacobi_multiplier", "verify_semi_invariant",
]
