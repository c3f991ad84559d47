"""Invariant lines, spectra at infinity and property E."""

from invsurf.infinity.spectrum import (
    Cond1,
    Cond2,
    InfinityPointReport,
    Line,
    Neither,
    NotInvariantLine,
    PropertyEReport,
    classify_conditions,
    expected_transform_charpoly,
    infinity_spectrum,
    line_count,
    property_e_report,
    transform_crosscheck,
    verify_invariant_line,
)

__all__ = [
    "Cond1", "Cond2", "InfinityPointReport", "Line", "Neither", "NotInvariantLine",
    "PropertyEReport", "classify_conditions", "expected_transform_charpoly", "infinity_spectrum",
    "line_count", "property_e_report", "transform_crosscheck", "verify_invariant_line",
]
