"""Distinguished quadratic vector fields and their seventh idempotent."""

from invsurf.distinguished.construct import (
    DistinguishedField,
    GammaSpec,
    GenericityStats,
    construct_distinguished,
    distinct_idempotents,
    proportional,
    random_gamma,
    sample_genericity,
    seventh_idempotent,
    split_coefficients,
)

__all__ = [
    "DistinguishedField", "GammaSpec", "construct_distinguished", "distinct_idempotents",
    "proportional", "seventh_idempotent", "split_coefficients", "GenericityStats",
    "random_gamma", "sample_genericity",
]
