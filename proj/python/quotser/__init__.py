"""Exact descendent series of punctual quot schemes.

Thin wrapper around the compiled extension.  Series cross the boundary as
JSON-shaped dicts with "num/den" coefficient strings, so every value stays
an exact rational; parse them with fractions.Fraction when arithmetic is
needed on the Python side.
"""

from _quotser import (
    hilbert_component,
    hilbert_series,
    p1xp1_series,
    pade,
    quot_closed_form,
    quot_oracle,
    sigma_fit,
    sigma_values,
    verify,
)

__all__ = [
    "hilbert_component",
    "hilbert_series",
    "p1xp1_series",
    "pade",
    "quot_closed_form",
    "quot_oracle",
    "sigma_fit",
    "sigma_values",
    "verify",
]
