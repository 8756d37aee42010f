"""Exact continued fraction and Ostrowski expansions.

The heavy lifting lives in the C++ extension; this package re-exports it.
All big integers cross the boundary as Python ints or decimal strings, so
no precision is ever lost.
"""

from ._ostrowski import (
    OstrowskiError,
    Real,
    abs_evaluate,
    abs_expand,
    abs_expand_line,
    abs_validate,
    alt_evaluate,
    alt_expand,
    alt_expand_line,
    alt_validate,
    certify_uniqueness,
    cf_expand,
    check_identities,
    parity,
    theta,
)

__all__ = [
    "OstrowskiError",
    "Real",
    "abs_evaluate",
    "abs_expand",
    "abs_expand_line",
    "abs_validate",
    "alt_evaluate",
    "alt_expand",
    "alt_expand_line",
    "alt_validate",
    "certify_uniqueness",
    "cf_expand",
    "check_identities",
    "parity",
    "theta",
]

__version__ = "0.1.0"
