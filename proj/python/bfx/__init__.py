"""Exact noise-stability and erasure-correlation toolkit.

Rational values cross the boundary as "num/den" strings; feed them to
fractions.Fraction for exact arithmetic on the python side.
"""

from ._bfx import (
    BooleanFunction,
    binom_equal_prob,
    catalog,
    gap_formula_rhs,
    is_ltf,
    ltf_function,
    phi_at,
    phi_coeffs,
    run_claim,
    stab_at,
    stab_coeffs,
    sturm_sign,
    thresholds,
    verify_gap_formula,
)

__all__ = [
    "BooleanFunction",
    "binom_equal_prob",
    "catalog",
    "gap_formula_rhs",
    "is_ltf",
    "ltf_function",
    "phi_at",
    "phi_coeffs",
    "run_claim",
    "stab_at",
    "stab_coeffs",
    "sturm_sign",
    "thresholds",
    "verify_gap_formula",
]
