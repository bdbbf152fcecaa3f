"""Exact quantization of Lie bialgebras with abelian X-sector."""

from fractions import Fraction

from ._qlie import (
    InternalFault,
    SpecParseError,
    StructuralError,
    ValidationError,
    Report,
    Spec,
    bch,
    check_cybe,
    check_hopf,
    check_rmatrix,
    classical_double,
    dualize,
    relations,
    run,
    validate,
    verify_canonical,
    verify_double,
)
from ._qlie import pair as _pair


def pair(spec, left, right, order=None):
    """<left, right> for words like "z0 e0" and "X0 H0", as a Fraction."""
    return Fraction(_pair(spec, left, right, order or 0))


__all__ = [
    "InternalFault",
    "SpecParseError",
    "StructuralError",
    "ValidationError",
    "Report",
    "Spec",
    "bch",
    "check_cybe",
    "check_hopf",
    "check_rmatrix",
    "classical_double",
    "dualize",
    "pair",
    "relations",
    "run",
    "validate",
    "verify_canonical",
    "verify_double",
]
