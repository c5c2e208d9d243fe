"""
Starcat - exact weighted matrices over ordered division *-rings

Objects are finite lists of positive Hermitian weights, morphisms are
matrices, and the involution is the weighted adjoint. On top of that sit
kernels and range factorizations, Gram–Schmidt, certified positivity and
codilators of contractions, all in exact arithmetic.
"""

from starcat.category import (
    WMorphism,
    WObject,
    adjoint,
    compose,
    identity,
)
from starcat.errors import StarcatError
from starcat.scalars import RingId, format_scalar, parse_scalar

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "RingId",
    "WObject",
    "WMorphism",
    "identity",
    "compose",
    "adjoint",
    "parse_scalar",
    "format_scalar",
    "StarcatError",
]
