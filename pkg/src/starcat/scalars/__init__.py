"""
Exact scalars for four ordered division *-rings.

- Rational: Q
- Gaussian: Q(i)
- Quaternion: rational quaternions
- RatFun: Q(X) with X ↦ −X, ordered by the Laurent cone at X = 0
"""

from starcat.scalars.base import (
    Gaussian,
    Quaternion,
    Rational,
    RingId,
    Scalar,
)
from starcat.scalars.literals import format_scalar, parse_scalar
from starcat.scalars.ops import (
    add,
    compare_hermitian,
    embed,
    hermitian_sqrt_search,
    inv,
    is_hermitian,
    is_positive_scalar,
    laurent_leading,
    mul,
    neg,
    one,
    scalar_type,
    star,
    zero,
)
from starcat.scalars.ratfun import RatFun

__all__ = [
    # Types
    "RingId",
    "Scalar",
    "Rational",
    "Gaussian",
    "Quaternion",
    "RatFun",
    # Ring registry
    "scalar_type",
    "zero",
    "one",
    "embed",
    # Arithmetic
    "add",
    "mul",
    "neg",
    "inv",
    "star",
    # Order
    "is_hermitian",
    "is_positive_scalar",
    "compare_hermitian",
    "laurent_leading",
    "hermitian_sqrt_search",
    # Literals
    "parse_scalar",
    "format_scalar",
]
