"""
Module-level scalar operations.

Thin, ring-checked entry points over the Scalar classes, plus the ring
registry used to build zeros, ones and embedded rationals for a RingId.
"""

from fractions import Fraction
from itertools import product
from typing import Optional

from starcat.errors import (
    DivisionByZeroError,
    NotHermitianError,
    RingMismatchError,
    ZeroInputError,
)
from starcat.scalars.base import (
    Gaussian,
    Quaternion,
    Rational,
    RingId,
    Scalar,
)
from starcat.scalars.ratfun import RatFun

SCALAR_TYPES: dict[RingId, type[Scalar]] = {
    RingId.RATIONAL: Rational,
    RingId.GAUSSIAN: Gaussian,
    RingId.QUATERNION: Quaternion,
    RingId.RATFUN: RatFun,
}


def scalar_type(ring: RingId) -> type[Scalar]:
    return SCALAR_TYPES[RingId(ring)]


def zero(ring: RingId) -> Scalar:
    return scalar_type(ring).zero()


def one(ring: RingId) -> Scalar:
    return scalar_type(ring).one()


def embed(ring: RingId, value: Fraction | int) -> Scalar:
    """The rational number value as an element of ring."""
    return scalar_type(ring).from_fraction(value)


def add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def neg(a: Scalar) -> Scalar:
    return -a


def inv(a: Scalar) -> Scalar:
    """
    Multiplicative inverse.

    Raises:
        DivisionByZeroError: If a is zero
    """
    if a.is_zero:
        raise DivisionByZeroError(f"{a.ring.value}: 0 has no inverse")
    return a.inverse()


def star(a: Scalar) -> Scalar:
    return a.star()


def is_hermitian(a: Scalar) -> bool:
    """True iff star(a) == a."""
    return a.is_hermitian()


def is_positive_scalar(a: Scalar) -> bool:
    """
    Decide membership of a Hermitian scalar in the positive cone.

    For Q, Q(i) and the quaternions the cone is the nonnegative rationals
    inside the Hermitian part; for Q(X) it is the Laurent cone at X = 0.

    Raises:
        NotHermitianError: If a is not Hermitian
    """
    if not a.is_hermitian():
        raise NotHermitianError(f"{a} is not Hermitian")
    return a.is_positive()


def laurent_leading(a: Scalar) -> tuple[int, Fraction]:
    """
    Valuation and leading coefficient of a rational function at X = 0.

    Raises:
        RingMismatchError: If a is not in Q(X)
        ZeroInputError: If a is zero
    """
    if not isinstance(a, RatFun):
        raise RingMismatchError(
            f"laurent_leading expects a ratfun scalar, got {a.ring.value}"
        )
    if a.is_zero:
        raise ZeroInputError("laurent_leading is undefined at 0")
    return a.laurent_leading()


def compare_hermitian(a: Scalar) -> int:
    """Sign of a Hermitian scalar in the total order: -1, 0 or 1."""
    if a.is_zero:
        return 0
    return 1 if is_positive_scalar(a) else -1


def _candidate_rationals(bound: int) -> list[Fraction]:
    values = {
        Fraction(p, q)
        for p, q in product(range(1, bound + 1), repeat=2)
    }
    return sorted(values | {-v for v in values} | {Fraction(0)})


def hermitian_sqrt_search(
    a: Scalar, max_degree: int = 4, bound: int = 4
) -> Optional[Scalar]:
    """
    Bounded search for a Hermitian b with b·b == a.

    Candidates are rationals p/q with 1 ≤ p, q ≤ bound and, in Q(X), the
    Hermitian monomials c·X^(2m) with |2m| ≤ max_degree.

    Returns:
        A square root from the candidate set, or None
    """
    degrees = [0]
    if isinstance(a, RatFun):
        degrees = [
            d for d in range(-max_degree, max_degree + 1) if d % 2 == 0
        ]
    for coefficient in _candidate_rationals(bound):
        for degree in degrees:
            if isinstance(a, RatFun):
                candidate: Scalar = RatFun.monomial(coefficient, degree)
            else:
                candidate = embed(a.ring, coefficient)
            if candidate * candidate == a:
                return candidate
    return None
