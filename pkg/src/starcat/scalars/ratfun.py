"""
The rational function field Q(X) with the involution X ↦ −X.

Elements are kept as reduced pairs of sympy polynomials over QQ with a
monic denominator, so equal values have identical representations. The
positive cone is the restriction of the Laurent-series cone at X = 0: a
Hermitian (even) element with leading term c·X^v is positive iff
(−1)^(v/2)·c > 0.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, ClassVar

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, ring

from starcat.errors import DivisionByZeroError, ZeroInputError
from starcat.scalars.base import RingId, Scalar

POLY_RING, X = ring("x", QQ)


def to_qq(value: Fraction | int) -> Any:
    """Convert a Python rational to a QQ domain element."""
    exact = Fraction(value)
    return QQ(exact.numerator, exact.denominator)


def from_qq(value: Any) -> Fraction:
    """Convert a QQ domain element to a Python Fraction."""
    return Fraction(int(value.numerator), int(value.denominator))


def poly_from_coefficients(
    coefficients: dict[int, Fraction],
) -> PolyElement:
    """Build a polynomial from a degree → coefficient mapping."""
    return POLY_RING.from_dict(
        {(k,): to_qq(c) for k, c in coefficients.items() if c != 0}
    )


def poly_coefficients(poly: PolyElement) -> dict[int, Fraction]:
    """Return the nonzero coefficients of a polynomial by degree."""
    return {monom[0]: from_qq(coeff) for monom, coeff in poly.terms()}


def _trailing(poly: PolyElement) -> tuple[int, Fraction]:
    """Order at X = 0 and the coefficient of that term."""
    coefficients = poly_coefficients(poly)
    order = min(coefficients)
    return order, coefficients[order]


def _reflect(poly: PolyElement) -> PolyElement:
    """Substitute X ↦ −X."""
    return poly_from_coefficients(
        {
            k: (-c if k % 2 else c)
            for k, c in poly_coefficients(poly).items()
        }
    )


@dataclass(frozen=True, slots=True)
class RatFun(Scalar):
    """A reduced fraction num/den of polynomials in X, den monic."""

    ring: ClassVar[RingId] = RingId.RATFUN

    num: PolyElement
    den: PolyElement

    @classmethod
    def from_polys(cls, num: PolyElement, den: PolyElement) -> "RatFun":
        """Canonicalise num/den: cancel common factors, make den monic."""
        if not den:
            raise DivisionByZeroError("zero denominator in Q(X)")
        if not num:
            return cls(POLY_RING.zero, POLY_RING.one)
        _, num, den = num.cofactors(den)
        lc = den.LC
        return cls(num.quo_ground(lc), den.quo_ground(lc))

    @classmethod
    def from_fraction(cls, value: Fraction | int) -> "RatFun":
        return cls.from_polys(
            POLY_RING.ground_new(to_qq(value)), POLY_RING.one
        )

    @classmethod
    def monomial(cls, coefficient: Fraction | int, degree: int) -> "RatFun":
        """The element coefficient·X^degree (degree may be negative)."""
        power = POLY_RING.from_dict({(abs(degree),): QQ.one})
        constant = POLY_RING.ground_new(to_qq(coefficient))
        if degree >= 0:
            return cls.from_polys(constant * power, POLY_RING.one)
        return cls.from_polys(constant, power)

    @classmethod
    def variable(cls) -> "RatFun":
        return cls(X, POLY_RING.one)

    def __add__(self, other: "RatFun") -> "RatFun":
        self._check_ring(other)
        if self.den == other.den:
            return RatFun.from_polys(self.num + other.num, self.den)
        return RatFun.from_polys(
            self.num * other.den + other.num * self.den,
            self.den * other.den,
        )

    def __mul__(self, other: "RatFun") -> "RatFun":
        self._check_ring(other)
        if not self.num or not other.num:
            return RatFun.from_polys(POLY_RING.zero, POLY_RING.one)
        return RatFun.from_polys(
            self.num * other.num, self.den * other.den
        )

    def __neg__(self) -> "RatFun":
        return RatFun(-self.num, self.den)

    def inverse(self) -> "RatFun":
        if not self.num:
            raise DivisionByZeroError("0 has no inverse in Q(X)")
        return RatFun.from_polys(self.den, self.num)

    def star(self) -> "RatFun":
        return RatFun.from_polys(_reflect(self.num), _reflect(self.den))

    @property
    def is_zero(self) -> bool:
        return not self.num

    def scale(self, q: Fraction) -> "RatFun":
        return RatFun.from_polys(self.num.mul_ground(to_qq(q)), self.den)

    def laurent_leading(self) -> tuple[int, Fraction]:
        """
        Order and leading coefficient of the Laurent expansion at X = 0.

        Returns:
            (valuation, coefficient) with
            self = coefficient·X^valuation·(1 + higher-order terms)

        Raises:
            ZeroInputError: If self is zero
        """
        if not self.num:
            raise ZeroInputError("0 has no leading Laurent term")
        num_order, num_coeff = _trailing(self.num)
        den_order, den_coeff = _trailing(self.den)
        return num_order - den_order, num_coeff / den_coeff

    def is_positive(self) -> bool:
        if not self.num:
            return True
        valuation, coefficient = self.laurent_leading()
        sign = -1 if (valuation // 2) % 2 else 1
        return sign * coefficient > 0
