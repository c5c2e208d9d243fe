"""
Scalar rings with exact arithmetic.

Provides the ring tags and the three finite-dimensional rings over the
rationals:

- Rational: the field Q with the trivial involution
- Gaussian: Q(i), involution negates the imaginary part
- Quaternion: the rational quaternions, involution negates i, j and k

The rational function field lives in ratfun.py. All scalars are immutable
and compare structurally on their canonical form.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import ClassVar

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from starcat.errors import DivisionByZeroError, RingMismatchError


class RingId(str, Enum):
    """Tag of an ordered division *-ring."""

    RATIONAL = "rational"
    GAUSSIAN = "gaussian"
    QUATERNION = "quaternion"
    RATFUN = "ratfun"


class Scalar(ABC):
    """
    Element of one of the supported ordered division *-rings.

    Subclasses implement the ring operations; mixing two rings raises
    RingMismatchError.
    """

    __slots__ = ()

    ring: ClassVar[RingId]

    @classmethod
    @abstractmethod
    def from_fraction(cls, value: Fraction | int) -> Self:
        """Embed a rational number."""

    @classmethod
    def zero(cls) -> Self:
        return cls.from_fraction(0)

    @classmethod
    def one(cls) -> Self:
        return cls.from_fraction(1)

    @abstractmethod
    def __add__(self, other: Self) -> Self: ...

    @abstractmethod
    def __mul__(self, other: Self) -> Self: ...

    @abstractmethod
    def __neg__(self) -> Self: ...

    @abstractmethod
    def inverse(self) -> Self:
        """Two-sided multiplicative inverse."""

    @abstractmethod
    def star(self) -> Self:
        """The involution, an anti-automorphism fixing the rationals."""

    @property
    @abstractmethod
    def is_zero(self) -> bool: ...

    @abstractmethod
    def is_positive(self) -> bool:
        """Cone membership of a Hermitian element."""

    @abstractmethod
    def scale(self, q: Fraction) -> Self:
        """Multiply by a rational number (central in every ring)."""

    def __sub__(self, other: Self) -> Self:
        return self + (-other)

    def is_hermitian(self) -> bool:
        return self.star() == self

    def norm(self) -> Self:
        """The Hermitian element a*·a."""
        return self.star() * self

    def _check_ring(self, other: object) -> None:
        if type(other) is not type(self):
            other_ring = getattr(other, "ring", type(other).__name__)
            raise RingMismatchError(
                f"cannot combine {self.ring.value} scalar with {other_ring}"
            )

    def __str__(self) -> str:
        from starcat.scalars.literals import format_scalar

        return format_scalar(self)


@dataclass(frozen=True, slots=True)
class Rational(Scalar):
    """An element of Q."""

    ring: ClassVar[RingId] = RingId.RATIONAL

    value: Fraction

    @classmethod
    def from_fraction(cls, value: Fraction | int) -> "Rational":
        return cls(Fraction(value))

    def __add__(self, other: "Rational") -> "Rational":
        self._check_ring(other)
        return Rational(self.value + other.value)

    def __mul__(self, other: "Rational") -> "Rational":
        self._check_ring(other)
        return Rational(self.value * other.value)

    def __neg__(self) -> "Rational":
        return Rational(-self.value)

    def inverse(self) -> "Rational":
        if self.value == 0:
            raise DivisionByZeroError("0 has no inverse in Q")
        return Rational(1 / self.value)

    def star(self) -> "Rational":
        return self

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def is_positive(self) -> bool:
        return self.value >= 0

    def scale(self, q: Fraction) -> "Rational":
        return Rational(self.value * q)


@dataclass(frozen=True, slots=True)
class Gaussian(Scalar):
    """An element re + im·i of Q(i)."""

    ring: ClassVar[RingId] = RingId.GAUSSIAN

    re: Fraction
    im: Fraction = Fraction(0)

    @classmethod
    def from_fraction(cls, value: Fraction | int) -> "Gaussian":
        return cls(Fraction(value), Fraction(0))

    def __add__(self, other: "Gaussian") -> "Gaussian":
        self._check_ring(other)
        return Gaussian(self.re + other.re, self.im + other.im)

    def __mul__(self, other: "Gaussian") -> "Gaussian":
        self._check_ring(other)
        return Gaussian(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self) -> "Gaussian":
        return Gaussian(-self.re, -self.im)

    def inverse(self) -> "Gaussian":
        norm = self.re * self.re + self.im * self.im
        if norm == 0:
            raise DivisionByZeroError("0 has no inverse in Q(i)")
        return Gaussian(self.re / norm, -self.im / norm)

    def star(self) -> "Gaussian":
        return Gaussian(self.re, -self.im)

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_positive(self) -> bool:
        # Hermitian part is Q; cone is the nonnegative rationals
        return self.re >= 0

    def scale(self, q: Fraction) -> "Gaussian":
        return Gaussian(self.re * q, self.im * q)


@dataclass(frozen=True, slots=True)
class Quaternion(Scalar):
    """A rational quaternion a + b·i + c·j + d·k."""

    ring: ClassVar[RingId] = RingId.QUATERNION

    a: Fraction
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    @classmethod
    def from_fraction(cls, value: Fraction | int) -> "Quaternion":
        zero = Fraction(0)
        return cls(Fraction(value), zero, zero, zero)

    def __add__(self, other: "Quaternion") -> "Quaternion":
        self._check_ring(other)
        return Quaternion(
            self.a + other.a,
            self.b + other.b,
            self.c + other.c,
            self.d + other.d,
        )

    def __mul__(self, other: "Quaternion") -> "Quaternion":
        self._check_ring(other)
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = other.a, other.b, other.c, other.d
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> "Quaternion":
        norm = self.a**2 + self.b**2 + self.c**2 + self.d**2
        if norm == 0:
            raise DivisionByZeroError("0 has no inverse in the quaternions")
        return Quaternion(
            self.a / norm, -self.b / norm, -self.c / norm, -self.d / norm
        )

    def star(self) -> "Quaternion":
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0 and self.d == 0

    def is_positive(self) -> bool:
        return self.a >= 0

    def scale(self, q: Fraction) -> "Quaternion":
        return Quaternion(self.a * q, self.b * q, self.c * q, self.d * q)
