from fractions import Fraction

import pytest
from hypothesis import given

from starcat.errors import (
    DivisionByZeroError,
    LiteralParseError,
    NotHermitianError,
    RingMismatchError,
    ZeroInputError,
)
from starcat.scalars import (
    Gaussian,
    Quaternion,
    RatFun,
    Rational,
    RingId,
    compare_hermitian,
    embed,
    format_scalar,
    hermitian_sqrt_search,
    is_positive_scalar,
    laurent_leading,
    one,
    parse_scalar,
    zero,
)
from tests.helpers import ALL_RINGS, s, samplers

R = RingId.RATFUN


class TestRingArithmetic:
    """Test the field operations of each ring."""

    def test_rational_arithmetic(self):
        """Test sums, products and inverses in Q."""
        assert s("1/2") + s("1/3") == Rational(Fraction(5, 6))
        assert s("2/3") * s("3/4") == Rational(Fraction(1, 2))
        assert s("-4").inverse() == Rational(Fraction(-1, 4))

    def test_gaussian_conjugation(self):
        """Test that the involution of Q(i) is complex conjugation."""
        z = s("1+i", RingId.GAUSSIAN)
        assert z.star() == Gaussian(Fraction(1), Fraction(-1))
        assert z.norm() == embed(RingId.GAUSSIAN, 2)
        assert z * z.inverse() == one(RingId.GAUSSIAN)

    def test_quaternion_units_anticommute(self):
        """Test ij = k and ji = -k."""
        i = s("i", RingId.QUATERNION)
        j = s("j", RingId.QUATERNION)
        k = s("k", RingId.QUATERNION)
        assert i * j == k
        assert j * i == -k
        assert i * i == -one(RingId.QUATERNION)

    def test_quaternion_involution_reverses_products(self):
        """Test (ab)* = b*a* on non-commuting quaternions."""
        a = s("1+2*i-j", RingId.QUATERNION)
        b = s("3-k+1/2*j", RingId.QUATERNION)
        assert a * b != b * a
        assert (a * b).star() == b.star() * a.star()

    def test_ratfun_involution_flips_variable(self):
        """Test that X* = -X."""
        x = RatFun.variable()
        assert x.star() == -x
        assert (x * x).star() == x * x

    def test_mixing_rings_raises_error(self):
        """Test that combining scalars of two rings is rejected."""
        with pytest.raises(RingMismatchError):
            Rational(Fraction(1)) + Gaussian(Fraction(1))

    def test_inverse_of_zero_raises_error(self):
        """Test that 0 has no inverse in any ring."""
        for ring in ALL_RINGS:
            with pytest.raises(DivisionByZeroError):
                zero(ring).inverse()

    def test_division_by_zero_is_zero_division_error(self):
        """Test that callers catching ZeroDivisionError still work."""
        with pytest.raises(ZeroDivisionError):
            zero(RingId.RATIONAL).inverse()


class TestOrder:
    """Test the positive cones."""

    def test_rational_cone(self):
        """Test that the cone of Q is the nonnegative rationals."""
        assert is_positive_scalar(s("1/3"))
        assert is_positive_scalar(s("0"))
        assert not is_positive_scalar(s("-1/3"))

    def test_non_hermitian_scalar_raises_error(self):
        """Test that only Hermitian elements are compared."""
        with pytest.raises(NotHermitianError):
            is_positive_scalar(s("i", RingId.GAUSSIAN))

    def test_minus_x_squared_is_positive(self):
        """Test the Laurent cone: -X² is positive, X² is not."""
        x = RatFun.variable()
        assert is_positive_scalar(-(x * x))
        assert not is_positive_scalar(x * x)
        assert compare_hermitian(x * x) == -1

    def test_minus_x_squared_has_no_square_root(self):
        """Test that the bounded search finds no Hermitian root of -X²."""
        x = RatFun.variable()
        assert hermitian_sqrt_search(-(x * x)) is None

    def test_square_root_search_finds_squares(self):
        """Test that squares of candidate monomials are found."""
        a = RatFun.monomial(Fraction(1, 4), 4)
        root = hermitian_sqrt_search(a)
        assert root is not None
        assert root * root == a

    def test_laurent_leading(self):
        """Test valuation and leading coefficient at X = 0."""
        assert laurent_leading(s("(x^2)/(1+x)", R)) == (2, Fraction(1))
        assert laurent_leading(s("(3)/(x)", R)) == (-1, Fraction(3))

    def test_laurent_leading_of_zero_raises_error(self):
        """Test that 0 has no leading term."""
        with pytest.raises(ZeroInputError):
            laurent_leading(zero(R))

    def test_laurent_leading_outside_ratfun_raises_error(self):
        """Test that only Q(X) has Laurent expansions."""
        with pytest.raises(RingMismatchError):
            laurent_leading(s("1"))


class TestLiterals:
    """Test parsing and formatting of scalar literals."""

    def test_parse_each_ring(self):
        """Test one literal per ring."""
        assert parse_scalar("-3/4", RingId.RATIONAL) == Rational(
            Fraction(-3, 4)
        )
        assert parse_scalar("1/2 - 2*i", RingId.GAUSSIAN) == Gaussian(
            Fraction(1, 2), Fraction(-2)
        )
        assert parse_scalar("k - 1", RingId.QUATERNION) == Quaternion(
            Fraction(-1), Fraction(0), Fraction(0), Fraction(1)
        )
        assert parse_scalar("x", R) == RatFun.variable()

    def test_canonical_forms(self):
        """Test that formatting emits canonical literals."""
        assert format_scalar(s("2/4")) == "1/2"
        assert format_scalar(s("0+1*i", RingId.GAUSSIAN)) == "i"
        assert format_scalar(s("-x^2", R)) == "-x^2"
        assert format_scalar(zero(RingId.QUATERNION)) == "0"

    def test_zero_denominator_raises_error(self):
        """Test that 1/0 is a parse error."""
        with pytest.raises(LiteralParseError):
            parse_scalar("1/0", RingId.RATIONAL)

    def test_foreign_unit_raises_error(self):
        """Test that i is not a rational literal."""
        with pytest.raises(LiteralParseError):
            parse_scalar("1+i", RingId.RATIONAL)

    def test_parse_error_is_value_error(self):
        """Test that LiteralParseError is also a ValueError."""
        with pytest.raises(ValueError):
            parse_scalar("one", RingId.RATIONAL)


class TestScalarProperties:
    """Property tests over sampled scalars of every ring."""

    @pytest.mark.parametrize("ring", ALL_RINGS)
    def test_involution_laws(self, ring):
        """Test (ab)* = b*a* and a** = a."""

        @given(samplers(ring))
        def check(sampler):
            a, b = sampler.scalar(), sampler.scalar()
            assert (a * b).star() == b.star() * a.star()
            assert a.star().star() == a

        check()

    @pytest.mark.parametrize("ring", ALL_RINGS)
    def test_norms_are_positive_and_anisotropic(self, ring):
        """Test that a*a is positive and vanishes only at 0."""

        @given(samplers(ring))
        def check(sampler):
            a = sampler.scalar()
            assert is_positive_scalar(a.norm())
            assert a.norm().is_zero == a.is_zero

        check()

    @pytest.mark.parametrize("ring", ALL_RINGS)
    def test_literal_round_trip(self, ring):
        """Test parse(format(a)) == a."""

        @given(samplers(ring))
        def check(sampler):
            a = sampler.scalar()
            assert parse_scalar(format_scalar(a), ring) == a

        check()
