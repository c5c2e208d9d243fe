import pytest
from hypothesis import given

from starcat.category import WObject, adjoint, compose
from starcat.errors import (
    NotHermitianError,
    NotMonoError,
    NotPositiveDefiniteError,
    NotSplitError,
    ShapeMismatchError,
)
from starcat.factorizations import try_inverse
from starcat.gram_schmidt import (
    GramMatrix,
    WideCospan,
    conjugate_gram,
    gram_schmidt,
    is_split,
    orthogonalize_gram,
    same_subobject,
)
from starcat.scalars import RingId, hermitian_sqrt_search
from tests.helpers import ALL_RINGS, mor, obj, s, samplers


def gram(rows):
    return GramMatrix(
        RingId.RATIONAL, tuple(tuple(s(x) for x in row) for row in rows)
    )


class TestWideCospan:
    """Test cospan construction and splitting."""

    def test_empty_cospan_raises_error(self):
        """Test that a cospan needs a leg."""
        with pytest.raises(ShapeMismatchError):
            WideCospan(())

    def test_legs_must_share_codomain(self):
        """Test the common-apex requirement."""
        with pytest.raises(ShapeMismatchError):
            WideCospan((mor([[1]]), mor([[1], [0]])))

    def test_is_split_returns_retractions(self):
        """Test r_k·s_j = δ_kj for an independent pair."""
        s1, s2 = mor([[1], [1]]), mor([[0], [1]])
        retractions = is_split(WideCospan((s1, s2)))
        assert retractions is not None
        r1, r2 = retractions
        assert compose(r1, s1) == mor([[1]])
        assert compose(r1, s2).is_zero()
        assert compose(r2, s2) == mor([[1]])

    def test_repeated_leg_is_not_split(self):
        """Test that dependent legs have no joint retraction."""
        leg = mor([[1], [2]])
        assert is_split(WideCospan((leg, leg))) is None


class TestGramSchmidt:
    """Test orthogonalization of wide cospans."""

    def test_two_legs(self):
        """Test t2 = (-1/2, 1/2) for s1 = (1, 1), s2 = (0, 1)."""
        t = gram_schmidt(WideCospan((mor([[1], [1]]), mor([[0], [1]]))))
        assert t.legs[0] == mor([[1], [1]])
        assert t.legs[1] == mor([["-1/2"], ["1/2"]])

    def test_dependent_legs_raise_error(self):
        """Test that only split cospans are orthogonalized."""
        with pytest.raises(NotSplitError):
            gram_schmidt(WideCospan((mor([[1], [1]]), mor([[2], [2]]))))

    @pytest.mark.parametrize("ring", ALL_RINGS)
    def test_postconditions(self, ring):
        """Test orthogonality, closedness and prefix spans."""

        @given(samplers(ring))
        def check(sampler):
            c = sampler.split_cospan()
            t = gram_schmidt(c)
            for j, tj in enumerate(t.legs):
                assert try_inverse(compose(adjoint(tj), tj)) is not None
                for k, tk in enumerate(t.legs):
                    if j != k:
                        assert compose(adjoint(tj), tk).is_zero()
            for m in range(1, len(c.legs) + 1):
                assert same_subobject(c.prefix(m), t.prefix(m))
            assert gram_schmidt(t) == t

        check()


class TestSameSubobject:
    """Test subobject comparison."""

    def test_rescaled_monos_agree(self):
        """Test that [1; 1] and [2; 2] span the same subobject."""
        assert same_subobject(mor([[1], [1]]), mor([[2], [2]]))
        assert not same_subobject(mor([[1], [1]]), mor([[1], [0]]))

    def test_non_mono_raises_error(self):
        """Test that only monos are compared."""
        with pytest.raises(NotMonoError):
            same_subobject(mor([[1], [1]]), mor([[1, 1], [1, 1]]))


class TestGramMatrices:
    """Test orthogonalization of Gram matrices."""

    def test_orthogonalize(self):
        """Test [[2, 1], [1, 2]] gives weights (1/2, 2/3)."""
        G = gram([[2, 1], [1, 2]])
        result = orthogonalize_gram(G)
        assert result.obj == obj("1/2", "2/3")
        assert result.basis_change == (
            (s(1), s("-1/2")),
            (s(0), s(1)),
        )
        assert conjugate_gram(G, result.basis_change) == (
            (s(2), s(0)),
            (s(0), s("3/2")),
        )

    def test_ratfun_weight_without_orthonormal_form(self):
        """Test that [[-X²]] over ℚ(X) gives the weight (-X²)^{-1}."""
        minus_x2 = s("-x^2", ring=RingId.RATFUN)
        G = GramMatrix(RingId.RATFUN, ((minus_x2,),))
        result = orthogonalize_gram(G)
        assert result.obj == WObject(RingId.RATFUN, (minus_x2.inverse(),))
        assert result.basis_change == ((s(1, ring=RingId.RATFUN),),)
        assert conjugate_gram(G, result.basis_change) == ((minus_x2,),)
        assert hermitian_sqrt_search(minus_x2) is None

    def test_indefinite_matrix_raises_error(self):
        """Test that [[1, 2], [2, 1]] is rejected."""
        with pytest.raises(NotPositiveDefiniteError):
            orthogonalize_gram(gram([[1, 2], [2, 1]]))

    def test_non_hermitian_matrix_raises_error(self):
        """Test Gram matrix validation."""
        with pytest.raises(NotHermitianError):
            gram([[1, 2], [3, 1]])

    def test_non_square_matrix_raises_error(self):
        """Test the square-shape requirement."""
        with pytest.raises(ShapeMismatchError):
            gram([[1, 2]])
