import pytest
from hypothesis import given

from starcat.category import adjoint, compose, copair, identity
from starcat.errors import (
    NoSolutionError,
    NotClosedMonoError,
    NotSplitError,
    ShapeMismatchError,
)
from starcat.factorizations import (
    canonical_retraction,
    classify,
    cokernel,
    equalizer,
    factors_through,
    is_kernel_of,
    isometric_frame,
    kernel,
    lift,
    orthogonal_complement,
    pushout,
    range_factorization,
    rank,
    solve_extension,
    try_inverse,
)
from tests.helpers import ALL_RINGS, mor, obj, s, samplers


class TestKernels:
    """Test isometric kernels and cokernels."""

    def test_kernel_of_row(self):
        """Test kernel([1 1]) = (1, -1) from (1,(1/2))."""
        k = kernel(mor([[1, 1]]))
        assert k.dom == obj("1/2")
        assert k.rows == ((s(1),), (s(-1),))
        assert compose(adjoint(k), k) == identity(k.dom)

    def test_kernel_of_injective_morphism_is_empty(self):
        """Test that monos have the zero kernel."""
        k = kernel(mor([[1], [2]]))
        assert k.dom.dim == 0

    def test_cokernel_of_column(self):
        """Test cokernel([1; 1]) = [1/2 -1/2] onto (1,(1/2))."""
        c = cokernel(mor([[1], [1]]))
        assert c == mor([["1/2", "-1/2"]], cod=obj("1/2"))
        assert compose(c, adjoint(c)) == identity(c.cod)

    def test_equalizer(self):
        """Test that the equalizer of two projections is the diagonal."""
        e = equalizer(mor([[1, 0]]), mor([[0, 1]]))
        assert e.rows == ((s(1),), (s(1),))
        assert e.dom == obj("1/2")

    def test_is_kernel_of(self):
        """Test the universal-property check."""
        f = mor([[1, 1, 0]])
        assert is_kernel_of(kernel(f), f)
        assert not is_kernel_of(mor([[1], [-1], [0]]), mor([[1, 1, 1]]))

    def test_dependent_vectors_raise_error(self):
        """Test that a frame needs independent vectors."""
        with pytest.raises(NotSplitError):
            isometric_frame([(s(1), s(1)), (s(2), s(2))], obj(1, 1))

    @pytest.mark.parametrize("ring", ALL_RINGS)
    def test_kernel_universal(self, ring):
        """Test f·k = 0, k isometric, and lifts through k."""

        @given(samplers(ring))
        def check(sampler):
            f = sampler.morphism()
            k = kernel(f)
            assert compose(f, k).is_zero()
            assert classify(k).isometry
            assert rank(k) + rank(f) == f.dom.dim
            h = sampler.matrix(sampler.obj(), k.dom)
            assert lift(compose(k, h), k) == h

        check()

    @pytest.mark.parametrize("ring", ALL_RINGS)
    def test_complement_splits(self, ring):
        """Test that [m m⊥] is unitary for isometries m."""

        @given(samplers(ring))
        def check(sampler):
            m = sampler.isometry()
            p = orthogonal_complement(m)
            assert classify(copair(m, p)).unitary

        check()


class TestRetractionsAndExtensions:
    """Test retractions and solving h·f = g."""

    def test_canonical_retraction(self):
        """Test (s*s)^{-1}s* for s = [1; 1]."""
        r = canonical_retraction(mor([[1], [1]]))
        assert r == mor([["1/2", "1/2"]])

    def test_non_mono_has_no_retraction(self):
        """Test that non-closed monos raise."""
        with pytest.raises(NotClosedMonoError):
            canonical_retraction(mor([[0]]))

    def test_solve_extension_sets_free_variables_to_zero(self):
        """Test h·[1; 1] = [2] gives h = [2 0], not unique."""
        ext = solve_extension(mor([[2]]), mor([[1], [1]]))
        assert ext.h == mor([[2, 0]])
        assert not ext.unique

    def test_solve_extension_unique_for_epi(self):
        """Test that an epic f determines h."""
        ext = solve_extension(mor([[3, 3]]), mor([[1, 1]]))
        assert ext.h == mor([[3]])
        assert ext.unique

    def test_solve_extension_without_solution_raises_error(self):
        """Test that g must factor through f."""
        with pytest.raises(NoSolutionError):
            solve_extension(mor([[1]]), mor([[0]]))

    def test_solve_extension_needs_common_domain(self):
        """Test the shape precondition."""
        with pytest.raises(ShapeMismatchError):
            solve_extension(mor([[1, 0]]), mor([[1]]))

    def test_factors_through(self):
        """Test g = m·h detection."""
        m = mor([[1], [1]])
        assert factors_through(mor([[2, 3], [2, 3]]), m)
        assert not factors_through(mor([[1], [0]]), m)

    def test_try_inverse(self):
        """Test inverses of invertible and singular endomorphisms."""
        assert try_inverse(mor([[2, 0], [0, 4]])) == mor(
            [["1/2", 0], [0, "1/4"]]
        )
        assert try_inverse(mor([[1, 2], [2, 4]])) is None


class TestRangeFactorization:
    """Test f = j·u·e."""

    def test_scalar_range_factorization(self):
        """Test [[2]] factors as j = [2] from (1,(1/4)), u = e = [1]."""
        rf = range_factorization(mor([[2]]))
        assert rf.j.rows == ((s(2),),)
        assert rf.j.dom == obj("1/4")
        assert rf.u.rows == ((s(1),),)
        assert rf.e.rows == ((s(1),),)

    @pytest.mark.parametrize("ring", ALL_RINGS)
    def test_range_factorization(self, ring):
        """Test the factor properties on random morphisms."""

        @given(samplers(ring))
        def check(sampler):
            f = sampler.morphism()
            rf = range_factorization(f)
            assert rf.recompose() == f
            assert classify(rf.j).isometry
            assert classify(rf.e).coisometry
            assert try_inverse(rf.u) is not None

        check()


class TestClassify:
    """Test the morphism classification."""

    def test_partial_isometry(self):
        """Test the nilpotent shift."""
        flags = classify(mor([[0, 1], [0, 0]]))
        assert flags.partial_isometry
        assert not flags.isometry
        assert not flags.mono

    def test_weighted_isometry(self):
        """Test that [2]: (1,(1/4)) → (1,(1)) is unitary."""
        flags = classify(mor([[2]], dom=obj("1/4")))
        assert flags.unitary
        assert flags.isometry and flags.coisometry

    def test_non_isometric_mono(self):
        """Test that [1; 1] is a split mono but not an isometry."""
        flags = classify(mor([[1], [1]]))
        assert flags.mono and flags.split_mono and flags.closed_mono
        assert not flags.isometry
        assert not flags.epi

    def test_flags_serialize(self):
        """Test that flags dump to a plain dict."""
        dumped = classify(mor([[1]])).model_dump()
        assert dumped["unitary"] is True


class TestPushout:
    """Test pushouts of split monos."""

    def test_split_pushout(self):
        """Test the square and the induced retraction."""
        m = mor([[1], [0]])
        a = mor([[2], [3]])
        square = pushout(m, a)
        assert compose(square.x_leg, m) == compose(square.b_leg, a)
        assert compose(square.retraction, square.b_leg) == identity(a.cod)

    def test_pushout_needs_common_domain(self):
        """Test the span precondition."""
        with pytest.raises(ShapeMismatchError):
            pushout(mor([[1], [0]]), mor([[1, 1]]))
