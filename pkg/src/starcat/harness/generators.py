"""
Deterministic random instances for the law suite.

Every Sampler owns a private random.Random seeded from the run seed, the
case index and a label, so instances never depend on the order in which
cases or laws execute. Generators that need a property they cannot build
directly (full rank, independence) resample up to the configured retry
budget and then give up with GenerationError.
"""

import logging
import random
from collections.abc import Callable
from fractions import Fraction
from typing import Optional, TypeVar

from sympy.polys.rings import PolyElement

from starcat.category import (
    WMorphism,
    WObject,
    adjoint,
    compose,
    identity,
    injections,
    rational_scale,
)
from starcat.errors import GenerationError, VerificationError
from starcat.factorizations import (
    classify,
    rank,
    try_inverse,
)
from starcat.gram_schmidt import WideCospan
from starcat.harness.config import GenConfig
from starcat.order import (
    is_contraction,
    is_positive_endo,
    scale_identity,
    shrink,
)
from starcat.scalars import (
    Gaussian,
    Quaternion,
    RatFun,
    Rational,
    RingId,
    Scalar,
    embed,
)
from starcat.scalars.ratfun import POLY_RING, poly_from_coefficients
from starcat.settings import get_settings

logger = logging.getLogger(__name__)

T = TypeVar("T")


class Sampler:
    """
    Random generator for one (case, label) pair.

    Args:
        config: Bounds and seed of the run
        case: Case index
        label: Name of the law or generator drawing from this sampler
    """

    def __init__(self, config: GenConfig, case: int, label: str = ""):
        self.config = config
        self.case = case
        self.label = label
        self.rng = random.Random(f"{config.seed}:{case}:{label}")

    @property
    def ring(self) -> RingId:
        return self.config.ring

    # ------------------------------------------------------------------
    # Scalars
    # ------------------------------------------------------------------

    def rational(self, nonzero: bool = False) -> Fraction:
        bound = self.config.numerator_bound
        low = 1 if nonzero else 0
        numerator = self.rng.randint(low, bound)
        if self.rng.random() < 0.5:
            numerator = -numerator
        denominator = self.rng.randint(1, self.config.denominator_bound)
        return Fraction(numerator, denominator)

    def positive_rational(self) -> Fraction:
        return abs(self.rational(nonzero=True))

    def _polynomial(self, constant_nonzero: bool = False) -> PolyElement:
        degree = self.rng.randint(0, self.config.ratfun_degree_bound)
        coefficients = {k: self.rational() for k in range(degree + 1)}
        if constant_nonzero and coefficients[0] == 0:
            coefficients[0] = self.rational(nonzero=True)
        return poly_from_coefficients(coefficients)

    def scalar(self) -> Scalar:
        """A random element, zero with probability about 1/4."""
        if self.rng.random() < 0.25:
            return embed(self.ring, 0)
        match self.ring:
            case RingId.RATIONAL:
                return Rational(self.rational())
            case RingId.GAUSSIAN:
                return Gaussian(self.rational(), self.rational())
            case RingId.QUATERNION:
                return Quaternion(
                    self.rational(),
                    self.rational(),
                    self.rational(),
                    self.rational(),
                )
            case RingId.RATFUN:
                num = self._polynomial()
                den = POLY_RING.one
                if self.rng.random() < 0.3:
                    den = self._polynomial(constant_nonzero=True)
                return RatFun.from_polys(num, den)
        raise GenerationError(f"unknown ring {self.ring!r}")

    def nonzero_scalar(self) -> Scalar:
        return self._retry("nonzero scalar", self._maybe_nonzero)

    def _maybe_nonzero(self) -> Optional[Scalar]:
        value = self.scalar()
        return None if value.is_zero else value

    def weight(self) -> Scalar:
        """A nonzero positive Hermitian scalar."""
        if self.ring is RingId.RATFUN and self.rng.random() < 0.5:
            degree = self.rng.randint(-1, 1)
            monomial = RatFun.monomial(self.positive_rational(), degree)
            return monomial.norm()
        return embed(self.ring, self.positive_rational())

    # ------------------------------------------------------------------
    # Objects and morphisms
    # ------------------------------------------------------------------

    def dim(self, low: int = 0, high: Optional[int] = None) -> int:
        top = self.config.dim_bound if high is None else high
        return self.rng.randint(low, max(low, top))

    def obj(self, dim: Optional[int] = None) -> WObject:
        """A random weighted object, all-ones weights one time in four."""
        n = self.dim() if dim is None else dim
        if self.rng.random() < 0.25:
            return WObject.unweighted(self.ring, n)
        return WObject(self.ring, tuple(self.weight() for _ in range(n)))

    def matrix(self, dom: WObject, cod: WObject) -> WMorphism:
        rows = tuple(
            tuple(self.scalar() for _ in range(dom.dim))
            for _ in range(cod.dim)
        )
        return WMorphism(dom, cod, rows)

    def morphism(self) -> WMorphism:
        return self.matrix(self.obj(), self.obj())

    def column(self, X: WObject) -> tuple[Scalar, ...]:
        return tuple(self.scalar() for _ in range(X.dim))

    def hermitian(self, X: WObject) -> WMorphism:
        """m + m* for a random endomorphism m."""
        m = self.matrix(X, X)
        return m + adjoint(m)

    def positive(self, X: WObject) -> WMorphism:
        """g*g for a random g out of X."""
        g = self.matrix(X, self.obj())
        return compose(adjoint(g), g)

    def strictly_positive(self, X: WObject) -> WMorphism:
        """g*g + q·1 with q a positive rational."""
        return self.positive(X) + scale_identity(X, self.positive_rational())

    def mono(self, cod: WObject, dim: Optional[int] = None) -> WMorphism:
        """A random monomorphism into cod."""
        n = self.dim(high=cod.dim) if dim is None else dim
        dom = self.obj(n)

        def attempt() -> Optional[WMorphism]:
            m = self.matrix(dom, cod)
            return m if rank(m) == dom.dim else None

        return self._retry("monomorphism", attempt)

    def invertible(self, X: WObject) -> WMorphism:
        def attempt() -> Optional[WMorphism]:
            m = self.matrix(X, X)
            return m if try_inverse(m) is not None else None

        return self._retry("invertible endomorphism", attempt)

    def _sparse_scalar(self) -> Scalar:
        """A scalar of bounded size: a monomial over RATFUN."""
        if self.ring is RingId.RATFUN:
            return RatFun.monomial(self.rational(), self.rng.randint(0, 1))
        return self.scalar()

    def reflection(self, X: WObject) -> WMorphism:
        """
        The unitary 1 − 2·v(v*v)^{-1}v* of X.

        v is supported on at most two coordinates, so the entries stay
        small however large X is.
        """
        line = WObject.unweighted(self.ring, 1)
        support = self.rng.sample(range(X.dim), min(2, X.dim))

        def attempt() -> Optional[WMorphism]:
            entries = [embed(self.ring, 0)] * X.dim
            for k in support:
                entries[k] = self._sparse_scalar()
            v = WMorphism(line, X, tuple((entry,) for entry in entries))
            gram_inverse = try_inverse(compose(adjoint(v), v))
            if gram_inverse is None:
                return None
            return compose(v, compose(gram_inverse, adjoint(v)))

        projector = self._retry("reflection vector", attempt)
        return identity(X) - rational_scale(projector, 2)

    def unitary(self, X: WObject) -> WMorphism:
        """A product of a few random reflections of X."""
        u = identity(X)
        if X.dim == 0:
            return u
        bound = self.config.max_reflections
        if self.ring is RingId.RATFUN:
            bound = min(bound, 2)
        for _ in range(self.rng.randint(1, bound)):
            u = compose(self.reflection(X), u)
        return u

    def isometry(
        self, cod: Optional[WObject] = None, dim: Optional[int] = None
    ) -> WMorphism:
        """
        An isometry into cod: a unitary of cod after a coordinate
        selection whose domain copies the selected weights.
        """
        target = self.obj() if cod is None else cod
        n = self.dim(high=target.dim) if dim is None else dim
        if n > target.dim:
            raise GenerationError(
                f"no isometry from dimension {n} into {target.dim}"
            )
        chosen = sorted(self.rng.sample(range(target.dim), n))
        dom = WObject(self.ring, tuple(target.weights[k] for k in chosen))
        u, z = embed(self.ring, 1), embed(self.ring, 0)
        rows = tuple(
            tuple(u if k == i else z for k in chosen)
            for i in range(target.dim)
        )
        return compose(self.unitary(target), WMorphism(dom, target, rows))

    def _diagonal_contraction(self, X: WObject, Y: WObject) -> WMorphism:
        """shrink() of a matrix with at most one nonzero per row and column."""
        n = min(X.dim, Y.dim)
        columns = self.rng.sample(range(X.dim), n)
        rows_at = self.rng.sample(range(Y.dim), n)
        z = embed(self.ring, 0)
        entries = [[z] * X.dim for _ in range(Y.dim)]
        for i, j in zip(rows_at, columns):
            entries[i][j] = self._sparse_scalar()
        f = WMorphism(X, Y, tuple(tuple(row) for row in entries))
        return shrink(f)

    def contraction(
        self, dom: Optional[WObject] = None, cod: Optional[WObject] = None
    ) -> WMorphism:
        """
        A random contraction dom → cod.

        Mostly u·shrink(d)·w for unitaries u, w and a diagonal-pattern d,
        with occasional isometries and halved contractions so that
        non-strict and unevenly scaled contractions occur too.
        """
        Y = self.obj() if cod is None else cod
        roll = self.rng.random()
        if dom is None and roll < 0.15:
            return self.isometry(Y)
        X = self.obj() if dom is None else dom
        core = self._diagonal_contraction(X, Y)
        f = compose(self.unitary(Y), compose(core, self.unitary(X)))
        if roll < 0.3:
            return rational_scale(f, Fraction(1, 2))
        return f

    def partial_isometry(self) -> WMorphism:
        """
        t·s* for isometries s: A → X and t: A → Y.

        t is the first injection of A ⊕ Z followed by the adjoint of a
        random unitary, so the codomain carries random weights too.
        """
        s = self.isometry(self.obj())
        t = injections(s.dom, self.obj(self.dim(high=2)))[0]
        u = self.unitary(t.cod)
        return compose(adjoint(u), compose(t, adjoint(s)))

    def split_cospan(
        self, apex: Optional[WObject] = None, coproduct: bool = False
    ) -> WideCospan:
        """
        Legs whose joint block matrix has full column rank.

        With coproduct=True the leg dimensions add up to the apex
        dimension, so the block matrix is invertible.
        """
        X = self.obj(self.dim(low=1)) if apex is None else apex
        total = X.dim if coproduct else self.dim(high=X.dim)
        sizes: list[int] = []
        remaining = total
        while remaining > 0 or not sizes:
            size = self.rng.randint(0, remaining)
            sizes.append(size)
            remaining -= size
            if len(sizes) >= 4 and remaining > 0:
                sizes.append(remaining)
                remaining = 0
        domains = [self.obj(size) for size in sizes]

        def attempt() -> Optional[WideCospan]:
            legs = tuple(self.matrix(dom, X) for dom in domains)
            cospan = WideCospan(legs)
            block = cospan.block()
            return cospan if rank(block) == block.dom.dim else None

        return self._retry("split cospan", attempt)

    # ------------------------------------------------------------------
    # Retry loop
    # ------------------------------------------------------------------

    def _retry(self, what: str, attempt: Callable[[], Optional[T]]) -> T:
        budget = get_settings().max_retries
        for tries in range(1, budget + 1):
            result = attempt()
            if result is not None:
                if tries > budget // 2:
                    logger.warning(
                        "%s needed %d of %d attempts", what, tries, budget
                    )
                return result
        raise GenerationError(
            f"no {what} after {budget} attempts "
            f"(seed {self.config.seed}, case {self.case})"
        )


# ============================================================================
# Public generators
# ============================================================================


def gen_matrix(
    cfg: GenConfig, shape: tuple[int, int], case: int = 0
) -> WMorphism:
    """A random (rows, columns)-shaped morphism between random objects."""
    sampler = Sampler(cfg, case, "gen_matrix")
    rows, columns = shape
    return sampler.matrix(sampler.obj(columns), sampler.obj(rows))


def gen_isometry(cfg: GenConfig, case: int = 0) -> WMorphism:
    s = Sampler(cfg, case, "gen_isometry").isometry()
    if not classify(s).isometry:
        raise VerificationError("generated isometry is not isometric")
    return s


def gen_contraction(cfg: GenConfig, case: int = 0) -> WMorphism:
    f = Sampler(cfg, case, "gen_contraction").contraction()
    if not is_contraction(f):
        raise VerificationError("generated contraction is not contractive")
    return f


def gen_positive(cfg: GenConfig, case: int = 0) -> WMorphism:
    sampler = Sampler(cfg, case, "gen_positive")
    h = sampler.positive(sampler.obj())
    if not is_positive_endo(h).positive:
        raise VerificationError("generated endomorphism is not positive")
    return h


def gen_split_cospan(cfg: GenConfig, case: int = 0) -> WideCospan:
    return Sampler(cfg, case, "gen_split_cospan").split_cospan()
