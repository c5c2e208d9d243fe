"""
Kernels, cokernels, complements, retractions and range factorization.

All constructions are deterministic: nullspaces come from left-row-operation
elimination with the first-nonzero pivot rule, and the resulting vectors are
orthogonalized in order and weighted by their inverse norms, which makes
every kernel an isometry rather than merely a closed monomorphism.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from pydantic import BaseModel, ConfigDict

from starcat.category import (
    Column,
    WMorphism,
    WObject,
    adjoint,
    compose,
    copair,
    from_columns,
    identity,
    injections,
    inner_product,
    negate,
    pair,
)
from starcat.category import linalg
from starcat.errors import (
    NoSolutionError,
    NotClosedMonoError,
    NotSplitError,
    ShapeMismatchError,
    SingularError,
)
from starcat.scalars import Scalar

logger = logging.getLogger(__name__)


# ============================================================================
# Column helpers
# ============================================================================


def _subtract(x: Column, y: Column) -> Column:
    return tuple(a - b for a, b in zip(x, y))


def _scale_right(x: Column, s: Scalar) -> Column:
    return tuple(a * s for a in x)


def isometric_frame(
    vectors: Sequence[Sequence[Scalar]], X: WObject
) -> WMorphism:
    """
    Orthogonalize columns of X and weight them into an isometry.

    Runs e_k = v_k − Σ_{i<k} e_i ⟨e_i,e_i⟩^{-1} ⟨e_i,v_k⟩ and returns the
    morphism (d, γ) → X whose columns are e_1, ..., e_d, with
    γ_k = ⟨e_k,e_k⟩^{-1}.

    Args:
        vectors: Linearly independent columns of length X.dim
        X: Ambient object

    Returns:
        An isometry onto the span of the vectors

    Raises:
        NotSplitError: If the vectors are linearly dependent
    """
    frame: list[Column] = []
    norms: list[Scalar] = []
    for index, vector in enumerate(vectors):
        e = tuple(vector)
        for previous, norm in zip(frame, norms):
            coefficient = norm.inverse() * inner_product(previous, e, X)
            e = _subtract(e, _scale_right(previous, coefficient))
        if all(x.is_zero for x in e):
            raise NotSplitError(
                f"vector {index} lies in the span of the previous ones"
            )
        frame.append(e)
        norms.append(inner_product(e, e, X))
    weights = tuple(norm.inverse() for norm in norms)
    return from_columns(WObject(X.ring, weights), X, frame)


# ============================================================================
# Kernels and complements
# ============================================================================


def kernel(f: WMorphism) -> WMorphism:
    """
    An isometric kernel of f.

    Example:
        ```python
        # f = [1 1]: (2,(1,1)) → (1,(1))
        k = kernel(f)
        # k: (1,(1/2)) → (2,(1,1)), column (1, -1)
        ```
    """
    basis = linalg.nullspace(f.rows, f.dom.dim, f.ring)
    k = isometric_frame(basis, f.dom)
    logger.debug(
        "kernel of %d×%d morphism has dimension %d",
        f.cod.dim,
        f.dom.dim,
        k.dom.dim,
    )
    return k


def cokernel(f: WMorphism) -> WMorphism:
    """A coisometric cokernel of f, the adjoint of kernel(adjoint(f))."""
    return adjoint(kernel(adjoint(f)))


def orthogonal_complement(m: WMorphism) -> WMorphism:
    """The isometry m⊥ = kernel(adjoint(m)) into cod(m)."""
    return kernel(adjoint(m))


def equalizer(f: WMorphism, g: WMorphism) -> WMorphism:
    """An isometric equalizer of a parallel pair, kernel(f − g)."""
    return kernel(f - g)


# ============================================================================
# Inverses, retractions and extensions
# ============================================================================


def try_inverse(f: WMorphism) -> WMorphism | None:
    """The two-sided inverse of f, or None when f is not invertible."""
    if f.dom.dim != f.cod.dim:
        return None
    try:
        rows = linalg.inverse(f.rows, f.dom.dim, f.ring)
    except SingularError:
        return None
    return WMorphism(f.cod, f.dom, rows)


def rank(f: WMorphism) -> int:
    return linalg.rank(f.rows, f.dom.dim)


def canonical_retraction(s: WMorphism) -> WMorphism:
    """
    The retraction (s*s)^{-1}s* of a closed monomorphism.

    Raises:
        NotClosedMonoError: If adjoint(s)·s is not invertible
    """
    s_star = adjoint(s)
    gram_inverse = try_inverse(compose(s_star, s))
    if gram_inverse is None:
        raise NotClosedMonoError(
            "adjoint(s)·s is not invertible: s is not a closed monomorphism"
        )
    return compose(gram_inverse, s_star)


@dataclass(frozen=True)
class Extension:
    """
    A solution h of h·f = g.

    Attributes:
        h: The extension, cod(f) → cod(g)
        unique: True when f is epic, so no other solution exists
    """

    h: WMorphism
    unique: bool


def solve_extension(g: WMorphism, f: WMorphism) -> Extension:
    """
    Find h with h·f = g.

    Free variables of the linear system are set to zero, so among many
    solutions the one supported on the pivot columns is returned.

    Raises:
        ShapeMismatchError: If f and g have different domains
        NoSolutionError: If g does not factor through f
    """
    if f.dom != g.dom:
        raise ShapeMismatchError(
            "solve_extension needs morphisms with a common domain"
        )
    try:
        rows = linalg.solve_left(f.rows, g.rows, f.dom.dim, f.ring)
    except NoSolutionError as exc:
        raise NoSolutionError(
            "g does not factor through f: no h with h·f = g"
        ) from exc
    h = WMorphism(f.cod, g.cod, rows)
    return Extension(h, rank(f) == f.cod.dim)


def lift(g: WMorphism, m: WMorphism) -> WMorphism:
    """
    Find h with m·h = g.

    Raises:
        ShapeMismatchError: If g and m have different codomains
        NoSolutionError: If g does not factor through m
    """
    if g.cod != m.cod:
        raise ShapeMismatchError("lift needs morphisms with a common codomain")
    rows = linalg.solve(m.rows, g.rows, m.dom.dim, g.dom.dim, m.ring)
    return WMorphism(g.dom, m.dom, rows)


def factors_through(g: WMorphism, m: WMorphism) -> bool:
    """True iff g = m·h for some h."""
    try:
        lift(g, m)
    except NoSolutionError:
        return False
    return True


def is_kernel_of(m: WMorphism, f: WMorphism) -> bool:
    """
    True iff m is a kernel of f.

    m must be monic with f·m = 0, and its image must be all of
    {x : f·x = 0}, so every g with f·g = 0 factors uniquely through m.
    """
    if m.cod != f.dom:
        return False
    if not compose(f, m).is_zero():
        return False
    return rank(m) == m.dom.dim == f.dom.dim - rank(f)


# ============================================================================
# Range factorization
# ============================================================================


@dataclass(frozen=True)
class RangeFactorization:
    """
    f = j·u·e with j an isometry, u invertible and e a coisometry.
    """

    j: WMorphism
    u: WMorphism
    e: WMorphism

    def recompose(self) -> WMorphism:
        return compose(self.j, compose(self.u, self.e))


def range_factorization(f: WMorphism) -> RangeFactorization:
    """
    Split f through its coimage and image.

    e = adjoint(complement(kernel(f))), j orthogonalizes the columns of
    f·complement(kernel(f)) in order, and u = adjoint(j)·f·adjoint(e).

    Example:
        ```python
        # f = [[2]] on (1,(1))
        rf = range_factorization(f)
        # rf.j = [2] from (1,(1/4)), rf.u = [1], rf.e = [1]
        ```
    """
    coimage = orthogonal_complement(kernel(f))
    image = compose(f, coimage)
    j = isometric_frame(image.columns(), f.cod)
    u = compose(adjoint(j), image)
    logger.debug("range factorization through rank %d", j.dom.dim)
    return RangeFactorization(j, u, adjoint(coimage))


# ============================================================================
# Classification
# ============================================================================


class MorphismClass(BaseModel):
    """Decided properties of a single morphism."""

    model_config = ConfigDict(frozen=True)

    mono: bool
    epi: bool
    split_mono: bool
    closed_mono: bool
    isometry: bool
    coisometry: bool
    unitary: bool
    partial_isometry: bool


def classify(f: WMorphism) -> MorphismClass:
    """
    Decide every flag of MorphismClass exactly.

    Example:
        ```python
        # f = [[0, 1], [0, 0]] unweighted
        flags = classify(f)
        assert flags.partial_isometry and not flags.isometry
        ```
    """
    r = rank(f)
    f_star = adjoint(f)
    gram = compose(f_star, f)
    cogram = compose(f, f_star)
    try:
        solve_extension(identity(f.dom), f)
        split_mono = True
    except NoSolutionError:
        split_mono = False
    isometry = gram == identity(f.dom)
    coisometry = cogram == identity(f.cod)
    return MorphismClass(
        mono=r == f.dom.dim,
        epi=r == f.cod.dim,
        split_mono=split_mono,
        closed_mono=try_inverse(gram) is not None,
        isometry=isometry,
        coisometry=coisometry,
        unitary=isometry and coisometry,
        partial_isometry=compose(cogram, f) == f,
    )


# ============================================================================
# Pushouts of split monomorphisms
# ============================================================================


@dataclass(frozen=True)
class SplitPushout:
    """
    Pushout of a split mono s: A → X along a: A → B.

    Attributes:
        x_leg: X → P
        b_leg: B → P, the pushed-out split mono
        retraction: P → B with retraction·b_leg = 1
    """

    x_leg: WMorphism
    b_leg: WMorphism
    retraction: WMorphism


def pushout(s: WMorphism, a: WMorphism) -> SplitPushout:
    """
    Push a split monomorphism out along an arbitrary morphism.

    The apex is the cokernel q of [s; −a]: A → X ⊕ B, with legs q·i1 and
    q·i2. A retraction r of s induces the retraction of the new leg as the
    unique solution of r'·q = [a·r  1].

    Raises:
        ShapeMismatchError: If s and a do not share a domain
        NotClosedMonoError: If s is not split
    """
    if s.dom != a.dom:
        raise ShapeMismatchError("pushout needs a span with a common domain")
    r = canonical_retraction(s)
    q = cokernel(pair(s, negate(a)))
    i1, i2 = injections(s.cod, a.cod)
    x_leg, b_leg = compose(q, i1), compose(q, i2)
    target = copair(compose(a, r), identity(a.cod))
    retraction = solve_extension(target, q).h
    return SplitPushout(x_leg, b_leg, retraction)

