"""
Gram–Schmidt on wide cospans and orthogonalization of Gram matrices.

Legs are processed in the order given. Norms are never normalized away;
they are absorbed into the weights of the objects instead, since the
square roots needed for orthonormal legs need not exist.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Optional

from starcat.category import (
    WMorphism,
    WObject,
    adjoint,
    compose,
    copair,
    projections,
)
from starcat.category.linalg import Matrix, conj_transpose, matmul
from starcat.errors import (
    NotHermitianError,
    NotMonoError,
    NotPositiveDefiniteError,
    NotSplitError,
    RingMismatchError,
    ShapeMismatchError,
)
from starcat.factorizations import (
    canonical_retraction,
    factors_through,
    rank,
    try_inverse,
)
from starcat.scalars import RingId, Scalar, one, scalar_type, zero

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WideCospan:
    """
    A nonempty family of morphisms into a common apex.

    Raises:
        ShapeMismatchError: If the family is empty or the codomains differ
    """

    legs: tuple[WMorphism, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "legs", tuple(self.legs))
        if not self.legs:
            raise ShapeMismatchError("a wide cospan needs at least one leg")
        apex = self.legs[0].cod
        if any(leg.cod != apex for leg in self.legs):
            raise ShapeMismatchError("cospan legs must share a codomain")

    @property
    def apex(self) -> WObject:
        return self.legs[0].cod

    def block(self) -> WMorphism:
        """The copair [s_1 ... s_n] out of the sum of the leg domains."""
        return copair(*self.legs)

    def prefix(self, m: int) -> WMorphism:
        """The copair of the first m legs."""
        return copair(*self.legs[:m])


@dataclass(frozen=True)
class GramMatrix:
    """
    A Hermitian matrix of inner products ⟨x_i, x_j⟩.

    Positive-definiteness is not checked here; orthogonalize_gram
    certifies it.
    """

    ring: RingId
    entries: Matrix

    def __post_init__(self) -> None:
        object.__setattr__(self, "ring", RingId(self.ring))
        entries = tuple(tuple(row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        n = len(entries)
        if any(len(row) != n for row in entries):
            raise ShapeMismatchError("a Gram matrix must be square")
        expected = scalar_type(self.ring)
        if any(type(x) is not expected for row in entries for x in row):
            raise RingMismatchError(
                f"Gram matrix entries must be {self.ring.value} scalars"
            )
        if conj_transpose(entries, n) != entries:
            raise NotHermitianError("Gram matrix is not Hermitian")

    @property
    def dim(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class GramOrthogonalization:
    """
    Result of orthogonalize_gram.

    Attributes:
        obj: The object whose weights are ⟨e_k,e_k⟩^{-1}
        basis_change: Upper unitriangular matrix whose columns express the
            orthogonal basis in the standard one
    """

    obj: WObject
    basis_change: Matrix


# ============================================================================
# Cospans
# ============================================================================


def is_split(c: WideCospan) -> Optional[tuple[WMorphism, ...]]:
    """
    A joint retraction of the cospan, if one exists.

    Returns:
        Morphisms r_k: apex → dom(s_k) with r_k·s_j = δ_kj, or None
    """
    total = c.block()
    if rank(total) != total.dom.dim:
        return None
    retraction = canonical_retraction(total)
    return tuple(
        compose(p, retraction)
        for p in projections(*(leg.dom for leg in c.legs))
    )


def gram_schmidt(c: WideCospan) -> WideCospan:
    """
    Orthogonalize a split wide cospan.

    t_1 = s_1 and t_{m+1} = s_{m+1} − Σ_k t_k (t_k* t_k)^{-1} t_k* s_{m+1}.
    Each output leg is a closed mono, the legs are pairwise orthogonal, and
    every prefix spans the same subobject as the input prefix.

    Example:
        ```python
        # s1 = (1, 1), s2 = (0, 1) into (2,(1,1)) over Q
        t = gram_schmidt(WideCospan((s1, s2)))
        # t.legs[1] = (-1/2, 1/2)
        ```

    Raises:
        NotSplitError: If the cospan has no joint retraction
    """
    if is_split(c) is None:
        raise NotSplitError("wide cospan is not split: legs are dependent")
    done: list[WMorphism] = []
    projectors: list[WMorphism] = []
    for s in c.legs:
        t = s
        for projector in projectors:
            t = t - compose(projector, s)
        done.append(t)
        t_star = adjoint(t)
        gram_inverse = try_inverse(compose(t_star, t))
        if gram_inverse is None:
            raise NotSplitError("orthogonalized leg is not a closed mono")
        projectors.append(compose(t, compose(gram_inverse, t_star)))
    logger.debug("orthogonalized %d cospan legs", len(done))
    return WideCospan(tuple(done))


def same_subobject(m1: WMorphism, m2: WMorphism) -> bool:
    """
    True iff two monos into a common object factor through each other.

    Raises:
        ShapeMismatchError: If the codomains differ
        NotMonoError: If either morphism is not monic
    """
    if m1.cod != m2.cod:
        raise ShapeMismatchError("subobjects of different objects")
    for m in (m1, m2):
        if rank(m) != m.dom.dim:
            raise NotMonoError("same_subobject compares monomorphisms only")
    return factors_through(m1, m2) and factors_through(m2, m1)


# ============================================================================
# Gram matrices
# ============================================================================


def _gram_form(
    g: Matrix, x: Sequence[Scalar], y: Sequence[Scalar], ring: RingId
) -> Scalar:
    total = zero(ring)
    for i, xi in enumerate(x):
        if xi.is_zero:
            continue
        for j, yj in enumerate(y):
            if yj.is_zero or g[i][j].is_zero:
                continue
            total = total + xi.star() * g[i][j] * yj
    return total


def orthogonalize_gram(G: GramMatrix) -> GramOrthogonalization:
    """
    Orthogonalize the standard basis under the form x* G y.

    Raises:
        NotPositiveDefiniteError: If some deflated norm is zero or negative
    """
    ring, n = G.ring, G.dim
    z, u = zero(ring), one(ring)
    basis: list[tuple[Scalar, ...]] = []
    norms: list[Scalar] = []
    for k in range(n):
        e = tuple(u if i == k else z for i in range(n))
        for previous, norm in zip(basis, norms):
            coefficient = norm.inverse() * _gram_form(
                G.entries, previous, e, ring
            )
            e = tuple(a - b * coefficient for a, b in zip(e, previous))
        norm = _gram_form(G.entries, e, e, ring)
        if norm.is_zero or not norm.is_positive():
            raise NotPositiveDefiniteError(
                f"Gram matrix is not positive definite: norm {k} is {norm}"
            )
        basis.append(e)
        norms.append(norm)
    weights = tuple(norm.inverse() for norm in norms)
    change = tuple(tuple(col[i] for col in basis) for i in range(n))
    return GramOrthogonalization(WObject(ring, weights), change)


def conjugate_gram(G: GramMatrix, change: Matrix) -> Matrix:
    """The matrix B* G B for a basis change B (plain conjugate transpose)."""
    n = G.dim
    left = matmul(conj_transpose(change, n), G.entries, n, n, G.ring)
    return matmul(left, change, n, n, G.ring)
