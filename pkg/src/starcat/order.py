"""
The canonical order on Hermitian endomorphisms.

Positivity is decided by congruence diagonalization of the weighted form
B(x, y) = ⟨x, H·y⟩. Every decision carries a certificate that re-verifies
exactly: a factor G with G*·G = H, or a vector x with ⟨x, H·x⟩ strictly
negative. The procedure is complete because the Hermitian part of every
supported ring is totally ordered.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from starcat.category import (
    Column,
    WMorphism,
    WObject,
    adjoint,
    compose,
    identity,
    inner_product,
    rational_scale,
)
from starcat.category import linalg
from starcat.errors import (
    NotEndoError,
    NotHermitianError,
    PreconditionFailedError,
    ShapeMismatchError,
)
from starcat.factorizations import try_inverse
from starcat.scalars import Scalar, one, zero

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    POSITIVE = "positive"
    NOT_POSITIVE = "not_positive"


@dataclass(frozen=True)
class PositivityVerdict:
    """
    Outcome of is_positive_endo with its certificate.

    Attributes:
        endo: The Hermitian endomorphism that was decided
        verdict: POSITIVE or NOT_POSITIVE
        factor: For POSITIVE, an epic G with adjoint(G)·G = endo
        witness: For NOT_POSITIVE, a column x with ⟨x, endo·x⟩ < 0
    """

    endo: WMorphism
    verdict: Verdict
    factor: Optional[WMorphism] = None
    witness: Optional[Column] = None

    @property
    def positive(self) -> bool:
        return self.verdict is Verdict.POSITIVE

    def witness_value(self) -> Scalar:
        """⟨x, H·x⟩ for the negativity witness."""
        if self.witness is None:
            raise PreconditionFailedError("a positive verdict has no witness")
        return inner_product(
            self.witness, self.endo.apply(self.witness), self.endo.dom
        )

    def verify(self) -> bool:
        """Re-check the carried certificate against the endomorphism."""
        if self.positive:
            if self.factor is None:
                return False
            return compose(adjoint(self.factor), self.factor) == self.endo
        if self.witness is None:
            return False
        value = self.witness_value()
        return not value.is_zero and (-value).is_positive()


def _check_hermitian_endo(H: WMorphism) -> None:
    if not H.is_endo:
        raise NotEndoError(
            f"expected an endomorphism, got {H.dom.dim} → {H.cod.dim}"
        )
    if adjoint(H) != H:
        raise NotHermitianError("endomorphism is not Hermitian: H* != H")


def _pull_back(
    y: list[Scalar], steps: list[tuple[int, list[Scalar]]]
) -> Column:
    """
    Lift a vector of the deflated form to the original coordinates.

    Each processed pivot row g satisfies g·x = 0 on the result, solved for
    the pivot coordinate, latest pivot first.
    """
    x = list(y)
    for pivot, g in reversed(steps):
        total = zero(x[pivot].ring)
        for j, gj in enumerate(g):
            if j != pivot and not gj.is_zero and not x[j].is_zero:
                total = total + gj * x[j]
        x[pivot] = -total
    return tuple(x)


def is_positive_endo(H: WMorphism) -> PositivityVerdict:
    """
    Decide whether H lies in the canonical cone.

    Works on F = diag(α^{-1})·H, the matrix of the weighted form. At a
    nonzero pivot d the row g = d^{-1}·F_k is recorded and F is deflated to
    F − F_{:,k} d^{-1} F_k. A pivot that is not positive yields the witness
    e_k; a zero pivot with a nonzero entry b = F_jk yields the witness
    e_j·(−t·b) + e_k, where t = 1 unless w = b*·F_jj·b is positive, and
    then t = (b*b)·w^{-1}.

    Example:
        ```python
        # H = [[2, 1], [1, 2]] unweighted: POSITIVE, G weights (1/2, 2/3)
        # H = [[1, 2], [2, 1]]: NOT_POSITIVE, witness (-2, 1), value -3
        ```

    Raises:
        NotEndoError: If dom(H) != cod(H)
        NotHermitianError: If adjoint(H) != H
    """
    _check_hermitian_endo(H)
    X = H.dom
    n, ring = X.dim, X.ring
    z, u = zero(ring), one(ring)
    work = [
        [X.weights[i].inverse() * entry for entry in row]
        for i, row in enumerate(H.rows)
    ]
    steps: list[tuple[int, list[Scalar]]] = []
    pivots: list[Scalar] = []
    for k in range(n):
        d = work[k][k]
        if d.is_zero:
            j = next((j for j in range(n) if not work[j][k].is_zero), None)
            if j is None:
                continue
            b = work[j][k]
            norm = b.star() * b
            w = b.star() * work[j][j] * b
            t = u if w.is_zero or not w.is_positive() else norm * w.inverse()
            y = [z] * n
            y[j] = -(t * b)
            y[k] = u
            return _negative(H, _pull_back(y, steps))
        if not d.is_positive():
            y = [z] * n
            y[k] = u
            return _negative(H, _pull_back(y, steps))
        d_inv = d.inverse()
        g = [d_inv * entry for entry in work[k]]
        column = [work[i][k] for i in range(n)]
        for i in range(n):
            if column[i].is_zero:
                continue
            left = column[i]
            work[i] = [
                entry - left * gj if not gj.is_zero else entry
                for entry, gj in zip(work[i], g)
            ]
        steps.append((k, g))
        pivots.append(d)
    codomain = WObject(ring, tuple(d.inverse() for d in pivots))
    factor = WMorphism(X, codomain, tuple(tuple(g) for _, g in steps))
    logger.debug("positive endomorphism of rank %d", len(steps))
    return PositivityVerdict(H, Verdict.POSITIVE, factor=factor)


def _negative(H: WMorphism, witness: Column) -> PositivityVerdict:
    logger.debug("endomorphism is not positive")
    return PositivityVerdict(H, Verdict.NOT_POSITIVE, witness=witness)


def positive_part_factor(H: WMorphism) -> WMorphism:
    """
    The epic factor G with adjoint(G)·G = H.

    Raises:
        PreconditionFailedError: If H is not positive
    """
    verdict = is_positive_endo(H)
    if verdict.factor is None:
        raise PreconditionFailedError("endomorphism is not positive")
    return verdict.factor


# ============================================================================
# Order relations
# ============================================================================


def _check_comparable(a: WMorphism, b: WMorphism) -> None:
    if a.dom != b.dom or a.cod != b.cod:
        raise ShapeMismatchError(
            "can only compare endomorphisms of one object"
        )


def le(a: WMorphism, b: WMorphism) -> bool:
    """a ≤ b iff b − a is positive."""
    _check_comparable(a, b)
    return is_positive_endo(b - a).positive


def is_strictly_positive(H: WMorphism) -> bool:
    """H ≻ 0 iff H is positive and invertible."""
    return is_positive_endo(H).positive and try_inverse(H) is not None


def lt(a: WMorphism, b: WMorphism) -> bool:
    """a ≺ b iff b − a is strictly positive."""
    _check_comparable(a, b)
    return is_strictly_positive(b - a)


def invert(f: WMorphism) -> WMorphism:
    """
    The two-sided inverse of f.

    Raises:
        ShapeMismatchError: If f is not square
        SingularError: If f is not invertible
    """
    rows = linalg.inverse(f.rows, f.dom.dim, f.ring)
    return WMorphism(f.cod, f.dom, rows)


# ============================================================================
# Contractions
# ============================================================================


def defect(f: WMorphism) -> WMorphism:
    """The Hermitian endomorphism 1 − f*f."""
    return identity(f.dom) - compose(adjoint(f), f)


def is_contraction(f: WMorphism) -> bool:
    """f*f ≤ 1."""
    return is_positive_endo(defect(f)).positive


def is_strict_contraction(f: WMorphism) -> bool:
    """f*f ≺ 1."""
    return is_strictly_positive(defect(f))


@dataclass(frozen=True)
class BoundedTransform:
    """f = c·d with c = f·(1 + a)^{-1} and d = 1 + a."""

    c: WMorphism
    d: WMorphism


def bounded_transform(f: WMorphism, a: WMorphism) -> BoundedTransform:
    """
    Split f into a contraction and an invertible positive factor.

    Example:
        ```python
        # f = 3, a = 9 over Q
        bt = bounded_transform(f, a)
        # bt.c = 3/10, bt.d = 10
        ```

    Raises:
        PreconditionFailedError: If a is not a Hermitian endomorphism of
            dom(f) with adjoint(f)·f ≤ a
    """
    if a.dom != f.dom or not a.is_endo:
        raise PreconditionFailedError(
            "bounded transform needs an endomorphism a of dom(f)"
        )
    if adjoint(a) != a:
        raise PreconditionFailedError("bounded transform needs a Hermitian a")
    if not le(compose(adjoint(f), f), a):
        raise PreconditionFailedError("adjoint(f)·f ≤ a does not hold")
    d = identity(f.dom) + a
    return BoundedTransform(compose(f, invert(d)), d)


def shrink(f: WMorphism) -> WMorphism:
    """The contraction f·(1 + f*f)^{-1}, the bounded transform with a = f*f."""
    return bounded_transform(f, compose(adjoint(f), f)).c


# ============================================================================
# Inverses of Schur complements
# ============================================================================


def schur_inverse(a: WMorphism, b: WMorphism, f: WMorphism) -> WMorphism:
    """
    (b − f·a^{-1}·f*)^{-1} by the Woodbury formula.

    Computes b^{-1} + b^{-1} f (a − f* b^{-1} f)^{-1} f* b^{-1}.

    Example:
        ```python
        # a = 2, b = 3, f = 1 over Q gives 2/5
        ```

    Raises:
        PreconditionFailedError: If a ≻ 0 on dom(f) or b ≻ 0 on cod(f)
            fails
        SingularError: If a − f*·b^{-1}·f is not invertible
    """
    if a.dom != f.dom or not a.is_endo or b.dom != f.cod or not b.is_endo:
        raise PreconditionFailedError(
            "schur_inverse needs a on dom(f) and b on cod(f)"
        )
    if adjoint(a) != a or not is_strictly_positive(a):
        raise PreconditionFailedError("a is not strictly positive")
    if adjoint(b) != b or not is_strictly_positive(b):
        raise PreconditionFailedError("b is not strictly positive")
    b_inv = invert(b)
    f_star = adjoint(f)
    inner = invert(a - compose(f_star, compose(b_inv, f)))
    correction = compose(
        b_inv, compose(f, compose(inner, compose(f_star, b_inv)))
    )
    return b_inv + correction


def scale_identity(X: WObject, q: Fraction | int) -> WMorphism:
    """The endomorphism q·1 of X."""
    return rational_scale(identity(X), q)
