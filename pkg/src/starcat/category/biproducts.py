"""
Orthonormal biproducts and block-matrix calculus.

The direct sum of (m, α) and (n, β) is (m + n, α ++ β); injections are the
block embeddings and the projections are their adjoints, so every
biproduct built here is orthonormal.
"""

from collections.abc import Sequence
from dataclasses import dataclass

from starcat.category.objects import (
    WMorphism,
    WObject,
    adjoint,
    compose,
    identity,
    zero_morphism,
)
from starcat.errors import RingMismatchError, ShapeMismatchError
from starcat.scalars import one, zero


@dataclass(frozen=True)
class Biproduct:
    """
    A binary orthonormal biproduct X ⊕ Y.

    Attributes:
        apex: The object X ⊕ Y
        i1: Injection X → apex
        i2: Injection Y → apex
        p1: Projection apex → X, equal to adjoint(i1)
        p2: Projection apex → Y, equal to adjoint(i2)
    """

    apex: WObject
    i1: WMorphism
    i2: WMorphism
    p1: WMorphism
    p2: WMorphism


def direct_sum(*objects: WObject) -> WObject:
    """
    Concatenate the weights of one or more objects.

    Raises:
        ShapeMismatchError: If no object is given
        RingMismatchError: If the objects live over different rings
    """
    if not objects:
        raise ShapeMismatchError("direct_sum needs at least one object")
    ring = objects[0].ring
    if any(X.ring is not ring for X in objects):
        raise RingMismatchError("cannot sum objects over different rings")
    return WObject(ring, tuple(w for X in objects for w in X.weights))


def injections(*objects: WObject) -> list[WMorphism]:
    """The block embeddings X_k → X_1 ⊕ ... ⊕ X_n."""
    apex = direct_sum(*objects)
    z, u = zero(apex.ring), one(apex.ring)
    result = []
    offset = 0
    for X in objects:
        rows = tuple(
            tuple(u if i == offset + j else z for j in range(X.dim))
            for i in range(apex.dim)
        )
        result.append(WMorphism(X, apex, rows))
        offset += X.dim
    return result


def projections(*objects: WObject) -> list[WMorphism]:
    return [adjoint(i) for i in injections(*objects)]


def biproduct(X: WObject, Y: WObject) -> Biproduct:
    """
    The orthonormal biproduct of two objects.

    Example:
        ```python
        # (1,(2)) ⊕ (1,(3)) = (2,(2,3)), adjoint(i1) = [1 0]
        b = biproduct(X, Y)
        assert compose(b.p1, b.i1) == identity(X)
        ```
    """
    i1, i2 = injections(X, Y)
    return Biproduct(i1.cod, i1, i2, adjoint(i1), adjoint(i2))


def pair(*morphisms: WMorphism) -> WMorphism:
    """
    The column block [f_1; ...; f_n]: A → Y_1 ⊕ ... ⊕ Y_n.

    Raises:
        ShapeMismatchError: If the morphisms do not share a domain
    """
    if not morphisms:
        raise ShapeMismatchError("pair needs at least one morphism")
    dom = morphisms[0].dom
    if any(f.dom != dom for f in morphisms):
        raise ShapeMismatchError("pair needs morphisms with a common domain")
    cod = direct_sum(*(f.cod for f in morphisms))
    return WMorphism(dom, cod, tuple(row for f in morphisms for row in f.rows))


def copair(*morphisms: WMorphism) -> WMorphism:
    """
    The row block [f_1 ... f_n]: X_1 ⊕ ... ⊕ X_n → B.

    Raises:
        ShapeMismatchError: If the morphisms do not share a codomain
    """
    if not morphisms:
        raise ShapeMismatchError("copair needs at least one morphism")
    cod = morphisms[0].cod
    if any(f.cod != cod for f in morphisms):
        raise ShapeMismatchError(
            "copair needs morphisms with a common codomain"
        )
    dom = direct_sum(*(f.dom for f in morphisms))
    rows = tuple(
        tuple(x for f in morphisms for x in f.rows[i])
        for i in range(cod.dim)
    )
    return WMorphism(dom, cod, rows)


def block(blocks: Sequence[Sequence[WMorphism]]) -> WMorphism:
    """
    Assemble a block matrix of morphisms.

    Row i of blocks shares a codomain, column j shares a domain; the
    result maps the sum of the column domains to the sum of the row
    codomains.
    """
    if not blocks or not blocks[0]:
        raise ShapeMismatchError("block needs a nonempty grid")
    width = len(blocks[0])
    if any(len(row) != width for row in blocks):
        raise ShapeMismatchError("block rows have different lengths")
    return pair(*(copair(*row) for row in blocks))


def block_diagonal(*morphisms: WMorphism) -> WMorphism:
    """The direct sum f_1 ⊕ ... ⊕ f_n of morphisms."""
    grid = [
        [
            f if j == i else zero_morphism(g.dom, f.cod)
            for j, g in enumerate(morphisms)
        ]
        for i, f in enumerate(morphisms)
    ]
    return block(grid)


def diagonal(X: WObject, n: int = 2) -> WMorphism:
    """Δ = [1; ...; 1]: X → X ⊕ ... ⊕ X."""
    return pair(*(identity(X) for _ in range(n)))


def codiagonal(X: WObject, n: int = 2) -> WMorphism:
    """∇ = [1 ... 1]: X ⊕ ... ⊕ X → X."""
    return copair(*(identity(X) for _ in range(n)))


def sum_via_biproduct(f: WMorphism, g: WMorphism) -> WMorphism:
    """f + g computed as ∇·(f ⊕ g)·Δ."""
    return compose(
        codiagonal(f.cod), compose(block_diagonal(f, g), diagonal(f.dom))
    )
