"""
Weighted objects and the matrices between them.

An object (m, α) is a list of m nonzero positive Hermitian weights; a
morphism (m, α) → (n, β) is an n×m matrix acting on columns. The inner
product on (m, α) is

    ⟨x, y⟩ = x_1* α_1^{-1} y_1 + ... + x_m* α_m^{-1} y_m

and the involution is (M*)_{jk} = α_j M_{kj}* β_k^{-1}.

Example:
    ```python
    from fractions import Fraction
    from starcat.category import WMorphism, WObject, adjoint
    from starcat.scalars import Rational, RingId

    X = WObject.unweighted(RingId.RATIONAL, 1)
    f = WMorphism(X, X, ((Rational(Fraction(1, 2)),),))
    assert adjoint(f) == f
    ```
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from starcat.category.linalg import Matrix, conj_transpose, eye, matmul
from starcat.category.linalg import zeros as zero_matrix
from starcat.errors import (
    NotHermitianError,
    PreconditionFailedError,
    RingMismatchError,
    ShapeMismatchError,
    ZeroInputError,
)
from starcat.scalars import RingId, Scalar, one, scalar_type, zero

Column = tuple[Scalar, ...]


def _check_entries(ring: RingId, entries: Iterable[Scalar]) -> None:
    expected = scalar_type(ring)
    for entry in entries:
        if type(entry) is not expected:
            raise RingMismatchError(
                f"expected {ring.value} scalars, got {entry!r}"
            )


# ============================================================================
# Objects
# ============================================================================


@dataclass(frozen=True)
class WObject:
    """
    A weighted dimension (m, α).

    Attributes:
        ring: Scalar ring of the object
        weights: The weights α_1, ..., α_m, each nonzero, Hermitian and
            positive

    Raises:
        RingMismatchError: If a weight lives in another ring
        NotHermitianError: If a weight is not Hermitian
        ZeroInputError: If a weight is zero
        PreconditionFailedError: If a weight is negative
    """

    ring: RingId
    weights: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "ring", RingId(self.ring))
        object.__setattr__(self, "weights", tuple(self.weights))
        _check_entries(self.ring, self.weights)
        for k, weight in enumerate(self.weights):
            if not weight.is_hermitian():
                raise NotHermitianError(
                    f"weight {k} ({weight}) is not Hermitian"
                )
            if weight.is_zero:
                raise ZeroInputError(f"weight {k} is zero")
            if not weight.is_positive():
                raise PreconditionFailedError(
                    f"weight {k} ({weight}) is not positive"
                )

    @classmethod
    def unweighted(cls, ring: RingId, dim: int) -> "WObject":
        """The object (dim, (1, ..., 1))."""
        return cls(ring, tuple(one(ring) for _ in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.weights)

    def basis_column(self, k: int) -> Column:
        """The standard basis vector e_k."""
        z, u = zero(self.ring), one(self.ring)
        return tuple(u if i == k else z for i in range(self.dim))


def zero_object(ring: RingId) -> WObject:
    """The object of dimension 0, both initial and terminal."""
    return WObject(ring, ())


# ============================================================================
# Morphisms
# ============================================================================


@dataclass(frozen=True)
class WMorphism:
    """
    A matrix between weighted objects, dom → cod.

    The matrix has cod.dim rows and dom.dim columns. Equality is structural
    on the canonical scalars, so two morphisms are equal iff their objects
    and entries are.
    """

    dom: WObject
    cod: WObject
    rows: Matrix

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if self.dom.ring is not self.cod.ring:
            raise RingMismatchError(
                f"domain ring {self.dom.ring.value} differs from codomain "
                f"ring {self.cod.ring.value}"
            )
        if len(rows) != self.cod.dim or any(
            len(row) != self.dom.dim for row in rows
        ):
            raise ShapeMismatchError(
                f"matrix shape does not match {self.dom.dim} → "
                f"{self.cod.dim}"
            )
        for row in rows:
            _check_entries(self.ring, row)

    @property
    def ring(self) -> RingId:
        return self.dom.ring

    @property
    def shape(self) -> tuple[int, int]:
        return self.cod.dim, self.dom.dim

    @property
    def is_endo(self) -> bool:
        return self.dom == self.cod

    def column(self, k: int) -> Column:
        return tuple(row[k] for row in self.rows)

    def columns(self) -> list[Column]:
        return [self.column(k) for k in range(self.dom.dim)]

    def apply(self, x: Sequence[Scalar]) -> Column:
        """The column f·x."""
        if len(x) != self.dom.dim:
            raise ShapeMismatchError(
                f"column of length {len(x)} does not fit domain of "
                f"dimension {self.dom.dim}"
            )
        product = matmul(
            self.rows, [(v,) for v in x], self.dom.dim, 1, self.ring
        )
        return tuple(row[0] for row in product)

    def is_zero(self) -> bool:
        return all(x.is_zero for row in self.rows for x in row)

    def __matmul__(self, other: "WMorphism") -> "WMorphism":
        return compose(self, other)

    def __add__(self, other: "WMorphism") -> "WMorphism":
        return add(self, other)

    def __sub__(self, other: "WMorphism") -> "WMorphism":
        return add(self, negate(other))

    def __neg__(self) -> "WMorphism":
        return negate(self)

    def adjoint(self) -> "WMorphism":
        return adjoint(self)


def from_columns(
    dom: WObject, cod: WObject, columns: Sequence[Sequence[Scalar]]
) -> WMorphism:
    """Build dom → cod from one column per basis vector of dom."""
    if len(columns) != dom.dim:
        raise ShapeMismatchError(
            f"{len(columns)} columns given for a domain of dimension "
            f"{dom.dim}"
        )
    return WMorphism(dom, cod, _transpose(columns, cod.dim))


def _transpose(
    columns: Sequence[Sequence[Scalar]], nrows: int
) -> Matrix:
    return tuple(
        tuple(column[i] for column in columns) for i in range(nrows)
    )


def _check_same_ring(*morphisms: WMorphism) -> None:
    rings = {f.ring for f in morphisms}
    if len(rings) > 1:
        raise RingMismatchError(
            "morphisms over different rings: "
            + ", ".join(sorted(r.value for r in rings))
        )


# ============================================================================
# Category structure
# ============================================================================


def identity(X: WObject) -> WMorphism:
    return WMorphism(X, X, eye(X.dim, X.ring))


def zero_morphism(X: WObject, Y: WObject) -> WMorphism:
    """The zero morphism X → Y."""
    if X.ring is not Y.ring:
        raise RingMismatchError("zero morphism between different rings")
    return WMorphism(X, Y, zero_matrix(Y.dim, X.dim, X.ring))


def compose(g: WMorphism, f: WMorphism) -> WMorphism:
    """
    The composite g∘f.

    Raises:
        RingMismatchError: If f and g live over different rings
        ShapeMismatchError: If cod(f) != dom(g)
    """
    _check_same_ring(f, g)
    if f.cod != g.dom:
        raise ShapeMismatchError(
            f"cannot compose: codomain of dimension {f.cod.dim} does not "
            f"match domain of dimension {g.dom.dim}"
        )
    rows = matmul(g.rows, f.rows, g.dom.dim, f.dom.dim, f.ring)
    return WMorphism(f.dom, g.cod, rows)


def add(f: WMorphism, g: WMorphism) -> WMorphism:
    _check_same_ring(f, g)
    if f.dom != g.dom or f.cod != g.cod:
        raise ShapeMismatchError("can only add parallel morphisms")
    rows = tuple(
        tuple(a + b for a, b in zip(rf, rg))
        for rf, rg in zip(f.rows, g.rows)
    )
    return WMorphism(f.dom, f.cod, rows)


def negate(f: WMorphism) -> WMorphism:
    rows = tuple(tuple(-a for a in row) for row in f.rows)
    return WMorphism(f.dom, f.cod, rows)


def rational_scale(f: WMorphism, q: Fraction | int) -> WMorphism:
    """Entrywise multiplication by a rational number."""
    factor = Fraction(q)
    rows = tuple(tuple(a.scale(factor) for a in row) for row in f.rows)
    return WMorphism(f.dom, f.cod, rows)


# ============================================================================
# Involution and inner products
# ============================================================================


def adjoint(f: WMorphism) -> WMorphism:
    """
    The weighted adjoint f*: cod(f) → dom(f).

    Entry (j, k) is α_j · M_{kj}* · β_k^{-1}, where α are the domain and β
    the codomain weights. Over all-ones weights this is the conjugate
    transpose.

    Example:
        ```python
        # f = [m1 m2]: (2,(1,2)) → (1,(3))
        # adjoint(f) = [m1*·(1/3); 2·m2*·(1/3)]
        ```
    """
    alpha, beta = f.dom.weights, f.cod.weights
    beta_inv = [b.inverse() for b in beta]
    transposed = conj_transpose(f.rows, f.dom.dim)
    rows = tuple(
        tuple(
            alpha[j] * entry * beta_inv[k] for k, entry in enumerate(row)
        )
        for j, row in enumerate(transposed)
    )
    return WMorphism(f.cod, f.dom, rows)


def inner_product(
    x: Sequence[Scalar], y: Sequence[Scalar], X: WObject
) -> Scalar:
    """
    ⟨x, y⟩ on X, conjugate-linear in x and linear in y.

    Raises:
        ShapeMismatchError: If x or y does not have length X.dim
    """
    if len(x) != X.dim or len(y) != X.dim:
        raise ShapeMismatchError(
            f"inner product on an object of dimension {X.dim} needs "
            f"columns of that length"
        )
    total = zero(X.ring)
    for a, w, b in zip(x, X.weights, y):
        if a.is_zero or b.is_zero:
            continue
        total = total + a.star() * w.inverse() * b
    return total


def adjoint_by_parseval(f: WMorphism) -> WMorphism:
    """
    The adjoint reconstructed from inner products alone.

    Uses the orthogonal standard basis e_k of dom(f):
    f*·y = Σ e_k ⟨e_k, e_k⟩^{-1} ⟨f·e_k, y⟩. Serves as an independent
    oracle for adjoint().
    """
    X, Y = f.dom, f.cod
    columns = []
    for m in range(Y.dim):
        y = Y.basis_column(m)
        column = []
        for k in range(X.dim):
            e_k = X.basis_column(k)
            norm = inner_product(e_k, e_k, X)
            column.append(
                norm.inverse() * inner_product(f.apply(e_k), y, Y)
            )
        columns.append(tuple(column))
    return from_columns(Y, X, columns)


def hermitian(f: WMorphism) -> bool:
    """True iff f is an endomorphism with f* = f."""
    return f.is_endo and adjoint(f) == f
