"""
Exact elimination over division rings.

Matrices are row tuples of Scalars. Column counts are passed explicitly so
that 0×n and n×0 shapes keep their meaning.

Row operations multiply on the left only, so the solution sets of
A·x = b (x a column, scalars acting on the right) are preserved even in
the noncommutative quaternion ring. Row systems x·A = b are reduced to
column systems through the conjugate transpose, which reverses products.

Pivot rule: first nonzero entry in column order, scanning rows top-down.
"""

from collections.abc import Sequence
from dataclasses import dataclass

from starcat.errors import NoSolutionError, ShapeMismatchError, SingularError
from starcat.scalars import RingId, Scalar, one, zero

Row = tuple[Scalar, ...]
Matrix = tuple[Row, ...]


@dataclass(frozen=True)
class Echelon:
    """Reduced row echelon form with its pivot columns."""

    rows: Matrix
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)


def zeros(nrows: int, ncols: int, ring: RingId) -> Matrix:
    z = zero(ring)
    return tuple(tuple(z for _ in range(ncols)) for _ in range(nrows))


def eye(n: int, ring: RingId) -> Matrix:
    z, u = zero(ring), one(ring)
    return tuple(
        tuple(u if i == j else z for j in range(n)) for i in range(n)
    )


def matmul(
    a: Sequence[Sequence[Scalar]],
    b: Sequence[Sequence[Scalar]],
    inner: int,
    ncols: int,
    ring: RingId,
) -> Matrix:
    """Product of an m×inner and an inner×ncols matrix."""
    z = zero(ring)
    result = []
    for row in a:
        out = []
        for j in range(ncols):
            total = z
            for k in range(inner):
                left = row[k]
                if left.is_zero:
                    continue
                right = b[k][j]
                if right.is_zero:
                    continue
                total = total + left * right
            out.append(total)
        result.append(tuple(out))
    return tuple(result)


def conj_transpose(
    rows: Sequence[Sequence[Scalar]], ncols: int
) -> Matrix:
    """Entrywise involution followed by transposition."""
    return tuple(
        tuple(row[j].star() for row in rows) for j in range(ncols)
    )


def row_reduce(rows: Sequence[Sequence[Scalar]], ncols: int) -> Echelon:
    """
    Gauss–Jordan elimination on the first ncols columns.

    Extra columns beyond ncols (an augmented right-hand side) are carried
    along but never pivoted on.
    """
    work = [list(row) for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(work):
            break
        pivot_row = next(
            (i for i in range(r, len(work)) if not work[i][c].is_zero),
            None,
        )
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        scale = work[r][c].inverse()
        work[r] = [scale * x for x in work[r]]
        for i in range(len(work)):
            if i == r or work[i][c].is_zero:
                continue
            factor = work[i][c]
            work[i] = [x - factor * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    return Echelon(tuple(tuple(row) for row in work), tuple(pivots))


def rank(rows: Sequence[Sequence[Scalar]], ncols: int) -> int:
    return row_reduce(rows, ncols).rank


def nullspace(
    rows: Sequence[Sequence[Scalar]], ncols: int, ring: RingId
) -> list[Row]:
    """
    Basis of {x : A·x = 0} as column vectors.

    Each basis vector is right-scaled so that its first nonzero entry is 1.
    """
    echelon = row_reduce(rows, ncols)
    z, u = zero(ring), one(ring)
    basis: list[Row] = []
    pivot_set = set(echelon.pivots)
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector = [z] * ncols
        vector[free] = u
        for k, p in enumerate(echelon.pivots):
            vector[p] = -echelon.rows[k][free]
        lead = next(x for x in vector if not x.is_zero)
        if lead != u:
            lead_inv = lead.inverse()
            vector = [x * lead_inv for x in vector]
        basis.append(tuple(vector))
    return basis


def solve(
    a: Sequence[Sequence[Scalar]],
    b: Sequence[Sequence[Scalar]],
    ncols: int,
    rhs_cols: int,
    ring: RingId,
) -> Matrix:
    """
    A particular solution X of A·X = B (free variables set to zero).

    Args:
        a: m×ncols coefficient matrix
        b: m×rhs_cols right-hand side
        ncols: Number of unknown rows of X
        rhs_cols: Number of columns of B
        ring: Scalar ring

    Raises:
        ShapeMismatchError: If A and B have different row counts
        NoSolutionError: If the system is inconsistent
    """
    if len(a) != len(b):
        raise ShapeMismatchError(
            f"cannot solve: {len(a)} equations but {len(b)} right-hand rows"
        )
    augmented = [list(ra) + list(rb) for ra, rb in zip(a, b)]
    echelon = row_reduce(augmented, ncols)
    for row in echelon.rows[echelon.rank :]:
        if any(not x.is_zero for x in row[ncols:]):
            raise NoSolutionError("linear system is inconsistent")
    solution = [list(r) for r in zeros(ncols, rhs_cols, ring)]
    for k, p in enumerate(echelon.pivots):
        solution[p] = list(echelon.rows[k][ncols:])
    return tuple(tuple(row) for row in solution)


def solve_left(
    a: Sequence[Sequence[Scalar]],
    b: Sequence[Sequence[Scalar]],
    ncols: int,
    ring: RingId,
) -> Matrix:
    """
    A particular solution X of X·A = B.

    Args:
        a: m×ncols matrix
        b: k×ncols right-hand side
        ncols: Column count shared by A and B
        ring: Scalar ring

    Returns:
        k×m matrix X
    """
    nrows = len(a)
    adjoint_x = solve(
        conj_transpose(a, ncols),
        conj_transpose(b, ncols),
        nrows,
        len(b),
        ring,
    )
    return conj_transpose(adjoint_x, len(b))


def inverse(a: Sequence[Sequence[Scalar]], n: int, ring: RingId) -> Matrix:
    """
    Two-sided inverse of a square matrix.

    Raises:
        ShapeMismatchError: If a is not n×n
        SingularError: If a is not invertible
    """
    if len(a) != n or any(len(row) != n for row in a):
        raise ShapeMismatchError("only square matrices can be inverted")
    augmented = [list(row) + list(e) for row, e in zip(a, eye(n, ring))]
    echelon = row_reduce(augmented, n)
    if echelon.rank != n:
        raise SingularError(f"matrix has rank {echelon.rank} < {n}")
    return tuple(tuple(row[n:]) for row in echelon.rows)
