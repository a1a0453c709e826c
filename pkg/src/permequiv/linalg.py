"""Dense exact matrices and Gaussian elimination.

Pivoting is always "first nonzero entry, scanning top to bottom", so every
transform produced here is deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .algebra import Field


class SingularMatrixError(ValueError):
    pass


class NotACodewordError(ValueError):
    pass


@dataclass(frozen=True)
class Matrix:
    field: Field
    rows: tuple
    ncols: int = dc_field(default=-1)

    def __post_init__(self):
        rows = tuple(tuple(self.field(x) for x in r) for r in self.rows)
        ncols = self.ncols if self.ncols >= 0 else (len(rows[0]) if rows else 0)
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "ncols", ncols)

    @classmethod
    def identity(cls, F: Field, n: int) -> Matrix:
        return cls(F, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, F: Field, k: int, n: int) -> Matrix:
        return cls(F, [[0] * n for _ in range(k)], n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    @property
    def T(self) -> Matrix:
        return Matrix(self.field, [self.col(j) for j in range(self.ncols)], self.nrows)

    def __matmul__(self, other: Matrix) -> Matrix:
        return matmul(self, other)

    def select_columns(self, cols: Sequence[int]) -> Matrix:
        return Matrix(self.field, [[r[j] for j in cols] for r in self.rows], len(cols))

    def hstack(self, other: Matrix) -> Matrix:
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        return Matrix(self.field, [a + b for a, b in zip(self.rows, other.rows)],
                      self.ncols + other.ncols)

    def tolist(self) -> list[list]:
        return [list(r) for r in self.rows]

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows)


def _check_field(*ms: Matrix) -> Field:
    F = ms[0].field
    if any(m.field != F for m in ms):
        raise ValueError("field mismatch")
    return F


def matmul(A: Matrix, B: Matrix) -> Matrix:
    F = _check_field(A, B)
    if A.ncols != B.nrows:
        raise ValueError(f"shape mismatch {A.shape} @ {B.shape}")
    cols = [B.col(j) for j in range(B.ncols)]
    out = []
    for r in A.rows:
        out.append([_dot(F, r, c) for c in cols])
    return Matrix(F, out, B.ncols)


def _dot(F: Field, a: Sequence, b: Sequence):
    s = sum(x * y for x, y in zip(a, b))
    return s % F.p if F.p else s


def vecmat(x: Sequence, A: Matrix) -> tuple:
    """Row vector times matrix."""
    if len(x) != A.nrows:
        raise ValueError("shape mismatch")
    F = A.field
    x = F.vec(x)
    return tuple(_dot(F, x, A.col(j)) for j in range(A.ncols))


def _eliminate(F: Field, rows: list[list], reduced: bool) -> list[int]:
    """In-place echelon form; returns pivot columns.  Rows are plain lists."""
    pivots = []
    r = 0
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(x, inv) for x in rows[r]]
        piv = rows[r]
        targets = range(nrows) if reduced else range(r + 1, nrows)
        for i in targets:
            if i == r or rows[i][c] == 0:
                continue
            f = rows[i][c]
            rows[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(rows[i], piv)]
        pivots.append(c)
        r += 1
    return pivots


def rref(A: Matrix) -> tuple[Matrix, Matrix, list[int]]:
    """Reduced row echelon form R, invertible transform T with T A = R, pivots."""
    F = A.field
    k = A.nrows
    aug = [list(r) + [1 if i == j else 0 for j in range(k)] for i, r in enumerate(A.rows)]
    pivots = [c for c in _eliminate(F, aug, reduced=True) if c < A.ncols]
    R = Matrix(F, [r[: A.ncols] for r in aug], A.ncols)
    T = Matrix(F, [r[A.ncols:] for r in aug], k)
    return R, T, pivots


def rank(A: Matrix) -> int:
    if A.nrows == 0:
        return 0
    rows = [list(r) for r in A.rows]
    return len(_eliminate(A.field, rows, reduced=False))


def inverse(A: Matrix) -> Matrix:
    if A.nrows != A.ncols:
        raise ValueError("inverse of a non-square matrix")
    R, T, pivots = rref(A)
    if len(pivots) != A.nrows:
        raise SingularMatrixError("matrix is singular")
    return T


def is_invertible(A: Matrix) -> bool:
    return A.nrows == A.ncols and rank(A) == A.nrows


def kernel_basis(A: Matrix) -> list[tuple]:
    """Basis of {x : A x^T = 0}."""
    F = A.field
    n = A.ncols
    if A.nrows == 0:
        return [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    R, _, pivots = rref(A)
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        x = [F.zero] * n
        x[f] = F.one
        for r, pc in enumerate(pivots):
            x[pc] = F.neg(R[r, f])
        basis.append(tuple(x))
    return basis


def left_kernel_basis(A: Matrix) -> list[tuple]:
    """Basis of {x : x A = 0}."""
    return kernel_basis(A.T)


@dataclass(frozen=True)
class StandardForm:
    """S_G G P_G = [I_k | A]."""

    S: Matrix
    P: Matrix
    canonical: Matrix
    column_order: tuple[int, ...]

    @property
    def A(self) -> Matrix:
        k = self.canonical.nrows
        return self.canonical.select_columns(range(k, self.canonical.ncols))


def column_order_matrix(F: Field, order: Sequence[int]) -> Matrix:
    """P with (M P)[:, j] = M[:, order[j]] for every M."""
    n = len(order)
    rows = [[0] * n for _ in range(n)]
    for j, src in enumerate(order):
        rows[src][j] = 1
    return Matrix(F, rows, n)


def standard_form(G: Matrix) -> StandardForm:
    k, n = G.shape
    R, T, pivots = rref(G)
    if len(pivots) != k:
        raise SingularMatrixError("generator matrix is not of full row rank")
    order = tuple(pivots) + tuple(j for j in range(n) if j not in pivots)
    P = column_order_matrix(G.field, order)
    return StandardForm(T, P, R.select_columns(order), order)


def parity_check(G: Matrix) -> Matrix:
    """(n-k) x n matrix H P_G^T whose kernel is the row space of G."""
    F = G.field
    k, n = G.shape
    sf = standard_form(G)
    A = sf.A
    H = [[F.neg(A[i, j]) for i in range(k)] + [1 if t == j else 0 for t in range(n - k)]
         for j in range(n - k)]
    H = Matrix(F, H, n)
    return matmul(H, sf.P.T) if n > k else Matrix(F, [], n)


def decode(G: Matrix, y: Sequence) -> tuple:
    """The unique x with x G = y, read off the echelon form of G augmented by y.

    Row i of G carries the indeterminate r_i and the appended row y carries
    the indeterminate y; both are tracked as coefficient columns.  The row that
    reduces to zero holds the relation c*y + a_1 r_1 + ... + a_k r_k = 0, so
    x_i = -a_i / c.
    """
    F = G.field
    k, n = G.shape
    y = F.vec(y)
    if len(y) != n:
        raise ValueError("length mismatch")
    aug = [list(G.rows[i]) + [1 if t == i else 0 for t in range(k)] + [0] for i in range(k)]
    aug.append(list(y) + [0] * k + [1])
    # only the first n columns may pivot
    rows = aug
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, k + 1) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r]
        inv = F.inv(piv[c])
        for i in range(r + 1, k + 1):
            if rows[i][c] != 0:
                f = F.mul(rows[i][c], inv)
                rows[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(rows[i], piv)]
        r += 1
    for row in rows[r:]:
        c = row[-1]
        if c != 0:
            inv = F.inv(c)
            return tuple(F.neg(F.mul(a, inv)) for a in row[n:n + k])
    raise NotACodewordError("vector is not in the row space of the generator")


def solve_square(A: Matrix, b: Sequence) -> tuple:
    """x with A x^T = b for square invertible A."""
    F = A.field
    aug = [list(r) + [F(bi)] for r, bi in zip(A.rows, b)]
    pivots = _eliminate(F, aug, reduced=True)
    if len(pivots) != A.ncols or pivots[-1] >= A.ncols:
        raise SingularMatrixError("system is singular")
    return tuple(r[-1] for r in aug)
