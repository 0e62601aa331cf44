"""Exact dense matrices and sparse vectors over Q(sqrt(d)).

Matrices are lists of rows of ``QuadScalar``.  Column ``j`` holds the image
of the j-th basis vector, so ``entry(k, j)`` is the coefficient of ``e_k``
in the image of ``e_j``.  Indices are 0-based throughout this module.

Vectors are sparse dicts ``{index: scalar}`` that never store zeros.
"""

from __future__ import annotations

from .scalars import ONE, ZERO, QuadScalar

Matrix = list  # list[list[QuadScalar]]
SparseVec = dict  # dict[int, QuadScalar]


class SingularMatrix(ValueError):
    """The matrix has no inverse."""


# -- sparse vectors -----------------------------------------------------


def vec_add_into(acc: SparseVec, vec: SparseVec, coeff: QuadScalar = ONE) -> None:
    """acc += coeff * vec, dropping entries that cancel to zero."""
    if not coeff:
        return
    for i, v in vec.items():
        s = acc.get(i, ZERO) + coeff * v
        if s:
            acc[i] = s
        else:
            acc.pop(i, None)


def vec_scale(vec: SparseVec, coeff: QuadScalar) -> SparseVec:
    if not coeff:
        return {}
    return {i: coeff * v for i, v in vec.items()}


def vec_equal(a: SparseVec, b: SparseVec) -> bool:
    return a == b


# -- dense matrices -----------------------------------------------------


def mat_from_rows(rows: list[list[QuadScalar]]) -> Matrix:
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise ValueError("matrix must be square")
    return [list(row) for row in rows]


def mat_identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_is_identity(m: Matrix) -> bool:
    return m == mat_identity(len(m))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            s = ZERO
            for k in range(n):
                if a[i][k] and b[k][j]:
                    s = s + a[i][k] * b[k][j]
            row.append(s)
        out.append(row)
    return out


def mat_transpose(a: Matrix) -> Matrix:
    n = len(a)
    return [[a[j][i] for j in range(n)] for i in range(n)]


def mat_column(a: Matrix, j: int) -> SparseVec:
    """Image of basis vector ``e_j`` as a sparse vector."""
    return {i: a[i][j] for i in range(len(a)) if a[i][j]}


def mat_columns(a: Matrix) -> list[SparseVec]:
    return [mat_column(a, j) for j in range(len(a))]


def mat_apply(a: Matrix, vec: SparseVec) -> SparseVec:
    out: SparseVec = {}
    for j, coeff in vec.items():
        vec_add_into(out, mat_column(a, j), coeff)
    return out


def mat_inverse(a: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination; raises SingularMatrix."""
    n = len(a)
    work = [list(row) + list(ident_row) for row, ident_row in zip(a, mat_identity(n))]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col]), None)
        if pivot is None:
            raise SingularMatrix(f"no pivot in column {col}")
        work[col], work[pivot] = work[pivot], work[col]
        inv = work[col][col].inverse()
        work[col] = [inv * x for x in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
    return [row[n:] for row in work]


def mat_invertible(a: Matrix) -> bool:
    try:
        mat_inverse(a)
    except SingularMatrix:
        return False
    return True
