"""
Exact dense linear algebra over the cyclotomic scalars.

Matrices are lists of rows. Everything here is Gaussian elimination with
exact pivots; sizes stay small (coefficient systems and module matrices).
"""

from __future__ import annotations

from typing import Any, Sequence

from downup_engine.poly.univariate import as_scalar
from downup_engine.scalars import CyclotomicScalar

Scalar = CyclotomicScalar
Matrix = list[list[Scalar]]

ZERO = CyclotomicScalar.zero()
ONE = CyclotomicScalar.one()


def to_matrix(rows: Sequence[Sequence[Any]]) -> Matrix:
    return [[as_scalar(v) for v in row] for row in rows]


def zeros(rows: int, cols: int) -> Matrix:
    return [[ZERO] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def rref(matrix: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    work = [list(row) for row in matrix]
    rows = len(work)
    cols = len(work[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if work[i][c]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = work[r][c].inverse()
        work[r] = [v * inv for v in work[r]]
        for i in range(rows):
            if i != r and work[i][c]:
                factor = work[i][c]
                work[i] = [a - factor * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return work, pivots


def rank(matrix: Matrix) -> int:
    return len(rref(matrix)[1])


def is_invertible(matrix: Matrix) -> bool:
    return len(matrix) == (len(matrix[0]) if matrix else 0) and rank(matrix) == len(matrix)


def nullspace(matrix: Matrix, cols: int | None = None) -> list[list[Scalar]]:
    """Basis of {v : matrix v = 0}; one vector per free column, that entry set to 1."""
    if cols is None:
        cols = len(matrix[0]) if matrix else 0
    if not matrix:
        return [[ONE if k == c else ZERO for k in range(cols)] for c in range(cols)]
    reduced, pivots = rref(matrix)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * cols
        v[f] = ONE
        for row, p in enumerate(pivots):
            v[p] = -reduced[row][f]
        basis.append(v)
    return basis


def solve(matrix: Matrix, rhs: Sequence[Scalar]) -> list[Scalar] | None:
    """
    A particular solution of matrix x = rhs with every free variable zero,
    or None when the system is inconsistent.
    """
    cols = len(matrix[0]) if matrix else 0
    augmented = [list(row) + [as_scalar(b)] for row, b in zip(matrix, rhs)]
    reduced, pivots = rref(augmented)
    if cols in pivots:
        return None
    x = [ZERO] * cols
    for row, p in enumerate(pivots):
        x[p] = reduced[row][cols]
    return x


def matmul(a: Matrix, b: Matrix) -> Matrix:
    inner = len(b)
    cols = len(b[0]) if b else 0
    result = []
    for row in a:
        out = []
        for j in range(cols):
            total = ZERO
            for k in range(inner):
                if row[k] and b[k][j]:
                    total = total + row[k] * b[k][j]
            out.append(total)
        result.append(out)
    return result


def matadd(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matsub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matscale(c: Any, a: Matrix) -> Matrix:
    c = as_scalar(c)
    return [[c * x for x in row] for row in a]


def matpow(a: Matrix, exponent: int) -> Matrix:
    result = identity(len(a))
    base = a
    while exponent:
        if exponent & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        exponent >>= 1
    return result


def is_zero_matrix(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


def format_matrix(a: Matrix) -> list[list[str]]:
    return [[str(x) for x in row] for row in a]
