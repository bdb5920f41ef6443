# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

"""
Exact linear algebra over the rationals on top of sympy matrices.

Vectors are column matrices. Empty bases and zero-dimensional spaces are
handled explicitly since sympy's row reduction does not accept them.
"""

import random
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from sympy import ImmutableMatrix, Matrix, Rational, eye, zeros

Vector = ImmutableMatrix


def _rational(value, where: str) -> Rational:
    if isinstance(value, float):
        raise ValueError(f"{where}: floating point entry {value!r} is not allowed, use an integer or 'num/den'")
    if isinstance(value, Fraction):
        return Rational(value.numerator, value.denominator)
    if isinstance(value, str):
        try:
            value = Fraction(value)
            return Rational(value.numerator, value.denominator)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"{where}: cannot parse {value!r} as a rational number")
    result = Rational(value)
    if not result.is_Rational:
        raise ValueError(f"{where}: {value!r} is not rational")
    return result


def rational_matrix(rows, cols: Optional[int] = None) -> ImmutableMatrix:
    """
    Build an immutable rational matrix from nested rows (or a sympy matrix).
    ``cols`` is needed only for matrices without rows.
    """
    if isinstance(rows, (Matrix, ImmutableMatrix)):
        entries = [[rows[i, j] for j in range(rows.cols)] for i in range(rows.rows)]
        cols = rows.cols
    else:
        entries = [list(row) for row in rows]
    if not entries:
        return ImmutableMatrix(zeros(0, cols or 0))
    width = len(entries[0])
    for i, row in enumerate(entries):
        if len(row) != width:
            raise ValueError(f"Row {i} has {len(row)} entries, expected {width}")
    return ImmutableMatrix([[_rational(x, f"entry ({i}, {j})") for j, x in enumerate(row)] for i, row in enumerate(entries)])


def vector(entries: Sequence) -> Vector:
    return ImmutableMatrix([[_rational(x, f"entry {i}")] for i, x in enumerate(entries)]) if entries else ImmutableMatrix(zeros(0, 1))


def standard_basis(dim: int) -> List[Vector]:
    return [ImmutableMatrix(eye(dim)[:, i]) for i in range(dim)]


def columns(vectors: Sequence[Vector], dim: int) -> Matrix:
    """Stack vectors of length ``dim`` as the columns of a dim × len(vectors) matrix."""
    result = zeros(dim, len(vectors))
    for j, v in enumerate(vectors):
        if v.rows != dim:
            raise ValueError(f"Vector {j} has length {v.rows}, expected {dim}")
        for i in range(dim):
            result[i, j] = v[i, 0]
    return result


def column_list(matrix) -> List[Vector]:
    return [ImmutableMatrix(matrix[:, j]) for j in range(matrix.cols)] if matrix.rows else [ImmutableMatrix(zeros(0, 1))] * matrix.cols


def hstack(*blocks) -> Matrix:
    rows = blocks[0].rows
    result = zeros(rows, sum(b.cols for b in blocks))
    offset = 0
    for block in blocks:
        if block.rows != rows:
            raise ValueError(f"Cannot stack a block with {block.rows} rows next to {rows} rows")
        for i in range(rows):
            for j in range(block.cols):
                result[i, offset + j] = block[i, j]
        offset += block.cols
    return result


def block_diag(a, b) -> ImmutableMatrix:
    result = zeros(a.rows + b.rows, a.cols + b.cols)
    for i in range(a.rows):
        for j in range(a.cols):
            result[i, j] = a[i, j]
    for i in range(b.rows):
        for j in range(b.cols):
            result[a.rows + i, a.cols + j] = b[i, j]
    return ImmutableMatrix(result)


def embed(v: Vector, offset: int, dim: int) -> Vector:
    """Place ``v`` into a zero vector of length ``dim`` starting at ``offset``."""
    result = zeros(dim, 1)
    for i in range(v.rows):
        result[offset + i, 0] = v[i, 0]
    return ImmutableMatrix(result)


def concat(a: Vector, b: Vector) -> Vector:
    return ImmutableMatrix(hstack(a.T, b.T).T) if a.rows + b.rows else ImmutableMatrix(zeros(0, 1))


def det(matrix) -> Rational:
    if matrix.rows != matrix.cols:
        raise ValueError(f"Determinant of a non-square {matrix.rows}x{matrix.cols} matrix")
    if matrix.rows == 0:
        return Rational(1)
    return Rational(Matrix(matrix).det(method="bareiss"))


def pivots(matrix) -> Tuple[int, ...]:
    """Pivot columns of the reduced row echelon form (first nonzero column, smallest row)."""
    if matrix.rows == 0 or matrix.cols == 0:
        return ()
    return tuple(Matrix(matrix).rref(simplify=False)[1])


def rank(matrix) -> int:
    return len(pivots(matrix))


def kernel_basis(M) -> List[Vector]:
    """Basis of ker M by exact row reduction, one vector per free column."""
    if M.cols == 0:
        return []
    if M.rows == 0:
        return standard_basis(M.cols)
    return [ImmutableMatrix(v) for v in Matrix(M).nullspace(simplify=False)]


def image_basis(M) -> List[Vector]:
    """Pivot columns of M, a basis of im M."""
    return [ImmutableMatrix(M[:, j]) for j in pivots(M)]


def complement_in(sub: Sequence[Vector], candidates: Sequence[Vector], dim: int) -> List[Vector]:
    """
    Greedily pick from ``candidates`` the vectors completing the independent
    family ``sub`` to a basis of span(sub + candidates).
    """
    if dim == 0 or not candidates:
        return []
    chosen = pivots(columns(list(sub) + list(candidates), dim))
    return [candidates[j - len(sub)] for j in chosen if j >= len(sub)]


def complete_basis(sub: Sequence[Vector], dim: int) -> List[Vector]:
    """Standard vectors completing ``sub`` to a basis of the whole space."""
    return complement_in(sub, standard_basis(dim), dim)


def coker_basis(M) -> List[Vector]:
    """Standard-vector representatives whose classes form a basis of target/im M."""
    return complete_basis(image_basis(M), M.rows)


def span_basis(vectors: Sequence[Vector], dim: int) -> List[Vector]:
    """Independent subfamily of ``vectors`` with the same span."""
    if dim == 0 or not vectors:
        return []
    return [vectors[j] for j in pivots(columns(vectors, dim))]


def particular_solution(A, b: Vector) -> Optional[Vector]:
    """Some x with A·x = b, free variables set to zero; None when there is none."""
    if A.rows == 0:
        return ImmutableMatrix(zeros(A.cols, 1))
    reduced, pivot_cols = Matrix(hstack(A, b)).rref(simplify=False)
    if A.cols in pivot_cols:
        return None
    x = zeros(A.cols, 1)
    for row, col in enumerate(pivot_cols):
        x[col, 0] = reduced[row, A.cols]
    return ImmutableMatrix(x)


def coordinates(basis: Sequence[Vector], vectors: Sequence[Vector], dim: int) -> Matrix:
    """Matrix T with columns(vectors) = columns(basis)·T; raises if a vector is outside the span."""
    A = columns(basis, dim)
    result = zeros(len(basis), len(vectors))
    for j, v in enumerate(vectors):
        x = particular_solution(A, v)
        if x is None:
            raise ValueError(f"Vector {j} does not lie in the span of the given basis")
        for i in range(len(basis)):
            result[i, j] = x[i, 0]
    return result


def random_invertible(rng: random.Random, size: int, bound: int = 3) -> Matrix:
    """Product of random triangular factors; the diagonal may be negative."""
    upper = zeros(size, size)
    lower = eye(size)
    for i in range(size):
        upper[i, i] = rng.choice([-2, -1, 1, 2])
        for j in range(i + 1, size):
            upper[i, j] = rng.randint(-bound, bound)
            lower[j, i] = rng.randint(-bound, bound)
    return lower * upper


def recombine(
        vectors: Sequence[Vector],
        dim: int,
        rng: Optional[random.Random] = None,
        extra: Sequence[Vector] = ()
        ) -> List[Vector]:
    """
    Random change of basis of ``vectors``, shifted by random combinations of
    ``extra``. Without ``rng`` the vectors are returned unchanged.
    """
    if rng is None or not vectors or dim == 0:
        return list(vectors)
    mixed = columns(vectors, dim) * random_invertible(rng, len(vectors))
    for j in range(mixed.cols):
        for e in extra:
            mixed[:, j] = mixed[:, j] + rng.randint(-2, 2) * e
    return column_list(mixed)


def random_matrix(rng: random.Random, rows: int, cols: int, rank_bound: Optional[int] = None, bound: int = 3) -> ImmutableMatrix:
    """Random integer matrix, of rank at most ``rank_bound`` when given."""
    if rank_bound is None:
        return ImmutableMatrix(Matrix(rows, cols, lambda i, j: rng.randint(-bound, bound)))
    left = Matrix(rows, rank_bound, lambda i, j: rng.randint(-bound, bound))
    right = Matrix(rank_bound, cols, lambda i, j: rng.randint(-bound, bound))
    return ImmutableMatrix(left * right)
