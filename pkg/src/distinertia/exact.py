"""Small helpers for exact rational matrices.

Matrices are tuples of row tuples holding :class:`fractions.Fraction` entries.
They are immutable, hashable and compare entry-for-entry with ``==``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

Matrix = tuple[tuple[Fraction, ...], ...]


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating-point values are not accepted as exact input")
    return Fraction(x)


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    """Convert nested sequences (ints, Fractions, ``"p/q"`` strings) to a square exact matrix."""
    out = tuple(tuple(to_fraction(x) for x in row) for row in rows)
    n = len(out)
    if any(len(row) != n for row in out):
        raise ValueError("matrix must be square")
    return out


def is_symmetric(m: Matrix) -> bool:
    n = len(m)
    return all(m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n))


def zeros(n: int) -> list[list[Fraction]]:
    return [[Fraction(0)] * n for _ in range(n)]


def principal_submatrix(m: Matrix, indices: Sequence[int]) -> Matrix:
    """Rows and columns ``indices`` (0-based), in the given order."""
    return tuple(tuple(m[i][j] for j in indices) for i in indices)


def scale(m: Matrix, c) -> Matrix:
    c = to_fraction(c)
    return tuple(tuple(c * x for x in row) for row in m)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n, k = len(a), len(b[0]) if b else 0
    return tuple(
        tuple(sum((a[i][t] * b[t][j] for t in range(len(b))), Fraction(0)) for j in range(k))
        for i in range(n)
    )


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def determinant(m: Matrix) -> Fraction:
    """Determinant by fraction Gaussian elimination with first-nonzero row pivoting."""
    a = [list(row) for row in m]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        p = a[col][col]
        det *= p
        for r in range(col + 1, n):
            f = a[r][col]
            if f:
                f /= p
                row_r, row_c = a[r], a[col]
                for c in range(col + 1, n):
                    row_r[c] -= f * row_c[c]
    return det


def solve(a: Matrix, b: Matrix) -> Matrix:
    """Solve ``a x = b`` exactly for square nonsingular ``a``; ``b`` may have several columns."""
    n = len(a)
    k = len(b[0]) if b else 0
    aug = [list(a[i]) + list(b[i]) for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:n + k]) for row in aug)


def to_float(m: Matrix) -> np.ndarray:
    return np.array([[float(x) for x in row] for row in m], dtype=np.float64).reshape(len(m), len(m))


def max_abs(m: Matrix) -> Fraction:
    return max((abs(x) for row in m for x in row), default=Fraction(0))


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def to_json(m: Matrix) -> list[list[str]]:
    return [[format_rational(x) for x in row] for row in m]
