"""Inertia of symmetric matrices.

:func:`exact_inertia` is the ground truth: symmetric elimination over the
rationals. :func:`float_eigenvalues` is an independent floating-point oracle
(cyclic Jacobi) used only for cross-checking.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _kernels
from .congruence import NormalForm
from .errors import ConvergenceError, NotSymmetricError, SingularBlockError, TheoremViolation
from .exact import Matrix, as_matrix, determinant, is_symmetric, matmul, solve

try:
    from gmpy2 import mpq as _rational
except ImportError:  # pragma: no cover
    _rational = Fraction


@dataclass(frozen=True, order=True)
class Inertia:
    plus: int
    zero: int
    minus: int

    def __post_init__(self):
        if min(self.plus, self.zero, self.minus) < 0:
            raise ValueError("inertia counts must be nonnegative")

    @property
    def n(self) -> int:
        return self.plus + self.zero + self.minus

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.plus, self.zero, self.minus)

    def to_json(self) -> dict:
        return {"plus": self.plus, "zero": self.zero, "minus": self.minus}

    def __str__(self):
        return f"({self.plus},{self.zero},{self.minus})"


@dataclass(frozen=True)
class EigenResult:
    eigenvalues: tuple[float, ...]
    residual_bound: float
    sweeps: int = 0


def exact_inertia(m) -> Inertia:
    """Signature of a symmetric rational matrix by congruence elimination.

    Each step takes the largest-magnitude diagonal pivot of the active block
    (lowest index on ties) and forms the Schur complement. If the active
    diagonal is all zero, the largest off-diagonal entry ``a`` gives a hollow
    2x2 pivot ``[[0, a], [a, 0]]`` with one positive and one negative eigenvalue,
    and both indices are eliminated together.
    """
    m = as_matrix(m)
    if not is_symmetric(m):
        raise NotSymmetricError("exact_inertia needs a symmetric matrix")
    # elimination runs on gmpy2 rationals when available; same values, ~10x faster
    a = [[_rational(x.numerator, x.denominator) for x in row] for row in m]
    active = list(range(len(a)))
    plus = minus = 0
    while active:
        p = max(active, key=lambda i: (abs(a[i][i]), -i))
        piv = a[p][p]
        if piv != 0:
            if piv > 0:
                plus += 1
            else:
                minus += 1
            active.remove(p)
            row_p = a[p]
            for r in active:
                f = row_p[r]
                if f:
                    f = f / piv
                    row_r = a[r]
                    for c in active:
                        if row_p[c]:
                            row_r[c] -= f * row_p[c]
            continue
        best, pq = 0, None
        for i in active:
            for j in active:
                if j > i and abs(a[i][j]) > best:
                    best, pq = abs(a[i][j]), (i, j)
        if pq is None:
            break
        p, q = pq
        off = a[p][q]
        plus += 1
        minus += 1
        active.remove(p)
        active.remove(q)
        row_p, row_q = a[p], a[q]
        # inverse of [[0, off], [off, 0]] is [[0, 1/off], [1/off, 0]]
        for r in active:
            xp, xq = row_p[r] / off, row_q[r] / off
            if not (xp or xq):
                continue
            row_r = a[r]
            for c in active:
                row_r[c] -= xp * row_q[c] + xq * row_p[c]
    return Inertia(plus, len(m) - plus - minus, minus)


def arrowhead_inertia(nf: NormalForm) -> Inertia:
    """Inertia of a normal form: (1, 0, n-1), confirmed by exact elimination."""
    nf.check()
    got = exact_inertia(nf.matrix())
    expected = Inertia(1, 0, nf.n - 1)
    if got != expected:
        raise TheoremViolation(f"normal form has inertia {got}, expected {expected}")
    return expected


def schur_determinant(m, split: int) -> Fraction:
    """``det(M) = det(A) det(D - C A^{-1} B)`` with ``A`` the leading ``split`` block."""
    m = as_matrix(m)
    n = len(m)
    if not 1 <= split <= n:
        raise ValueError(f"split must be in 1..{n}")
    a = tuple(row[:split] for row in m[:split])
    b = tuple(row[split:] for row in m[:split])
    c = tuple(row[:split] for row in m[split:])
    d = tuple(row[split:] for row in m[split:])
    det_a = determinant(a)
    if det_a == 0:
        raise SingularBlockError("leading block is singular")
    if split == n:
        return det_a
    ainv_b = solve(a, b)
    cab = matmul(c, ainv_b)
    s = tuple(tuple(d[i][j] - cab[i][j] for j in range(n - split)) for i in range(n - split))
    return det_a * determinant(s)


def float_eigenvalues(m, tol: float = 1e-14, backend: str | None = None) -> EigenResult:
    """All eigenvalues by cyclic Jacobi, until the off-diagonal Frobenius norm < ``tol * ||M||_F``.

    ``m`` may be an exact matrix or a float array. ``backend`` picks
    ``"numba"`` or ``"numpy"`` sweeps; the default follows the environment.
    """
    if isinstance(m, np.ndarray):
        a = np.array(m, dtype=np.float64)
    else:
        a = np.array([[float(x) for x in row] for row in m], dtype=np.float64)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    if not np.array_equal(a, a.T):
        raise NotSymmetricError("float_eigenvalues needs a symmetric matrix")
    sweep, off_norm = _kernels.get_backend(backend)
    original = a.copy()
    v = np.eye(n)
    target = tol * np.linalg.norm(a)
    max_sweeps = 30 + 2 * n
    sweeps = 0
    with np.errstate(over="ignore"):
        while off_norm(a) > target:
            if sweeps >= max_sweeps:
                raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")
            if sweep(a, v) == 0:
                break
            sweeps += 1
    lam = np.diag(a).copy()
    residual = float(np.max(np.abs(original @ v - v * lam))) if n else 0.0
    order = np.argsort(lam, kind="stable")
    return EigenResult(tuple(float(x) for x in lam[order]), residual, sweeps)


def float_inertia(e: EigenResult, zero_threshold: float) -> Inertia:
    if zero_threshold <= 0:
        raise ValueError("zero threshold must be positive")
    lam = np.asarray(e.eigenvalues)
    plus = int(np.sum(lam > zero_threshold))
    minus = int(np.sum(lam < -zero_threshold))
    return Inertia(plus, len(lam) - plus - minus, minus)


def relative_threshold(m: Matrix, factor: float = 1e-9) -> float:
    """``factor * n * max|entry|``, floored so an all-zero matrix still gets a positive threshold."""
    n = len(m)
    big = max((abs(float(x)) for row in m for x in row), default=0.0)
    return factor * n * big if big > 0 else factor


def check_interlacing(parent: Sequence[float], sub: Sequence[float], tol: float) -> bool:
    """Cauchy interlacing ``alpha_k - tol <= beta_k <= alpha_{k+n-m} + tol`` (ascending inputs)."""
    alpha, beta = list(parent), list(sub)
    n, m = len(alpha), len(beta)
    if m > n:
        raise ValueError("submatrix spectrum is longer than the parent spectrum")
    return all(alpha[k] - tol <= beta[k] <= alpha[k + n - m] + tol for k in range(m))
