"""Both Jacobi sweep backends must compute the same thing."""
import os
import subprocess
import sys

import numpy as np
import pytest

from distinertia import _kernels
from distinertia.inertia import float_eigenvalues


def _sym(n, seed):
    a = np.random.default_rng(seed).normal(size=(n, n))
    return a + a.T


@pytest.mark.parametrize("n", [2, 5, 17, 40])
def test_single_sweep_agrees(n):
    a1, a2 = _sym(n, n), _sym(n, n)
    v1, v2 = np.eye(n), np.eye(n)
    r1 = _kernels.jacobi_sweep_numpy(a1, v1)
    r2 = _kernels.jacobi_sweep_numba(a2, v2)
    assert r1 == r2
    np.testing.assert_allclose(a1, a2, atol=1e-12)
    np.testing.assert_allclose(v1, v2, atol=1e-12)


def test_off_norms_agree():
    a = _sym(12, 0)
    assert _kernels.off_norm_numpy(a) == pytest.approx(_kernels.off_norm_numba(a), rel=1e-14)


def test_off_norm_no_cancellation():
    # huge diagonal, tiny off-diagonal: a difference of squares would round to zero
    a = np.diag([1e8, -1e8, 3e8])
    a[0, 1] = a[1, 0] = 1e-4
    assert _kernels.off_norm_numpy(a) == pytest.approx(np.sqrt(2) * 1e-4)


def test_rotation_zeroes_pair():
    a = np.array([[2.0, 1.0], [1.0, -1.0]])
    v = np.eye(2)
    _kernels.jacobi_sweep_numpy(a, v)
    assert a[0, 1] == 0.0
    np.testing.assert_allclose(v @ np.diag(np.diag(a)) @ v.T, [[2.0, 1.0], [1.0, -1.0]], atol=1e-14)


def test_tiny_offdiagonal_does_not_overflow():
    a = np.array([[1e10, 1e-300], [1e-300, -1e10]])
    with np.errstate(over="raise", invalid="raise"):
        e = float_eigenvalues(a, backend="numpy")
    assert e.eigenvalues == (-1e10, 1e10)


def test_unknown_backend():
    with pytest.raises(ValueError):
        _kernels.get_backend("fortran")


def test_env_flag_selects_numpy():
    code = "from distinertia import _kernels; print(_kernels.USE_NUMBA)"
    env = dict(os.environ, DISTINERTIA_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "False"
