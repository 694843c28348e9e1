"""Cyclic Jacobi sweep kernels.

Two implementations of the same sweep: a numba ``@njit`` scalar loop and a
pure-numpy version using row/column slices. Set ``DISTINERTIA_DISABLE_NUMBA=1``
(or run without numba installed) to select the numpy path.
"""
import os

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover
    njit = None

USE_NUMBA = njit is not None and os.environ.get("DISTINERTIA_DISABLE_NUMBA", "0") not in ("1", "true", "yes")


# beyond this tau*tau overflows; t ~ 1/(2 tau) is then exact to working precision
_BIG = 1e150


def _rotation(app, aqq, apq):
    # symmetric Schur decomposition of the 2x2 block, smaller rotation angle
    tau = (aqq - app) / (2.0 * apq)
    if abs(tau) > _BIG:
        t = 0.5 / tau
    elif tau >= 0.0:
        t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
    else:
        t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
    c = 1.0 / np.sqrt(1.0 + t * t)
    return c, t * c


def jacobi_sweep_numpy(a, v):
    """One cyclic sweep over all (p, q), p < q, in place. Returns the number of rotations."""
    n = a.shape[0]
    rotations = 0
    for p in range(n - 1):
        for q in range(p + 1, n):
            apq = a[p, q]
            if apq == 0.0:
                continue
            c, s = _rotation(a[p, p], a[q, q], apq)
            ap = a[:, p].copy()
            aq = a[:, q]
            a[:, p] = c * ap - s * aq
            a[:, q] = s * ap + c * aq
            ap = a[p, :].copy()
            aq = a[q, :]
            a[p, :] = c * ap - s * aq
            a[q, :] = s * ap + c * aq
            a[p, q] = 0.0
            a[q, p] = 0.0
            vp = v[:, p].copy()
            vq = v[:, q]
            v[:, p] = c * vp - s * vq
            v[:, q] = s * vp + c * vq
            rotations += 1
    return rotations


def off_norm_numpy(a):
    off = a - np.diag(np.diag(a))
    return np.sqrt(np.sum(off * off))


if njit is not None:

    @njit(cache=True)
    def jacobi_sweep_numba(a, v):
        n = a.shape[0]
        rotations = 0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(tau) > 1e150:
                    t = 0.5 / tau
                elif tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * aqk
                    a[q, k] = s * apk + c * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * vkp - s * vkq
                    v[k, q] = s * vkp + c * vkq
                rotations += 1
        return rotations

    @njit(cache=True)
    def off_norm_numba(a):
        n = a.shape[0]
        total = 0.0
        for i in range(n):
            for j in range(n):
                if i != j:
                    total += a[i, j] * a[i, j]
        return np.sqrt(total)

else:  # pragma: no cover
    jacobi_sweep_numba = None
    off_norm_numba = None


def get_backend(name=None):
    """``(sweep, off_norm)`` for ``"numba"``, ``"numpy"``, or the env-selected default."""
    if name is None:
        name = "numba" if USE_NUMBA else "numpy"
    if name == "numba":
        if jacobi_sweep_numba is None:
            raise RuntimeError("numba is not available")
        return jacobi_sweep_numba, off_norm_numba
    if name == "numpy":
        return jacobi_sweep_numpy, off_norm_numpy
    raise ValueError(f"unknown backend {name!r}")
