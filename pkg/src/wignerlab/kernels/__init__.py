"""Hot loops for grid evaluation and oscillatory quadrature.

The compiled extension is preferred; the numpy module is selected when it
failed to build or when ``WIGNERLAB_PURE_PYTHON`` is set to a non-empty value.
``BACKEND`` names the implementation in use.

The Fourier tensor sum always runs on the numpy path: its contraction is a
matrix product, and BLAS beats the compiled loop there (see
``benchmarks/bench_kernels.py``).
"""

import os

import numpy as np

from . import _pykernels as pure

compiled = None
if not os.environ.get("WIGNERLAB_PURE_PYTHON"):
    try:
        from . import _ckernels as compiled
    except ImportError:
        compiled = None

if compiled is not None:
    BACKEND = "cython"
    _impl = compiled
else:
    BACKEND = "python"
    _impl = pure


def _vec(x):
    return np.ascontiguousarray(x, dtype=np.float64).ravel()


def hermite_functions(n, x):
    """Normalized Hermite functions h_n at the points ``x`` (any shape)."""
    x = np.asarray(x, dtype=np.float64)
    return _impl.hermite_functions(int(n), _vec(x)).reshape(x.shape)


def psi_points(n, eta, z, t):
    """Boosted oscillator wave function at broadcast points ``(z, t)``."""
    z, t = np.broadcast_arrays(np.asarray(z, dtype=np.float64), np.asarray(t, dtype=np.float64))
    return _impl.psi_points(int(n), float(eta), _vec(z), _vec(t)).reshape(z.shape)


def fourier_tensor_sum(f, a, b, wa, wb):
    """``sum_ij f[i, j] exp(1j * (wa[k] * a[i] + wb[k] * b[j]))`` for every k."""
    f = np.ascontiguousarray(f, dtype=np.float64)
    return pure.fourier_tensor_sum(f, _vec(a), _vec(b), _vec(wa), _vec(wb))


__all__ = ["BACKEND", "compiled", "pure", "hermite_functions", "psi_points", "fourier_tensor_sum"]
