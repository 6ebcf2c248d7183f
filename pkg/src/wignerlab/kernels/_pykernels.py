"""Numpy implementations of the inner loops, used when the extension is absent."""

import numpy as np

_PI_M14 = np.pi ** -0.25
_SQRT2 = np.sqrt(2.0)


def hermite_functions(n, x):
    x = np.asarray(x, dtype=np.float64)
    h0 = _PI_M14 * np.exp(-0.5 * x * x)
    if n == 0:
        return h0
    h1 = _SQRT2 * x * h0
    for k in range(2, n + 1):
        h0, h1 = h1, np.sqrt(2.0 / k) * x * h1 - np.sqrt((k - 1.0) / k) * h0
    return h1


def psi_points(n, eta, z, t):
    z = np.asarray(z, dtype=np.float64)
    t = np.asarray(t, dtype=np.float64)
    u = np.exp(-eta) * (z + t) / _SQRT2
    v = np.exp(eta) * (z - t) / _SQRT2
    zr = (u + v) / _SQRT2
    tr = (u - v) / _SQRT2
    return hermite_functions(n, zr) * _PI_M14 * np.exp(-0.5 * tr * tr)


def fourier_tensor_sum(f, a, b, wa, wb, chunk=256):
    f = np.asarray(f, dtype=np.float64)
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    wa = np.asarray(wa, dtype=np.float64)
    wb = np.asarray(wb, dtype=np.float64)
    out = np.empty(wa.shape[0], dtype=np.complex128)
    for s in range(0, wa.shape[0], chunk):
        ea = np.exp(1j * np.outer(wa[s:s + chunk], a))
        eb = np.exp(1j * np.outer(wb[s:s + chunk], b))
        out[s:s + chunk] = np.einsum("ki,ki->k", ea, eb @ f.T)
    return out
