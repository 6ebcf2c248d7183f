# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled inner loops. Signatures mirror :mod:`wignerlab.kernels._pykernels`.

Work is split over independent output points with OpenMP; every output is
summed in a fixed order, so results do not depend on the thread count.
"""

import numpy as np

from cython.parallel cimport parallel, prange
from libc.math cimport cos, exp, sin, sqrt
from libc.stdlib cimport free, malloc

cdef double PI_M14 = 0.7511255444649425  # pi ** -0.25
cdef double SQRT2 = 1.4142135623730951


cdef inline double _hermite_function(int n, double x, const double* c1, const double* c2) noexcept nogil:
    cdef double h0 = PI_M14 * exp(-0.5 * x * x)
    cdef double h1, h2
    cdef int k
    if n == 0:
        return h0
    h1 = SQRT2 * x * h0
    for k in range(2, n + 1):
        h2 = c1[k] * x * h1 - c2[k] * h0
        h0 = h1
        h1 = h2
    return h1


def _coefficients(int n):
    k = np.arange(max(n + 1, 2), dtype=np.float64)
    k[0] = 1.0
    return np.sqrt(2.0 / k), np.sqrt((k - 1.0) / k)


def hermite_functions(int n, const double[::1] x):
    cdef Py_ssize_t i, m = x.shape[0]
    a1, a2 = _coefficients(n)
    cdef const double[::1] c1 = a1, c2 = a2
    out = np.empty(m, dtype=np.float64)
    cdef double[::1] o = out
    for i in prange(m, nogil=True, schedule="static"):
        o[i] = _hermite_function(n, x[i], &c1[0], &c2[0])
    return out


def psi_points(int n, double eta, const double[::1] z, const double[::1] t):
    cdef Py_ssize_t i, m = z.shape[0]
    cdef double ep = exp(eta), em = exp(-eta)
    cdef double u, v, zr, tr
    a1, a2 = _coefficients(n)
    cdef const double[::1] c1 = a1, c2 = a2
    out = np.empty(m, dtype=np.float64)
    cdef double[::1] o = out
    for i in prange(m, nogil=True, schedule="static"):
        u = em * (z[i] + t[i]) / SQRT2
        v = ep * (z[i] - t[i]) / SQRT2
        zr = (u + v) / SQRT2
        tr = (u - v) / SQRT2
        o[i] = _hermite_function(n, zr, &c1[0], &c2[0]) * PI_M14 * exp(-0.5 * tr * tr)
    return out


DEF QB = 8      # momentum points per block
DEF TILE = 256  # node tile along the first axis


def fourier_tensor_sum(const double[:, ::1] f, const double[::1] a, const double[::1] b,
                       const double[::1] wa, const double[::1] wb):
    cdef Py_ssize_t na = a.shape[0], nb = b.shape[0], nq = wa.shape[0]
    cdef Py_ssize_t nblocks = (nq + QB - 1) // QB
    cdef Py_ssize_t blk, k0, kk, nk, i, i0, i1, j
    cdef double c, s, cr, ci
    cdef double* gr
    cdef double* gi
    cdef double* cb
    cdef double* sb
    cdef double* accr
    cdef double* acci
    cdef const double* row
    # column-major copy so the inner update runs over contiguous i
    ft_arr = np.ascontiguousarray(np.asarray(f).T)
    cdef const double[:, ::1] ft = ft_arr
    out_r = np.empty(nq, dtype=np.float64)
    out_i = np.empty(nq, dtype=np.float64)
    cdef double[::1] orv = out_r, oiv = out_i
    with nogil, parallel():
        gr = <double*> malloc(QB * TILE * sizeof(double))
        gi = <double*> malloc(QB * TILE * sizeof(double))
        cb = <double*> malloc(QB * nb * sizeof(double))
        sb = <double*> malloc(QB * nb * sizeof(double))
        accr = <double*> malloc(QB * sizeof(double))
        acci = <double*> malloc(QB * sizeof(double))
        for blk in prange(nblocks, schedule="dynamic"):
            k0 = blk * QB
            nk = min(QB, nq - k0)
            for kk in range(nk):
                accr[kk] = 0.0
                acci[kk] = 0.0
                for j in range(nb):
                    cb[kk * nb + j] = cos(wb[k0 + kk] * b[j])
                    sb[kk * nb + j] = sin(wb[k0 + kk] * b[j])
            for i0 in range(0, na, TILE):
                i1 = min(i0 + TILE, na)
                for kk in range(nk):
                    for i in range(i1 - i0):
                        gr[kk * TILE + i] = 0.0
                        gi[kk * TILE + i] = 0.0
                for j in range(nb):
                    row = &ft[j, i0]
                    for kk in range(nk):
                        c = cb[kk * nb + j]
                        s = sb[kk * nb + j]
                        for i in range(i1 - i0):
                            gr[kk * TILE + i] += c * row[i]
                            gi[kk * TILE + i] += s * row[i]
                for kk in range(nk):
                    for i in range(i1 - i0):
                        cr = cos(wa[k0 + kk] * a[i0 + i])
                        ci = sin(wa[k0 + kk] * a[i0 + i])
                        accr[kk] += cr * gr[kk * TILE + i] - ci * gi[kk * TILE + i]
                        acci[kk] += cr * gi[kk * TILE + i] + ci * gr[kk * TILE + i]
            for kk in range(nk):
                orv[k0 + kk] = accr[kk]
                oiv[k0 + kk] = acci[kk]
        free(gr)
        free(gi)
        free(cb)
        free(sb)
        free(accr)
        free(acci)
    return out_r + 1j * out_i
