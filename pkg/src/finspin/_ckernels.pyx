# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot loops: 4x4 complex determinants, quartic-form evaluation and
the trace formula for L(D).

Signatures mirror :mod:`finspin._pykernels`; inputs are validated upstream.
"""
import numpy as np

cimport numpy as cnp

cnp.import_array()

ctypedef double complex cplx


cdef inline double _mod2(cplx z) noexcept nogil:
    return z.real * z.real + z.imag * z.imag


cdef cplx _det4_ptr(const cplx[:, ::1] m) noexcept nogil:
    cdef cplx a[4][4]
    cdef cplx det = 1.0, tmp, f
    cdef int i, j, k, p
    cdef double best, cur
    for i in range(4):
        for j in range(4):
            a[i][j] = m[i, j]
    for k in range(4):
        p = k
        best = _mod2(a[k][k])
        for i in range(k + 1, 4):
            cur = _mod2(a[i][k])
            if cur > best:
                best = cur
                p = i
        if best == 0.0:
            return 0.0
        if p != k:
            for j in range(4):
                tmp = a[k][j]
                a[k][j] = a[p][j]
                a[p][j] = tmp
            det = -det
        det = det * a[k][k]
        for i in range(k + 1, 4):
            f = a[i][k] / a[k][k]
            for j in range(k + 1, 4):
                a[i][j] = a[i][j] - f * a[k][j]
    return det


def det4(const cplx[:, ::1] m):
    return complex(_det4_ptr(m))


def det4_batch(const cplx[:, :, ::1] ms):
    cdef Py_ssize_t n = ms.shape[0], s
    out = np.empty(n, dtype=np.complex128)
    cdef cplx[::1] o = out
    with nogil:
        for s in range(n):
            o[s] = _det4_ptr(ms[s])
    return out


def quartic_eval(const double[:, ::1] X, const cnp.int64_t[:, ::1] idx,
                 const double[::1] coef):
    cdef Py_ssize_t n = X.shape[0], nt = idx.shape[0], s, t
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] o = out
    cdef double acc
    with nogil:
        for s in range(n):
            acc = 0.0
            for t in range(nt):
                acc += (coef[t] * X[s, idx[t, 0]] * X[s, idx[t, 1]]
                        * X[s, idx[t, 2]] * X[s, idx[t, 3]])
            o[s] = acc
    return out


def l_matrix(const cplx[:, ::1] D, const cplx[:, :, ::1] tau,
             const cplx[:, :, ::1] tau_dual):
    """Return (L, max_imag_residue) with L[A, B] = Re 1/2 Tr(tau^A D tau_B D^+)."""
    cdef cplx S[4][4]
    cdef cplx T[4][4]
    cdef cplx acc
    cdef int A, B, i, j, k
    cdef double resid = 0.0, im
    out = np.empty((16, 16), dtype=np.float64)
    cdef double[:, ::1] L = out
    with nogil:
        for B in range(16):
            # T = D tau_B
            for i in range(4):
                for j in range(4):
                    acc = 0.0
                    for k in range(4):
                        acc = acc + D[i, k] * tau[B, k, j]
                    T[i][j] = acc
            # S = T D^+
            for i in range(4):
                for j in range(4):
                    acc = 0.0
                    for k in range(4):
                        acc = acc + T[i][k] * D[j, k].conjugate()
                    S[i][j] = acc
            for A in range(16):
                acc = 0.0
                for i in range(4):
                    for j in range(4):
                        acc = acc + tau_dual[A, i, j] * S[j][i]
                L[A, B] = 0.5 * acc.real
                im = 0.5 * acc.imag
                if im < 0:
                    im = -im
                if im > resid:
                    resid = im
    return out, resid
