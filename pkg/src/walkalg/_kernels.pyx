# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled bitset kernels. Arrays are C-contiguous uint64; see kernels.py."""
import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t

cnp.import_array()


cdef inline bint _nonzero(const uint64_t* v, Py_ssize_t W) noexcept nogil:
    cdef Py_ssize_t w
    for w in range(W):
        if v[w]:
            return True
    return False


def vset_product(const uint64_t[:, :, ::1] X, const uint64_t[:, :, ::1] Y, bint clear_diag):
    cdef Py_ssize_t n = X.shape[0], W = X.shape[2]
    cdef Py_ssize_t i, j, b, w
    out = np.zeros((n, n, W), dtype=np.uint64)
    cdef uint64_t[:, :, ::1] Zv = out
    cdef uint64_t* Z = &Zv[0, 0, 0] if n else NULL
    cdef const uint64_t* xp = &X[0, 0, 0] if n else NULL
    cdef const uint64_t* yp = &Y[0, 0, 0] if n else NULL
    cdef const uint64_t* xrow
    cdef const uint64_t* yrow
    cdef uint64_t* zrow
    cdef Py_ssize_t stride = n * W
    with nogil:
        for i in range(n):
            zrow = Z + i * stride
            for b in range(n):
                xrow = xp + i * stride + b * W
                if not _nonzero(xrow, W):
                    continue
                yrow = yp + b * stride
                for j in range(n):
                    for w in range(W):
                        zrow[j * W + w] |= xrow[w] & yrow[j * W + w]
            if clear_diag:
                for w in range(W):
                    zrow[i * W + w] = 0
    return out


def vset_row_product(const uint64_t[:, ::1] x, const uint64_t[:, :, ::1] Y, Py_ssize_t skip):
    cdef Py_ssize_t n = Y.shape[0], W = Y.shape[2]
    cdef Py_ssize_t j, b, w
    out = np.zeros((n, W), dtype=np.uint64)
    cdef uint64_t[:, ::1] Zv = out
    cdef uint64_t* Z = &Zv[0, 0] if n else NULL
    cdef const uint64_t* xp = &x[0, 0] if n else NULL
    cdef const uint64_t* yp = &Y[0, 0, 0] if n else NULL
    cdef const uint64_t* yrow
    with nogil:
        for b in range(n):
            if not _nonzero(xp + b * W, W):
                continue
            yrow = yp + b * n * W
            for j in range(n):
                for w in range(W):
                    Z[j * W + w] |= xp[b * W + w] & yrow[j * W + w]
        if 0 <= skip < n:
            for w in range(W):
                Z[skip * W + w] = 0
    return out


def vset_diag_join(const uint64_t[:, :, ::1] X, const uint64_t[:, :, ::1] Y):
    cdef Py_ssize_t n = X.shape[0], W = X.shape[2]
    cdef Py_ssize_t i, b, w
    out = np.zeros((n, W), dtype=np.uint64)
    cdef uint64_t[:, ::1] D = out
    with nogil:
        for i in range(n):
            for b in range(n):
                for w in range(W):
                    D[i, w] |= X[i, b, w] & Y[b, i, w]
    return out


def bool_product(const uint64_t[:, ::1] X, const uint64_t[:, ::1] Y):
    cdef Py_ssize_t n = X.shape[0], W = X.shape[1]
    cdef Py_ssize_t i, b, w
    out = np.zeros((n, W), dtype=np.uint64)
    cdef uint64_t[:, ::1] Z = out
    with nogil:
        for i in range(n):
            for b in range(n):
                if (X[i, b >> 6] >> (b & 63)) & 1:
                    for w in range(W):
                        Z[i, w] |= Y[b, w]
    return out


def bool_row_product(const uint64_t[::1] x, const uint64_t[:, ::1] Y):
    cdef Py_ssize_t n = Y.shape[0], W = Y.shape[1]
    cdef Py_ssize_t b, w
    out = np.zeros(W, dtype=np.uint64)
    cdef uint64_t[::1] z = out
    with nogil:
        for b in range(n):
            if (x[b >> 6] >> (b & 63)) & 1:
                for w in range(W):
                    z[w] |= Y[b, w]
    return out
