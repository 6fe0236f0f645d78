# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled convolution kernels; same contract as ``_pykernels``."""

from libc.stdlib cimport malloc, free


cdef inline int _bits(list xs):
    cdef int best = 0
    cdef int b
    for x in xs:
        b = (<object>x).bit_length()
        if b > best:
            best = b
    return best


def convolve_int(list a, list b):
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef Py_ssize_t i, j, n
    cdef long long *ca
    cdef long long *cb
    cdef long long *cc
    cdef list out
    cdef object x
    if la == 0 or lb == 0:
        return []
    n = la + lb - 1
    # machine-word path when no partial sum can leave int64
    if _bits(a) + _bits(b) + (<object>min(la, lb)).bit_length() < 63:
        ca = <long long *> malloc(la * sizeof(long long))
        cb = <long long *> malloc(lb * sizeof(long long))
        cc = <long long *> malloc(n * sizeof(long long))
        if ca == NULL or cb == NULL or cc == NULL:
            free(ca); free(cb); free(cc)
            raise MemoryError()
        try:
            for i in range(la):
                ca[i] = a[i]
            for j in range(lb):
                cb[j] = b[j]
            for i in range(n):
                cc[i] = 0
            for i in range(la):
                if ca[i] != 0:
                    for j in range(lb):
                        cc[i + j] += ca[i] * cb[j]
            return [cc[i] for i in range(n)]
        finally:
            free(ca); free(cb); free(cc)
    out = [0] * n
    for i in range(la):
        x = a[i]
        if x:
            for j in range(lb):
                out[i + j] = out[i + j] + x * b[j]
    return out


def cauchy(list a, list b, object zero):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t m, j
    cdef object acc, x, y
    cdef list out = []
    if len(b) != n:
        raise ValueError("cauchy: operands must have equal length")
    for m in range(n):
        acc = zero
        for j in range(m + 1):
            x = a[j]
            if x:
                y = b[m - j]
                if y:
                    acc = acc + x * y
        out.append(acc)
    return out
