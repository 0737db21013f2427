# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels; see _pykernels for the reference."""

from libc.stdlib cimport malloc, free
from cpython cimport array
import array


cdef long long _inv(long long a, long long p):
    cdef long long t = 0, nt = 1, r = p, nr = a % p, q, tmp
    while nr:
        q = r // nr
        tmp = t - q * nt; t = nt; nt = tmp
        tmp = r - q * nr; r = nr; nr = tmp
    if t < 0:
        t += p
    return t


def rref_mod(rows, long long p):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t ncols
    cdef long long *m
    cdef Py_ssize_t i, j, c, r = 0, piv
    cdef long long inv, f, v
    if nrows == 0:
        return [], []
    ncols = len(rows[0])
    m = <long long *> malloc(max(nrows * ncols, 1) * sizeof(long long))
    pivots = []
    try:
        for i in range(nrows):
            row = rows[i]
            for j in range(ncols):
                v = row[j] % p
                if v < 0:
                    v += p
                m[i * ncols + j] = v
        for c in range(ncols):
            piv = -1
            for i in range(r, nrows):
                if m[i * ncols + c]:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(ncols):
                    v = m[r * ncols + j]
                    m[r * ncols + j] = m[piv * ncols + j]
                    m[piv * ncols + j] = v
            inv = _inv(m[r * ncols + c], p)
            if inv != 1:
                for j in range(ncols):
                    m[r * ncols + j] = (m[r * ncols + j] * inv) % p
            for i in range(nrows):
                if i != r:
                    f = m[i * ncols + c]
                    if f:
                        for j in range(ncols):
                            m[i * ncols + j] = (m[i * ncols + j] - f * m[r * ncols + j]) % p
                            if m[i * ncols + j] < 0:
                                m[i * ncols + j] += p
            pivots.append(c)
            r += 1
            if r == nrows:
                break
        out = [[m[i * ncols + j] for j in range(ncols)] for i in range(r)]
    finally:
        free(m)
    return out, pivots


def poly_mul_mod(a, b, long long p):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j, n
    cdef long long x
    cdef long long[:] av, bv, ov
    if la == 0 or lb == 0:
        return []
    n = la + lb - 1
    av = array.array("q", a)
    bv = array.array("q", b)
    ov = array.array("q", bytes(8 * n))
    for i in range(la):
        x = av[i]
        if x:
            for j in range(lb):
                ov[i + j] = (ov[i + j] + x * bv[j]) % p
    res = list(ov)
    while res and res[len(res) - 1] == 0:
        res.pop()
    return res


cdef class AlgebraKernel:
    cdef long long *table
    cdef public Py_ssize_t dim
    cdef public long long p

    def __cinit__(self, flat, Py_ssize_t dim, long long p):
        cdef Py_ssize_t n = dim * dim * dim, i
        self.dim = dim
        self.p = p
        self.table = <long long *> malloc(max(n, 1) * sizeof(long long))
        for i in range(n):
            self.table[i] = flat[i]

    def __dealloc__(self):
        free(self.table)

    def mul(self, x, y):
        cdef Py_ssize_t d = self.dim, i, j, k, base
        cdef long long xi, f
        cdef long long *xs = <long long *> malloc(d * sizeof(long long))
        cdef long long *ys = <long long *> malloc(d * sizeof(long long))
        cdef long long *out = <long long *> malloc(d * sizeof(long long))
        try:
            for i in range(d):
                xs[i] = x[i]
                ys[i] = y[i]
                out[i] = 0
            for i in range(d):
                xi = xs[i]
                if xi == 0:
                    continue
                for j in range(d):
                    if ys[j] == 0:
                        continue
                    f = (xi * ys[j]) % self.p
                    base = (i * d + j) * d
                    for k in range(d):
                        if self.table[base + k]:
                            out[k] = (out[k] + f * self.table[base + k]) % self.p
            res = tuple([out[k] for k in range(d)])
        finally:
            free(xs)
            free(ys)
            free(out)
        return res
