# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled matrix kernels over GF(q); same interface as ``_pykernel``."""

from libc.stdlib cimport malloc, free
from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM, PyTuple_GET_ITEM, PyTuple_GET_SIZE
from cpython.ref cimport Py_INCREF
from cpython.long cimport PyLong_AsLong, PyLong_FromLong

cdef enum:
    MAXD = 64


cdef inline tuple _pack(long *buf, Py_ssize_t n):
    cdef tuple out = PyTuple_New(n)
    cdef Py_ssize_t i
    cdef object x
    for i in range(n):
        x = PyLong_FromLong(buf[i])
        Py_INCREF(x)
        PyTuple_SET_ITEM(out, i, x)
    return out


cdef inline void _unpack(tuple t, long *buf, Py_ssize_t n):
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = PyLong_AsLong(<object>PyTuple_GET_ITEM(t, i))


cdef class FieldOps:
    """Arithmetic kernel for one field.

    Prime fields use modular arithmetic; extension fields need the full
    q*q tables (q <= 256).
    """

    cdef readonly object field
    cdef long q, p
    cdef bint prime
    cdef long *add_t
    cdef long *mul_t
    cdef long *inv_t
    cdef long *neg_t

    def __cinit__(self):
        self.add_t = NULL
        self.mul_t = NULL
        self.inv_t = NULL
        self.neg_t = NULL

    def __init__(self, field):
        cdef long i, n
        self.field = field
        self.q = field.q
        self.p = field.p
        self.prime = field.r == 1
        n = self.q
        self.inv_t = <long *>malloc(n * sizeof(long))
        self.neg_t = <long *>malloc(n * sizeof(long))
        for i in range(n):
            self.inv_t[i] = field.inv_table[i]
            self.neg_t[i] = field.neg_table[i]
        if not self.prime:
            if field.add_table is None:
                raise ValueError("extension field without full tables")
            self.add_t = <long *>malloc(n * n * sizeof(long))
            self.mul_t = <long *>malloc(n * n * sizeof(long))
            for i in range(n * n):
                self.add_t[i] = field.add_table[i]
                self.mul_t[i] = field.mul_table[i]

    def __dealloc__(self):
        free(self.add_t)
        free(self.mul_t)
        free(self.inv_t)
        free(self.neg_t)

    cdef inline long _add(self, long a, long b) nogil:
        if self.prime:
            return (a + b) % self.p
        return self.add_t[a * self.q + b]

    cdef inline long _mul(self, long a, long b) nogil:
        if self.prime:
            return (a * b) % self.p
        return self.mul_t[a * self.q + b]

    cdef void _matmul(self, long *a, long *b, long *c, int d) nogil:
        cdef int i, j, k
        cdef long acc, x, y, p = self.p, q = self.q
        if self.prime:
            for i in range(d):
                for j in range(d):
                    acc = 0
                    for k in range(d):
                        acc += a[i * d + k] * b[k * d + j]
                    c[i * d + j] = acc % p
        else:
            for i in range(d):
                for j in range(d):
                    acc = 0
                    for k in range(d):
                        x = a[i * d + k]
                        y = b[k * d + j]
                        if x and y:
                            acc = self.add_t[acc * q + self.mul_t[x * q + y]]
                    c[i * d + j] = acc

    cdef void _vecmat(self, long *v, long *m, long *out, int d) nogil:
        cdef int j, k
        cdef long acc, x, y, p = self.p, q = self.q
        if self.prime:
            for j in range(d):
                acc = 0
                for k in range(d):
                    acc += v[k] * m[k * d + j]
                out[j] = acc % p
        else:
            for j in range(d):
                acc = 0
                for k in range(d):
                    x = v[k]
                    y = m[k * d + j]
                    if x and y:
                        acc = self.add_t[acc * q + self.mul_t[x * q + y]]
                out[j] = acc

    cdef int _canon(self, long *v, int d) nogil:
        cdef int i
        cdef long s = 0
        for i in range(d):
            if v[i]:
                s = self.inv_t[v[i]]
                break
        if s == 0:
            return -1
        if s != 1:
            for i in range(d):
                v[i] = self._mul(s, v[i])
        return 0

    def matmul(self, tuple a, tuple b, int d):
        cdef long *buf
        cdef Py_ssize_t n = d * d
        cdef tuple out
        if d > MAXD:
            raise ValueError("dimension too large for compiled kernel")
        buf = <long *>malloc(3 * n * sizeof(long))
        try:
            _unpack(a, buf, n)
            _unpack(b, buf + n, n)
            self._matmul(buf, buf + n, buf + 2 * n, d)
            out = _pack(buf + 2 * n, n)
        finally:
            free(buf)
        return out

    def vecmat(self, tuple v, tuple m, int d):
        cdef long vb[MAXD]
        cdef long ob[MAXD]
        cdef long *mb
        cdef tuple out
        if d > MAXD:
            raise ValueError("dimension too large for compiled kernel")
        mb = <long *>malloc(d * d * sizeof(long))
        try:
            _unpack(v, vb, d)
            _unpack(m, mb, d * d)
            self._vecmat(vb, mb, ob, d)
            out = _pack(ob, d)
        finally:
            free(mb)
        return out

    def projmat(self, tuple v, tuple m, int d):
        cdef long vb[MAXD]
        cdef long ob[MAXD]
        cdef long *mb
        cdef tuple out
        if d > MAXD:
            raise ValueError("dimension too large for compiled kernel")
        mb = <long *>malloc(d * d * sizeof(long))
        try:
            _unpack(v, vb, d)
            _unpack(m, mb, d * d)
            self._vecmat(vb, mb, ob, d)
            if self._canon(ob, d) < 0:
                raise ValueError("zero vector has no projective point")
            out = _pack(ob, d)
        finally:
            free(mb)
        return out

    def canon(self, v):
        cdef long vb[MAXD]
        cdef int d = len(v)
        if d > MAXD:
            raise ValueError("dimension too large for compiled kernel")
        v = tuple(v)
        _unpack(v, vb, d)
        if self._canon(vb, d) < 0:
            raise ValueError("zero vector has no projective point")
        return _pack(vb, d)

    def matinv(self, tuple a, int d):
        cdef int w = 2 * d, i, j, r, col, piv
        cdef long s, f, t
        cdef long *m
        cdef long *res
        cdef tuple out
        if d > MAXD:
            raise ValueError("dimension too large for compiled kernel")
        m = <long *>malloc(d * w * sizeof(long))
        res = <long *>malloc(d * d * sizeof(long))
        try:
            for i in range(d):
                for j in range(d):
                    m[i * w + j] = PyLong_AsLong(<object>PyTuple_GET_ITEM(a, i * d + j))
                    m[i * w + d + j] = 1 if i == j else 0
            for col in range(d):
                piv = -1
                for r in range(col, d):
                    if m[r * w + col]:
                        piv = r
                        break
                if piv < 0:
                    return None
                if piv != col:
                    for j in range(w):
                        t = m[piv * w + j]
                        m[piv * w + j] = m[col * w + j]
                        m[col * w + j] = t
                s = self.inv_t[m[col * w + col]]
                if s != 1:
                    for j in range(w):
                        m[col * w + j] = self._mul(s, m[col * w + j])
                for r in range(d):
                    if r != col and m[r * w + col]:
                        f = self.neg_t[m[r * w + col]]
                        for j in range(w):
                            m[r * w + j] = self._add(m[r * w + j], self._mul(f, m[col * w + j]))
            for i in range(d):
                for j in range(d):
                    res[i * d + j] = m[i * w + d + j]
            out = _pack(res, d * d)
        finally:
            free(m)
            free(res)
        return out
