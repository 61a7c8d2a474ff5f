# cython: language_level=3, boundscheck=False, wraparound=False
"""Dense integer polynomial kernels over int64 with overflow detection.

Same API as ``_pykernel``.  Every routine first tries a C loop on 64-bit
integers; on overflow (or big-int input) it defers to the Python version.
"""
from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t

from qhyper import _pykernel as _py

BACKEND = "cython"

cdef extern from *:
    """
    static inline int qh_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    static inline int qh_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    static inline int qh_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    """
    int qh_add_ovf(long long a, long long b, long long *r) nogil
    int qh_sub_ovf(long long a, long long b, long long *r) nogil
    int qh_mul_ovf(long long a, long long b, long long *r) nogil


class _Overflow(Exception):
    pass


cdef int64_t* _load(tuple a, Py_ssize_t n) except NULL:
    cdef int64_t* buf = <int64_t*> malloc((n if n > 0 else 1) * sizeof(int64_t))
    cdef Py_ssize_t i
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            buf[i] = a[i]
    except OverflowError:
        free(buf)
        raise _Overflow()
    return buf


cdef tuple _store(int64_t* buf, Py_ssize_t n):
    while n > 0 and buf[n - 1] == 0:
        n -= 1
    return tuple([buf[i] for i in range(n)])


p_trim = _py.p_trim
p_neg = _py.p_neg
p_content = _py.p_content
p_divexact_int = _py.p_divexact_int
p_primitive = _py.p_primitive


def p_add(tuple a, tuple b):
    cdef Py_ssize_t na = len(a), nb = len(b), i
    cdef int64_t *x
    cdef int64_t *y
    cdef long long r
    if na < nb:
        a, b = b, a
        na, nb = nb, na
    try:
        x = _load(a, na)
    except _Overflow:
        return _py.p_add(a, b)
    try:
        y = _load(b, nb)
    except _Overflow:
        free(x)
        return _py.p_add(a, b)
    try:
        for i in range(nb):
            if qh_add_ovf(x[i], y[i], &r):
                return _py.p_add(a, b)
            x[i] = r
        return _store(x, na)
    finally:
        free(x)
        free(y)


def p_sub(tuple a, tuple b):
    cdef Py_ssize_t na = len(a), nb = len(b), n, i
    cdef int64_t *x
    cdef int64_t *y
    cdef long long r
    n = na if na > nb else nb
    try:
        x = _load(a + (0,) * (n - na), n)
    except _Overflow:
        return _py.p_sub(a, b)
    try:
        y = _load(b, nb)
    except _Overflow:
        free(x)
        return _py.p_sub(a, b)
    try:
        for i in range(nb):
            if qh_sub_ovf(x[i], y[i], &r):
                return _py.p_sub(a, b)
            x[i] = r
        return _store(x, n)
    finally:
        free(x)
        free(y)


def p_scale(tuple a, c):
    cdef Py_ssize_t n = len(a), i
    cdef long long cc, r
    cdef int64_t *x
    if c == 0:
        return ()
    try:
        cc = c
    except OverflowError:
        return _py.p_scale(a, c)
    try:
        x = _load(a, n)
    except _Overflow:
        return _py.p_scale(a, c)
    try:
        for i in range(n):
            if qh_mul_ovf(x[i], cc, &r):
                return _py.p_scale(a, c)
            x[i] = r
        return _store(x, n)
    finally:
        free(x)


def p_mul(tuple a, tuple b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j, n
    cdef int64_t *x
    cdef int64_t *y
    cdef int64_t *out
    cdef long long prod, acc
    if na == 0 or nb == 0:
        return ()
    try:
        x = _load(a, na)
    except _Overflow:
        return _py.p_mul(a, b)
    try:
        y = _load(b, nb)
    except _Overflow:
        free(x)
        return _py.p_mul(a, b)
    n = na + nb - 1
    out = <int64_t*> malloc(n * sizeof(int64_t))
    try:
        for i in range(n):
            out[i] = 0
        for i in range(na):
            if x[i] == 0:
                continue
            for j in range(nb):
                if qh_mul_ovf(x[i], y[j], &prod):
                    return _py.p_mul(a, b)
                if qh_add_ovf(out[i + j], prod, &acc):
                    return _py.p_mul(a, b)
                out[i + j] = acc
        return _store(out, n)
    finally:
        free(x)
        free(y)
        free(out)


def p_divexact(tuple a, tuple b):
    cdef Py_ssize_t na = len(a), nb = len(b), db, i, j
    cdef int64_t *r
    cdef int64_t *y
    cdef int64_t *quo
    cdef long long lb, c, prod, acc
    if nb == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    if na == 0:
        return ()
    db = nb - 1
    if na - 1 < db:
        raise ArithmeticError("inexact polynomial division")
    try:
        r = _load(a, na)
    except _Overflow:
        return _py.p_divexact(a, b)
    try:
        y = _load(b, nb)
    except _Overflow:
        free(r)
        return _py.p_divexact(a, b)
    quo = <int64_t*> malloc((na - db) * sizeof(int64_t))
    lb = y[db]
    try:
        for i in range(na - 1 - db, -1, -1):
            if r[i + db] % lb != 0 or lb == -1:
                if lb == -1:
                    return _py.p_divexact(a, b)
                raise ArithmeticError("inexact polynomial division")
            c = r[i + db] // lb
            quo[i] = c
            if c != 0:
                for j in range(db + 1):
                    if qh_mul_ovf(c, y[j], &prod):
                        return _py.p_divexact(a, b)
                    if qh_sub_ovf(r[i + j], prod, &acc):
                        return _py.p_divexact(a, b)
                    r[i + j] = acc
        for i in range(na):
            if r[i] != 0:
                raise ArithmeticError("inexact polynomial division")
        return _store(quo, na - db)
    finally:
        free(r)
        free(y)
        free(quo)


def p_prem(tuple a, tuple b):
    return _py.p_prem(a, b)


def p_gcd(tuple a, tuple b):
    return _py.p_gcd(a, b)
