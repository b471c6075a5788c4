# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled row operations on exact rational rows.

Semantics are identical to minproj._kernel.fallback: rows are parallel
lists of Python ints (numerator, positive denominator, lowest terms).
Entries that fit comfortably in machine words run through a 128-bit
integer fast path; anything larger falls back to Python big-int
arithmetic element by element.
"""

from cpython.list cimport PyList_GET_ITEM, PyList_GET_SIZE
from cpython.long cimport (PyLong_AsLongLongAndOverflow, PyLong_FromLongLong,
                           PyLong_FromUnsignedLongLong)
from libc.limits cimport LLONG_MAX, LLONG_MIN

from math import gcd as _pygcd

cdef extern from *:
    """
    typedef __int128 minproj_i128;
    typedef unsigned __int128 minproj_u128;
    """
    ctypedef long long i128 "minproj_i128"
    ctypedef unsigned long long u128 "minproj_u128"

# Triple products of values below this bound stay within 128 bits.
cdef long long FAST_BOUND = (<long long>1) << 31
# Pair products of values below this bound stay within 128 bits.
cdef long long SCALE_BOUND = (<long long>1) << 62


cdef inline i128 _gcd128(i128 a, i128 b) noexcept:
    cdef i128 t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b != 0:
        t = a % b
        a = b
        b = t
    return a


cdef object _from_i128(i128 v):
    cdef bint neg
    cdef u128 m
    if LLONG_MIN <= v <= LLONG_MAX:
        return PyLong_FromLongLong(<long long>v)
    neg = v < 0
    m = <u128>(-v) if neg else <u128>v
    result = (PyLong_FromUnsignedLongLong(<unsigned long long>(m >> 64)) << 64) | \
        PyLong_FromUnsignedLongLong(<unsigned long long>m)
    return -result if neg else result


def scale_row(list num, list den, object fn_obj, object fd_obj):
    """Multiply the row by fn/fd in place (fn != 0, fd > 0)."""
    cdef Py_ssize_t i, size = PyList_GET_SIZE(num)
    cdef int of_fn = 0, of_fd = 0, of_n = 0, of_d = 0
    cdef long long fn = PyLong_AsLongLongAndOverflow(fn_obj, &of_fn)
    cdef long long fd = PyLong_AsLongLongAndOverflow(fd_obj, &of_fd)
    cdef bint fast_factor = (of_fn == 0 and of_fd == 0 and
                             -SCALE_BOUND < fn < SCALE_BOUND and fd < SCALE_BOUND)
    cdef long long n, d
    cdef i128 nn, dd, g
    cdef object n_obj, d_obj, big_nn, big_dd, big_g
    for i in range(size):
        n_obj = <object>PyList_GET_ITEM(num, i)
        n = PyLong_AsLongLongAndOverflow(n_obj, &of_n)
        if of_n == 0 and n == 0:
            continue
        d_obj = <object>PyList_GET_ITEM(den, i)
        d = PyLong_AsLongLongAndOverflow(d_obj, &of_d)
        if (fast_factor and of_n == 0 and of_d == 0 and
                -SCALE_BOUND < n < SCALE_BOUND and d < SCALE_BOUND):
            nn = (<i128>n) * fn
            dd = (<i128>d) * fd
            g = _gcd128(nn, dd)
            num[i] = _from_i128(nn // g)
            den[i] = _from_i128(dd // g)
        else:
            big_nn = n_obj * fn_obj
            big_dd = d_obj * fd_obj
            big_g = _pygcd(big_nn, big_dd)
            num[i] = big_nn // big_g
            den[i] = big_dd // big_g


def row_axpy(list dnum, list dden, list snum, list sden,
             object fn_obj, object fd_obj):
    """Subtract (fn/fd) times the source row from the destination row in place."""
    cdef Py_ssize_t i, size = PyList_GET_SIZE(snum)
    cdef int of_fn = 0, of_fd = 0, of_a = 0, of_b = 0, of_s = 0, of_t = 0
    cdef long long fn = PyLong_AsLongLongAndOverflow(fn_obj, &of_fn)
    cdef long long fd = PyLong_AsLongLongAndOverflow(fd_obj, &of_fd)
    if of_fn == 0 and fn == 0:
        return
    cdef bint fast_factor = (of_fn == 0 and of_fd == 0 and
                             -FAST_BOUND < fn < FAST_BOUND and fd < FAST_BOUND)
    cdef long long a, b, s, t
    cdef i128 nn, dd, g
    cdef object s_obj, a_obj, b_obj, t_obj, big_nn, big_dd, big_g
    for i in range(size):
        s_obj = <object>PyList_GET_ITEM(snum, i)
        s = PyLong_AsLongLongAndOverflow(s_obj, &of_s)
        if of_s == 0 and s == 0:
            continue
        a_obj = <object>PyList_GET_ITEM(dnum, i)
        b_obj = <object>PyList_GET_ITEM(dden, i)
        t_obj = <object>PyList_GET_ITEM(sden, i)
        a = PyLong_AsLongLongAndOverflow(a_obj, &of_a)
        b = PyLong_AsLongLongAndOverflow(b_obj, &of_b)
        t = PyLong_AsLongLongAndOverflow(t_obj, &of_t)
        if (fast_factor and of_s == 0 and of_a == 0 and of_b == 0 and of_t == 0 and
                -FAST_BOUND < a < FAST_BOUND and b < FAST_BOUND and
                -FAST_BOUND < s < FAST_BOUND and t < FAST_BOUND):
            nn = (<i128>a) * fd * t - (<i128>fn) * s * b
            if nn == 0:
                dnum[i] = 0
                dden[i] = 1
                continue
            dd = (<i128>b) * fd * t
            g = _gcd128(nn, dd)
            dnum[i] = _from_i128(nn // g)
            dden[i] = _from_i128(dd // g)
        else:
            big_nn = a_obj * fd_obj * t_obj - fn_obj * s_obj * b_obj
            if big_nn == 0:
                dnum[i] = 0
                dden[i] = 1
                continue
            big_dd = b_obj * fd_obj * t_obj
            big_g = _pygcd(big_nn, big_dd)
            dnum[i] = big_nn // big_g
            dden[i] = big_dd // big_g
