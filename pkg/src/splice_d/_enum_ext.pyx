# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of :mod:`splice_d._enum`.

Coordinates and Gram-Schmidt data are 64-bit; the scaled norms, which carry
the common denominator W, are 128-bit.  Every product and sum is
overflow-checked; on overflow the search stops and reports it so the caller
can rerun the exact Python version.
"""

from libc.stdlib cimport free, malloc

import numpy as np

cdef extern from *:
    """
    typedef __int128 i128;
    static inline int mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    static inline int mul128_ovf(i128 a, i128 b, i128 *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int add128_ovf(i128 a, i128 b, i128 *r) {
        return __builtin_add_overflow(a, b, r);
    }
    static inline i128 make128(long long hi, unsigned long long lo) {
        return (i128)(((unsigned __int128)hi << 64) | lo);
    }
    static inline long long hi128(i128 v) { return (long long)(v >> 64); }
    static inline unsigned long long lo128(i128 v) { return (unsigned long long)v; }
    static inline i128 widen(long long v) { return (i128)v; }
    """
    ctypedef struct i128:
        pass
    int mul_ovf(long long a, long long b, long long *r) nogil
    int add_ovf(long long a, long long b, long long *r) nogil
    int mul128_ovf(i128 a, i128 b, i128 *r) nogil
    int add128_ovf(i128 a, i128 b, i128 *r) nogil
    i128 make128(long long hi, unsigned long long lo) nogil
    long long hi128(i128 v) nogil
    unsigned long long lo128(i128 v) nogil
    i128 widen(long long v) nogil
    bint lt128 "lt128"(i128 a, i128 b) nogil

cdef extern from *:
    """
    static inline int lt128(i128 a, i128 b) { return a < b; }
    """

_MASK = (1 << 64) - 1


cdef i128 to128(object x) except *:
    if not -(1 << 126) <= x < (1 << 126):
        raise OverflowError("value outside the 128-bit range")
    return make128(<long long>(x >> 64), <unsigned long long>(x & _MASK))


cdef object from128(i128 v):
    return (int(hi128(v)) << 64) | int(lo128(v))


cdef inline long long floordiv(long long a, long long b) nogil:
    cdef long long q = a / b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


cdef int _run(long long[::1] D, long long[:, ::1] lam, i128 *wt,
              long long[::1] parity, i128 *best, long long[::1] best_z,
              long long[::1] z, long long[::1] base, long long[::1] off,
              long long[::1] step, long long[::1] s, i128 *partial,
              long long *nodes) nogil:
    cdef Py_ssize_t r = parity.shape[0]
    cdef Py_ssize_t i, j
    cdef long long acc, tmp, c, u, k, t, sq, o, d
    cdef i128 val

    i = r - 1
    # enter(i)
    s[i] = 0
    c = D[i + 1]
    if mul_ovf(c, parity[i], &u):
        return 1
    k = floordiv(c - u, 2 * c)
    base[i] = parity[i] + 2 * k
    off[i] = 0
    step[i] = -1 if u + 2 * c * k > 0 else 1
    z[i] = base[i]

    while True:
        nodes[0] += 1
        if mul_ovf(D[i + 1], z[i], &t) or add_ovf(t, s[i], &t) or mul_ovf(t, t, &sq):
            return 1
        if mul128_ovf(widen(sq), wt[i], &val) or add128_ovf(val, partial[i + 1], &val):
            return 1
        if lt128(val, best[0]):
            if i == 0:
                best[0] = val
                for j in range(r):
                    best_z[j] = z[j]
                o = off[0]
                d = step[0]
                off[0] = -o if o * d > 0 else -o + d
                z[0] = base[0] + 2 * off[0]
            else:
                partial[i] = val
                i -= 1
                acc = 0
                for j in range(i + 1, r):
                    if mul_ovf(lam[j, i], z[j], &tmp) or add_ovf(acc, tmp, &acc):
                        return 1
                s[i] = acc
                c = D[i + 1]
                if mul_ovf(c, parity[i], &u) or add_ovf(u, acc, &u):
                    return 1
                k = floordiv(c - u, 2 * c)
                base[i] = parity[i] + 2 * k
                off[i] = 0
                step[i] = -1 if u + 2 * c * k > 0 else 1
                z[i] = base[i]
        else:
            i += 1
            if i == r:
                return 0
            o = off[i]
            d = step[i]
            off[i] = -o if o * d > 0 else -o + d
            z[i] = base[i] + 2 * off[i]


def search(D, lam, wt, parity, best, best_z):
    """Same contract as the Python version; raises OverflowError when out of range."""
    cdef Py_ssize_t r = len(parity)
    cdef Py_ssize_t i
    cdef long long[::1] D_ = np.asarray(D, dtype=np.int64)
    cdef long long[:, ::1] lam_ = np.ascontiguousarray(np.asarray(lam, dtype=np.int64).reshape(r, r))
    cdef long long[::1] par_ = np.asarray(parity, dtype=np.int64)
    cdef long long[::1] bz = np.array(best_z, dtype=np.int64)
    cdef long long[::1] z = np.zeros(r, dtype=np.int64)
    cdef long long[::1] base = np.zeros(r, dtype=np.int64)
    cdef long long[::1] off = np.zeros(r, dtype=np.int64)
    cdef long long[::1] step = np.zeros(r, dtype=np.int64)
    cdef long long[::1] s = np.zeros(r, dtype=np.int64)
    cdef i128 b = to128(best)
    cdef long long nodes = 0
    cdef int status
    cdef i128 *wt_ = <i128 *> malloc(r * sizeof(i128))
    cdef i128 *partial = <i128 *> malloc((r + 1) * sizeof(i128))
    if wt_ == NULL or partial == NULL:
        free(wt_)
        free(partial)
        raise MemoryError()
    try:
        for i in range(r):
            wt_[i] = to128(wt[i])
        for i in range(r + 1):
            partial[i] = widen(0)
        with nogil:
            status = _run(D_, lam_, wt_, par_, &b, bz, z, base, off, step, s, partial, &nodes)
        if status:
            raise OverflowError("coset search left the 64/128-bit range")
        return from128(b), [int(x) for x in bz], nodes
    finally:
        free(wt_)
        free(partial)
