# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels in :mod:`plethysm._kernels_py`.

Same signatures and results. Primes of 2^31 or more go to the pure-Python
versions, since products would no longer fit in 64 bits.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t, uint64_t
from libcpp.unordered_map cimport unordered_map
from libcpp.pair cimport pair
from cython.operator cimport dereference as deref, preincrement as inc

from . import _kernels_py

cnp.import_array()

cdef int64_t _LIMIT = 1 << 31


cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long)


cdef int64_t _inverse(int64_t a, int64_t p):
    cdef int64_t t = 0, new_t = 1, r = p, new_r = a, q, tmp
    while new_r:
        q = r // new_r
        tmp = t - q * new_t
        t = new_t
        new_t = tmp
        tmp = r - q * new_r
        r = new_r
        new_r = tmp
    return t + p if t < 0 else t


def rank_mod_p(matrix, p):
    """Rank of an integer matrix modulo the prime ``p`` (input not modified)."""
    if p >= _LIMIT:
        return _kernels_py.rank_mod_p(matrix, p)
    arr = np.array(matrix, dtype=np.int64) % p
    if arr.ndim != 2:
        raise ValueError("expected a 2-d array")
    cdef int64_t[:, ::1] a = np.ascontiguousarray(arr)
    cdef Py_ssize_t nrows = a.shape[0], ncols = a.shape[1]
    cdef Py_ssize_t rank = 0, col, i, k, piv
    cdef int64_t q = p, inv, f, tmp
    for col in range(ncols):
        if rank == nrows:
            break
        piv = -1
        for i in range(rank, nrows):
            if a[i, col]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for k in range(col, ncols):
                tmp = a[rank, k]
                a[rank, k] = a[piv, k]
                a[piv, k] = tmp
        inv = _inverse(a[rank, col], q)
        for k in range(col, ncols):
            a[rank, k] = a[rank, k] * inv % q
        for i in range(rank + 1, nrows):
            f = a[i, col]
            if f:
                for k in range(col, ncols):
                    a[i, k] = (a[i, k] - f * a[rank, k]) % q
                    if a[i, k] < 0:
                        a[i, k] += q
        rank += 1
    return rank


def matmul_mod_p(a, b, p):
    """Product of two integer matrices modulo ``p``."""
    if p >= _LIMIT:
        return _kernels_py.matmul_mod_p(a, b, p)
    cdef int64_t[:, ::1] x = np.ascontiguousarray(np.asarray(a, dtype=np.int64) % p)
    cdef int64_t[:, ::1] y = np.ascontiguousarray(np.asarray(b, dtype=np.int64) % p)
    if x.shape[1] != y.shape[0]:
        raise ValueError("inner dimensions differ")
    out_arr = np.zeros((x.shape[0], y.shape[1]), dtype=np.int64)
    cdef int64_t[:, ::1] out = out_arr
    cdef uint64_t[::1] acc = np.zeros(y.shape[1], dtype=np.uint64)
    cdef Py_ssize_t i, j, k, pending
    cdef uint64_t q = p, s
    # how many products fit in an accumulator before it must be reduced
    cdef Py_ssize_t batch = <Py_ssize_t>(((<uint64_t>1) << 63) // ((q - 1) * (q - 1) + 1))
    for i in range(x.shape[0]):
        acc[:] = 0
        pending = 0
        for k in range(x.shape[1]):
            s = <uint64_t>x[i, k]
            if s:
                if pending == batch:
                    for j in range(y.shape[1]):
                        acc[j] %= q
                    pending = 0
                for j in range(y.shape[1]):
                    acc[j] += s * <uint64_t>y[k, j]
                pending += 1
        for j in range(y.shape[1]):
            out[i, j] = <int64_t>(acc[j] % q)
    return out_arr


def wedge_expand_mod_p(vectors, p):
    """Exterior product of sparse vectors, collected in the subset basis.

    See :func:`plethysm._kernels_py.wedge_expand_mod_p`.
    """
    if p >= _LIMIT:
        return _kernels_py.wedge_expand_mod_p(vectors, p)
    cdef unordered_map[uint64_t, int64_t] current, nxt
    cdef unordered_map[uint64_t, int64_t].iterator it
    cdef uint64_t mask, bit, new
    cdef int64_t c, val, q = p
    cdef Py_ssize_t n, t
    cdef int idx
    cdef int64_t[::1] ids, cs
    current[0] = 1
    for indices, coeffs in vectors:
        ids = np.asarray(indices, dtype=np.int64)
        cs = np.asarray(coeffs, dtype=np.int64) % p
        n = ids.shape[0]
        nxt.clear()
        it = current.begin()
        while it != current.end():
            mask = deref(it).first
            c = deref(it).second
            for t in range(n):
                idx = <int>ids[t]
                if idx < 0 or idx >= 63:
                    raise ValueError("indices must lie in 0..62")
                bit = (<uint64_t>1) << idx
                if mask & bit:
                    continue
                val = c * cs[t] % q
                if popcount64(mask >> (idx + 1)) & 1:
                    val = q - val if val else 0
                new = mask | bit
                nxt[new] = (nxt[new] + val) % q
            inc(it)
        current.clear()
        it = nxt.begin()
        while it != nxt.end():
            if deref(it).second:
                current[deref(it).first] = deref(it).second
            inc(it)
        if current.empty():
            break
    out = {}
    it = current.begin()
    while it != current.end():
        out[deref(it).first] = deref(it).second
        inc(it)
    return out
