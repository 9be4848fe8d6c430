# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled backtracking kernels; same contract as ``_pykernels``."""

import numpy as np
cimport numpy as cnp

from libc.stdlib cimport malloc, free

cnp.import_array()

ctypedef unsigned long long u64


cdef inline bint _ok(const int* off, const int* pr, const unsigned char* col,
                     int v, unsigned char c) noexcept nogil:
    cdef int k
    cdef unsigned char a, b
    for k in range(off[v], off[v + 1]):
        a = col[pr[2 * k]]
        b = col[pr[2 * k + 1]]
        if c == a or c == b or a == b or (a ^ b) == c:
            return False
    return True


cdef u64 _walk(int n, const int* dom, const int* off, const int* pr,
               unsigned char* out, u64 cap) noexcept nogil:
    """Iterative DFS. Writes up to ``cap`` solution rows into ``out`` when it
    is non-NULL; returns the number of solutions."""
    cdef u64 total = 0
    cdef int v = 0
    cdef int k
    cdef unsigned char c, hi
    cdef unsigned char* col
    cdef unsigned char* lo
    cdef unsigned char* top
    if n == 0:
        return 1
    col = <unsigned char*> malloc(3 * n)
    lo = col + n
    top = col + 2 * n
    for v in range(n):
        if dom[v] == 0:
            lo[v] = 1
            top[v] = 7
        else:
            lo[v] = <unsigned char> dom[v]
            top[v] = <unsigned char> dom[v]
    v = 0
    col[0] = lo[0]
    while v >= 0:
        c = col[v]
        hi = top[v]
        while c <= hi and not _ok(off, pr, col, v, c):
            c += 1
        if c > hi:
            v -= 1
            if v >= 0:
                col[v] += 1
            continue
        col[v] = c
        if v == n - 1:
            if out != NULL and total < cap:
                for k in range(n):
                    out[total * n + k] = col[k]
            total += 1
            col[v] = c + 1
        else:
            v += 1
            col[v] = lo[v]
    free(col)
    return total


def _as_int(a):
    return np.ascontiguousarray(a, dtype=np.intc)


def count(domain, offsets, pairs):
    cdef int[::1] d = _as_int(domain)
    cdef int[::1] o = _as_int(offsets)
    cdef int[::1] p = _as_int(pairs) if len(pairs) else np.zeros(1, dtype=np.intc)
    cdef int n = d.shape[0]
    cdef u64 total
    cdef const int* dp = &d[0] if n else NULL
    with nogil:
        total = _walk(n, dp, &o[0], &p[0], NULL, 0)
    return int(total)


def collect(domain, offsets, pairs):
    cdef int[::1] d = _as_int(domain)
    cdef int[::1] o = _as_int(offsets)
    cdef int[::1] p = _as_int(pairs) if len(pairs) else np.zeros(1, dtype=np.intc)
    cdef int n = d.shape[0]
    cdef const int* dp = &d[0] if n else NULL
    cdef u64 total
    with nogil:
        total = _walk(n, dp, &o[0], &p[0], NULL, 0)
    out = np.zeros((total, n), dtype=np.uint8)
    if total == 0 or n == 0:
        return out
    cdef unsigned char[:, ::1] buf = out
    with nogil:
        _walk(n, dp, &o[0], &p[0], &buf[0, 0], total)
    return out
