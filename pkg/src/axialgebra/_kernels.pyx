# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled row reduction over F_p (p < 2**31)."""
from libc.stdlib cimport malloc, free


cdef long long _inv(long long a, long long p):
    cdef long long t = 0, new_t = 1, r = p, new_r = a, q, tmp
    while new_r != 0:
        q = r // new_r
        tmp = t - q * new_t
        t = new_t
        new_t = tmp
        tmp = r - q * new_r
        r = new_r
        new_r = tmp
    if t < 0:
        t += p
    return t


def rref_modp(rows, long long p):
    """Reduced row echelon form of an integer matrix mod p.

    Returns ``(rref_rows, pivot_columns)``; zero rows are dropped.
    """
    cdef Py_ssize_t m = len(rows)
    if m == 0:
        return [], []
    cdef Py_ssize_t n = len(rows[0])
    cdef long long *a = <long long *> malloc(m * n * sizeof(long long))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, k, r = 0, piv
    cdef long long f, inv, x
    pivots = []
    try:
        for i in range(m):
            row = rows[i]
            for j in range(n):
                x = row[j] % p
                a[i * n + j] = x
        for j in range(n):
            if r == m:
                break
            piv = -1
            for i in range(r, m):
                if a[i * n + j] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for k in range(n):
                    x = a[piv * n + k]
                    a[piv * n + k] = a[r * n + k]
                    a[r * n + k] = x
            inv = _inv(a[r * n + j], p)
            for k in range(j, n):
                a[r * n + k] = a[r * n + k] * inv % p
            for i in range(m):
                if i == r:
                    continue
                f = a[i * n + j]
                if f == 0:
                    continue
                for k in range(j, n):
                    if a[r * n + k] != 0:
                        a[i * n + k] = (a[i * n + k] - f * a[r * n + k]) % p
                        if a[i * n + k] < 0:
                            a[i * n + k] += p
            pivots.append(j)
            r += 1
        out = [[a[i * n + k] for k in range(n)] for i in range(r)]
    finally:
        free(a)
    return out, pivots
