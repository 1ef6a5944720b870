# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: LR filling count and the direct star formula."""

from libc.stdlib cimport malloc, free

BACKEND = "cython"


def star_direct(mu, nu, Py_ssize_t n):
    cdef Py_ssize_t j, k, a, b
    cdef long *m = <long *> malloc(n * sizeof(long))
    cdef long *v = <long *> malloc(n * sizeof(long))
    lam = [0] * n
    rho = [0] * n
    try:
        for k in range(n):
            m[k] = (<long> mu[k] if k < len(mu) else 0) - k - 1
            v[k] = (<long> nu[k] if k < len(nu) else 0) - k - 1
        for k in range(n):
            a = 0
            for j in range(n):
                if v[j] >= m[k]:
                    a += 1
            lam[k] = m[k] + a
        for j in range(n):
            b = 0
            for k in range(n):
                if m[k] > v[j]:
                    b += 1
            rho[j] = v[j] + 1 + b
    finally:
        free(m)
        free(v)
    return lam, rho


cdef struct Ctx:
    int ncells
    int m
    int *row
    int *right
    int *below
    int *vals
    long long *cap
    long long *count


cdef long long _rec(Ctx *c, int t) nogil:
    if t == c.ncells:
        return 1
    cdef int hi = c.row[t]
    if hi > c.m:
        hi = c.m
    if c.right[t] >= 0 and c.vals[c.right[t]] < hi:
        hi = c.vals[c.right[t]]
    cdef int lo = 1
    if c.below[t] >= 0:
        lo = c.vals[c.below[t]] + 1
    cdef long long total = 0
    cdef long long cv
    cdef int v
    for v in range(lo, hi + 1):
        cv = c.count[v]
        if cv < c.cap[v] and c.count[v - 1] > cv:
            c.count[v] = cv + 1
            c.vals[t] = v
            total += _rec(c, t + 1)
            c.count[v] = cv
    return total


def lr_count(outer, inner, content):
    """Number of LR fillings of ``outer/inner`` with the given content."""
    cdef Py_ssize_t r, col, lo, o, i
    if sum(outer) - sum(inner) != sum(content):
        return 0
    if len(inner) > len(outer) or any(x > y for x, y in zip(inner, outer)):
        return 0
    if len(content) > len(outer) or any(x > y for x, y in zip(content, outer)):
        return 0
    cdef int ncells = sum(outer) - sum(inner)
    if ncells == 0:
        return 1
    cdef int m = len(content)
    cdef int width = outer[0]
    cdef int nrows = len(outer)
    cdef Ctx c
    c.ncells = ncells
    c.m = m
    c.row = <int *> malloc(ncells * sizeof(int))
    c.right = <int *> malloc(ncells * sizeof(int))
    c.below = <int *> malloc(ncells * sizeof(int))
    c.vals = <int *> malloc(ncells * sizeof(int))
    c.cap = <long long *> malloc((m + 1) * sizeof(long long))
    c.count = <long long *> malloc((m + 1) * sizeof(long long))
    cdef int *index = <int *> malloc(nrows * width * sizeof(int))
    cdef long long result
    try:
        for i in range(nrows * width):
            index[i] = -1
        i = 0
        for r in range(nrows):
            o = outer[r]
            lo = inner[r] if r < len(inner) else 0
            for col in range(o - 1, lo - 1, -1):
                index[r * width + col] = i
                c.row[i] = r + 1
                i += 1
        for r in range(nrows):
            o = outer[r]
            lo = inner[r] if r < len(inner) else 0
            for col in range(o - 1, lo - 1, -1):
                i = index[r * width + col]
                c.right[i] = index[r * width + col + 1] if col + 1 < o else -1
                c.below[i] = index[(r - 1) * width + col] if r > 0 else -1
        c.cap[0] = 0
        c.count[0] = 1LL << 62
        for i in range(m):
            c.cap[i + 1] = content[i]
            c.count[i + 1] = 0
        with nogil:
            result = _rec(&c, 0)
    finally:
        free(c.row)
        free(c.right)
        free(c.below)
        free(c.vals)
        free(c.cap)
        free(c.count)
        free(index)
    return result

