# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_kernels_py``; same signatures, same results."""

from math import gcd

BACKEND = "cython"


def mq_mul(a, b, scale):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i, j, row
    cdef list out = [0] * n
    cdef list al = list(a)
    cdef list bl = list(b)
    cdef list sc = list(scale)
    cdef object ai, bj
    for i in range(n):
        ai = al[i]
        if not ai:
            continue
        row = i * n
        for j in range(n):
            bj = bl[j]
            if bj:
                out[i ^ j] = out[i ^ j] + sc[row + j] * ai * bj
    return out


def normalize(num, den):
    cdef list nl
    cdef object g
    if den < 0:
        nl = [-x for x in num]
        den = -den
    else:
        nl = list(num)
    g = gcd(den, *nl)
    if g != 1:
        nl = [x // g for x in nl]
        den = den // g
    return nl, den


def poly_mul(dict ta, dict tb):
    cdef dict out = {}
    cdef tuple ea, eb, e
    cdef object ca, cb, c
    cdef Py_ssize_t k, nv
    cdef list buf
    for ea, ca in ta.items():
        nv = len(ea)
        for eb, cb in tb.items():
            buf = [0] * nv
            for k in range(nv):
                buf[k] = <long>ea[k] + <long>eb[k]
            e = tuple(buf)
            c = out.get(e)
            if c is None:
                out[e] = ca * cb
            else:
                out[e] = c + ca * cb
    return {e: c for e, c in out.items() if c}


def int_echelon(rows, Py_ssize_t ncols):
    cdef list m = [list(row_in) for row_in in rows]
    cdef Py_ssize_t nrows = len(m)
    cdef list pivots = []
    cdef object prev = 1
    cdef Py_ssize_t r = 0, c, p, i, j
    cdef list prow, row
    cdef object piv, lead
    for c in range(ncols):
        if r == nrows:
            break
        p = r
        while p < nrows and m[p][c] == 0:
            p += 1
        if p == nrows:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
        prow = m[r]
        piv = prow[c]
        for i in range(r + 1, nrows):
            row = m[i]
            lead = row[c]
            for j in range(c + 1, ncols):
                row[j] = (piv * row[j] - lead * prow[j]) // prev
            row[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return m, pivots
