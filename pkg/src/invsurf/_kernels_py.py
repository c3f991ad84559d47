"""Pure-Python kernels.

Reference implementation of the inner loops; ``_kernels_c.pyx`` mirrors
these signatures exactly.  All inputs are Python ints (arbitrary
precision), so results are bit-identical between the two backends.
"""

from math import gcd

BACKEND = "python"


def mq_mul(a, b, scale):
    """Product of two coordinate vectors in a multiquadratic basis.

    ``scale[i * N + j]`` is the integer with ``e_i * e_j = scale * e_(i^j)``.
    """
    n = len(a)
    out = [0] * n
    for i in range(n):
        ai = a[i]
        if not ai:
            continue
        row = i * n
        for j in range(n):
            bj = b[j]
            if bj:
                out[i ^ j] += scale[row + j] * ai * bj
    return out


def normalize(num, den):
    """Divide out the common content; returns (num, den) with den > 0."""
    if den < 0:
        num = [-x for x in num]
        den = -den
    g = gcd(den, *num)
    if g != 1:
        num = [x // g for x in num]
        den //= g
    return num, den


def poly_mul(ta, tb):
    """Sparse product of two term dicts ``{exponent tuple: coefficient}``."""
    out = {}
    get = out.get
    for ea, ca in ta.items():
        for eb, cb in tb.items():
            e = tuple([x + y for x, y in zip(ea, eb)])
            c = get(e)
            if c is None:
                out[e] = ca * cb
            else:
                out[e] = c + ca * cb
    return {e: c for e, c in out.items() if c}


def int_echelon(rows, ncols):
    """Fraction-free (Bareiss) row echelon form of an integer matrix.

    Works on a copy; returns ``(rows, pivot_columns)``.  Every division is
    exact, so entries stay integral and bounded by minors of the input.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    pivots = []
    prev = 1
    r = 0
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
        piv = m[r][c]
        prow = m[r]
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
