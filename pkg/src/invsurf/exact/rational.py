"""Rational linear algebra on top of fraction-free integer elimination."""

from fractions import Fraction
from math import gcd, lcm

from invsurf._native import int_echelon

Rational = Fraction


def as_rational(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not a rational: {x!r}")


def _integer_rows(matrix):
    """Scale each row by its common denominator."""
    out = []
    for row in matrix:
        row = [as_rational(x) for x in row]
        d = lcm(*(x.denominator for x in row)) if row else 1
        out.append([x.numerator * (d // x.denominator) for x in row])
    return out


def primitive(vec):
    """Scale a rational vector to coprime integers (sign unchanged)."""
    vec = [as_rational(x) for x in vec]
    d = lcm(*(x.denominator for x in vec))
    ints = [x.numerator * (d // x.denominator) for x in vec]
    g = gcd(*ints)
    if g == 0:
        return ints
    return [x // g for x in ints]


def echelon(matrix):
    """Fraction-free echelon form and pivot columns of a rational matrix."""
    if not matrix:
        return [], []
    ncols = len(matrix[0])
    return int_echelon(_integer_rows(matrix), ncols)


def rank(matrix):
    return len(echelon(matrix)[1])


def rational_kernel(matrix):
    """Basis of the right null space, each vector scaled to coprime integers.

    The entry at each free column is positive; an empty list means the
    kernel is trivial.
    """
    if not matrix:
        return []
    ncols = len(matrix[0])
    rows, pivots = echelon(matrix)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for fc in free:
        x = [Fraction(0)] * ncols
        x[fc] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            row = rows[r]
            s = sum((row[j] * x[j] for j in range(pc + 1, ncols) if row[j] and x[j]), Fraction(0))
            x[pc] = -s / row[pc]
        basis.append(primitive(x))
    return basis


def solve(matrix, rhs):
    """Unique solution of a square nonsingular rational system, else None."""
    n = len(matrix)
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rows, pivots = echelon(aug)
    if pivots[:n] != list(range(n)) or len(pivots) > n:
        return None
    x = [Fraction(0)] * n
    for r in range(n - 1, -1, -1):
        row = rows[r]
        s = row[n] - sum((row[j] * x[j] for j in range(r + 1, n)), Fraction(0))
        x[r] = Fraction(s) / row[r]
    return x


def det(matrix):
    """Determinant by Bareiss elimination (last pivot of the echelon form)."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    ints = []
    scale = Fraction(1)
    for row in matrix:
        row = [as_rational(x) for x in row]
        d = lcm(*(x.denominator for x in row))
        scale /= d
        ints.append([x.numerator * (d // x.denominator) for x in row])
    # square Bareiss; row swaps flip the sign
    m = [list(r) for r in ints]
    sign = 1
    prev = 1
    for c in range(n):
        p = c
        while p < n and m[p][c] == 0:
            p += 1
        if p == n:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            sign = -sign
        piv = m[c][c]
        for i in range(c + 1, n):
            lead = m[i][c]
            row = m[i]
            for j in range(c + 1, n):
                row[j] = (piv * row[j] - lead * m[c][j]) // prev
            row[c] = 0
        prev = piv
    return sign * m[n - 1][n - 1] * scale
