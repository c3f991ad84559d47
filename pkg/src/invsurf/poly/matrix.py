"""Determinants, characteristic polynomials and Sylvester resultants."""

from invsurf import errors
from invsurf.exact.tower import FieldElem
from invsurf.poly.mpoly import NEG_INF, MPoly, _union_tower


class SquareMatrix:
    """Square matrix of field elements."""

    __slots__ = ("rows", "size", "field")

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise errors.DimensionMismatch("matrix is not square")
        field = _union_tower([x for r in rows for x in r if isinstance(x, FieldElem)])
        self.rows = tuple(tuple(field(x) for x in r) for r in rows)
        self.size = n
        self.field = field

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, SquareMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"SquareMatrix({[[str(x) for x in r] for r in self.rows]})"

    def apply(self, vec):
        return [sum((a * b for a, b in zip(row, vec)), self.field.zero) for row in self.rows]

    def det(self):
        return bareiss_det([list(r) for r in self.rows], lambda a, b: a / b)

    def inverse(self):
        n = self.size
        aug = [list(r) + [self.field.one if i == j else self.field.zero for j in range(n)]
               for i, r in enumerate(self.rows)]
        for c in range(n):
            p = next((r for r in range(c, n) if aug[r][c]), None)
            if p is None:
                raise errors.DivisionByZero("singular matrix")
            aug[c], aug[p] = aug[p], aug[c]
            inv = aug[c][c].inverse()
            aug[c] = [x * inv for x in aug[c]]
            for r in range(n):
                if r != c and aug[r][c]:
                    f = aug[r][c]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
        return SquareMatrix([row[n:] for row in aug])

    def transpose(self):
        return SquareMatrix(list(zip(*self.rows)))


def bareiss_det(m, exact_div):
    """Fraction-free determinant over an integral domain.

    ``exact_div(a, b)`` must return a/b when b divides a.  Rows are swapped
    when a pivot vanishes; each swap flips the sign.
    """
    m = [list(r) for r in m]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = None
    for c in range(n - 1):
        p = next((r for r in range(c, n) if m[r][c]), None)
        if p is None:
            return m[0][0] * 0
        if p != c:
            m[c], m[p] = m[p], m[c]
            sign = -sign
        piv = m[c][c]
        for i in range(c + 1, n):
            row = m[i]
            lead = row[c]
            for j in range(c + 1, n):
                v = piv * row[j] - lead * m[c][j]
                row[j] = v if prev is None else exact_div(v, prev)
            row[c] = row[c] * 0
        prev = piv
    d = m[n - 1][n - 1]
    return d if sign > 0 else -d


def _poly_div(a, b):
    q = a.divide_exact(b)
    if q is None:
        raise ArithmeticError("inexact division in fraction-free elimination")
    return q


def poly_det(m):
    """Determinant of a matrix of MPolys (all in the same variables)."""
    return bareiss_det(m, _poly_div)


def char_poly(matrix, nvars=1, var=0):
    """det(t*I - M) as a polynomial in variable ``var``; monic of degree n."""
    if not isinstance(matrix, SquareMatrix):
        matrix = SquareMatrix(matrix)
    n = matrix.size
    field = matrix.field
    t = MPoly.var(nvars, var, field)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            e = MPoly.constant(nvars, -matrix[i, j], field)
            row.append(t + e if i == j else e)
        rows.append(row)
    if n == 0:
        return MPoly.constant(nvars, 1, field)
    return poly_det(rows)


def sylvester_matrix(p, q, var):
    a = p.coefficients_in(var)
    b = q.coefficients_in(var)
    dp, dq = len(a) - 1, len(b) - 1
    size = dp + dq
    zero = MPoly.zero(p.nvars, p.field)
    rows = []
    for i in range(dq):
        row = [zero] * size
        for k, c in enumerate(reversed(a)):
            row[i + k] = c
        rows.append(row)
    for i in range(dp):
        row = [zero] * size
        for k, c in enumerate(reversed(b)):
            row[i + k] = c
        rows.append(row)
    return rows


def sylvester_resultant(p, q, var):
    """Resultant of p and q with respect to x_var (leading coefficients first)."""
    if p.nvars != q.nvars:
        raise errors.DimensionMismatch("resultant inputs live in different rings")
    field = _union_tower([p.field.one, q.field.one])
    p, q = p.over(field), q.over(field)
    dp, dq = p.degree_in(var), q.degree_in(var)
    if dp == NEG_INF or dq == NEG_INF or dp < 1 or dq < 1:
        raise errors.DegenerateInVar(f"both inputs must have positive degree in x{var + 1}")
    return poly_det(sylvester_matrix(p, q, var))
