"""Dense univariate polynomials over a field, as coefficient lists (low degree first)."""

from fractions import Fraction

from invsurf import errors
from invsurf.poly.mpoly import MPoly


def _inv(x):
    return x.inverse() if hasattr(x, "inverse") else Fraction(1) / x


def trim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def degree(p):
    return len(trim(p)) - 1


def from_mpoly(poly, var=0):
    """Coefficients of a polynomial that involves only variable ``var``."""
    if any(i != var for i in poly.variables()):
        raise errors.DimensionMismatch("polynomial involves more than one variable")
    d = poly.degree_in(var)
    if not poly:
        return []
    out = [poly.field.zero] * (d + 1)
    for e, c in poly.terms.items():
        out[e[var]] = c
    return out


def to_mpoly(coeffs, nvars=1, var=0, field=None):
    terms = {}
    for k, c in enumerate(coeffs):
        if c:
            e = [0] * nvars
            e[var] = k
            terms[tuple(e)] = c
    return MPoly(nvars, terms, field)


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p):
    return trim([c * k for k, c in enumerate(p)][1:])


def divmod_poly(a, b):
    a, b = trim(a), trim(b)
    if not b:
        raise errors.ZeroDivisor("division by the zero polynomial")
    inv = _inv(b[-1])
    q = [0] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    for k in range(len(a) - len(b), -1, -1):
        c = r[k + len(b) - 1] * inv
        q[k] = c
        if c:
            for j, bj in enumerate(b):
                r[k + j] = r[k + j] - c * bj
    return trim(q), trim(r[: len(b) - 1])


def monic(p):
    p = trim(p)
    if not p:
        return p
    inv = _inv(p[-1])
    return [c * inv for c in p]


def gcd(a, b):
    a, b = trim(a), trim(b)
    while b:
        _, r = divmod_poly(a, b)
        a, b = b, r
    return monic(a)


def squarefree_part(p):
    g = gcd(p, derivative(p))
    if degree(g) <= 0:
        return monic(p)
    q, _ = divmod_poly(p, g)
    return monic(q)


def mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
    return trim(out)


def from_roots(roots):
    p = [1]
    for r in roots:
        p = mul(p, [-r, 1])
    return p
