"""Deterministic text rendering that the parser reads back exactly."""

from fractions import Fraction

from invsurf.exact.tower import FieldElem


def _rat(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_coefficient(c):
    """Field element as a sum over the canonical basis, e.g. ``1/2*sqrt2 - sqrt3``."""
    if isinstance(c, (int, Fraction)):
        return _rat(c)
    if not isinstance(c, FieldElem):
        return str(c)
    tower = c.tower
    parts = []
    for mask, q in enumerate(c.coords):
        if not q:
            continue
        name = tower.basis_name(mask)
        mag = abs(q)
        if mask == 0:
            body = _rat(mag)
        elif mag == 1:
            body = name
        else:
            body = f"{_rat(mag)}*{name}"
        parts.append(("-" if q < 0 else "+", body))
    if not parts:
        return "0"
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _monomial(exp, names):
    factors = []
    for name, k in zip(names, exp):
        if k == 1:
            factors.append(name)
        elif k > 1:
            factors.append(f"{name}^{k}")
    return "*".join(factors)


def _leading_sign(c):
    for x in c.num:
        if x:
            return -1 if x < 0 else 1
    return 1


def print_poly(poly, ctx=None):
    """Terms in decreasing graded reverse lex order; ``0`` for the zero polynomial."""
    if ctx is None:
        names = [f"x{i + 1}" for i in range(poly.nvars)]
    else:
        names = list(ctx.var_names)
    if not poly.terms:
        return "0"
    pieces = []
    for exp, c in poly.sorted_terms():
        sign = _leading_sign(c)
        mag = -c if sign < 0 else c
        mono = _monomial(exp, names)
        if mag.is_rational():
            q = mag.rational_value()
            if not mono:
                body = _rat(q)
            elif q == 1:
                body = mono
            else:
                body = f"{_rat(q)}*{mono}"
        else:
            coef = format_coefficient(mag)
            body = f"({coef})*{mono}" if mono else f"({coef})"
        pieces.append(("-" if sign < 0 else "+", body))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out
