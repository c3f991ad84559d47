"""Rational roots of univariate polynomials over Q."""

from fractions import Fraction
from math import gcd, isqrt, lcm

import mpmath

from invsurf.poly import univariate as uv


def _primitive(coeffs):
    coeffs = [Fraction(c) for c in coeffs]
    d = lcm(*(c.denominator for c in coeffs))
    ints = [int(c * d) for c in coeffs]
    g = gcd(*ints)
    return [x // g for x in ints]


def _evaluate(ints, x):
    acc = Fraction(0)
    for c in reversed(ints):
        acc = acc * x + c
    return acc


def rational_roots(coeffs):
    """Distinct rational roots, ascending.  ``coeffs`` run from low to high degree.

    A rational root p/q in lowest terms of a primitive integer polynomial has
    q dividing the leading coefficient, so a numerical root approximated
    within 1/(2 lc^2) snaps to it; every candidate is confirmed exactly.
    """
    p = uv.trim([Fraction(c) for c in coeffs])
    if len(p) <= 1:
        return []
    roots = set()
    if not p[0]:
        roots.add(Fraction(0))
        while p and not p[0]:
            p = p[1:]
    if len(p) <= 1:
        return sorted(roots)
    p = uv.squarefree_part(p)
    ints = _primitive(p)
    deg = len(ints) - 1
    if deg == 1:
        roots.add(Fraction(-ints[0], ints[1]))
    elif deg == 2:
        c, b, a = ints
        disc = b * b - 4 * a * c
        if disc >= 0 and isqrt(disc) ** 2 == disc:
            r = isqrt(disc)
            roots.update({Fraction(-b + r, 2 * a), Fraction(-b - r, 2 * a)})
    else:
        lc = abs(ints[-1])
        size = max(len(str(abs(x))) for x in ints)
        with mpmath.workdps(max(40, mpmath.mp.dps, 3 * size + 2 * len(str(lc)) + 20)):
            approx = mpmath.polyroots(list(reversed(ints)), maxsteps=400, extraprec=4 * size + 200)
            for z in approx:
                if abs(mpmath.im(z)) > mpmath.mpf(1) / (4 * lc * lc + 4):
                    continue
                re = mpmath.re(z)
                cand = Fraction(str(mpmath.nstr(re, mpmath.mp.dps, strip_zeros=False))).limit_denominator(lc)
                if _evaluate(ints, cand) == 0:
                    roots.add(cand)
    return sorted(roots)
