"""Shared test utilities: sympy conversions (the independent oracle) and seeded generators."""

import random
from fractions import Fraction

import sympy as sp

from invsurf.exact.quadext import QuadElem
from invsurf.exact.tower import FieldElem, create_tower
from invsurf.poly.mpoly import MPoly

SURD_TOWER = create_tower([2, 3, 5])


def to_sympy(x):
    """Exact sympy value of an int, Fraction, FieldElem or QuadElem."""
    if isinstance(x, (int, Fraction)):
        return sp.Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else sp.Integer(x)
    if isinstance(x, QuadElem):
        return to_sympy(x.u) + to_sympy(x.v) * sp.sqrt(to_sympy(x.ext.radicand))
    t = x.tower
    total = sp.Integer(0)
    for mask, c in enumerate(x.coords):
        if c:
            term = sp.Rational(c.numerator, c.denominator)
            for b in range(t.k):
                if mask >> b & 1:
                    term *= sp.sqrt(t.discriminants[b])
            total += term
    return total


def sympy_equal(a, b):
    diff = sp.expand(a - b)
    if diff == 0:
        return True
    return sp.simplify(sp.expand(sp.radsimp(diff))) == 0


def poly_to_sympy(p, syms):
    total = sp.Integer(0)
    for e, c in p.terms.items():
        mono = sp.Integer(1)
        for s, k in zip(syms, e):
            mono *= s ** k
        total += to_sympy(c) * mono
    return sp.expand(total)


def rand_fraction(rng, r=9, allow_zero=True):
    while True:
        num = rng.randint(-r, r)
        if num or allow_zero:
            return Fraction(num, rng.randint(1, r))


def rand_elem(rng, tower, r=9):
    return tower.from_coords([rand_fraction(rng, r) for _ in range(tower.size)])


def rand_poly(rng, n, degree, tower=None, terms=5, r=9, min_degree=0):
    tower = tower or create_tower([])
    out = {}
    for _ in range(terms):
        d = rng.randint(min_degree, degree)
        e = [0] * n
        for _ in range(d):
            e[rng.randrange(n)] += 1
        out[tuple(e)] = rand_elem(rng, tower, r) if tower.k else rand_fraction(rng, r)
    return MPoly(n, out, tower)


def zero_pattern_gamma(rng, r=9):
    """Random rational gamma with gamma_13 = gamma_21 = gamma_32 = 0, det A != 0."""
    from invsurf.distinguished import GammaSpec

    while True:
        g = [[rand_fraction(rng, r, allow_zero=False) for _ in range(3)] for _ in range(3)]
        g[0][2] = g[1][0] = g[2][1] = Fraction(0)
        if GammaSpec(g).matrix_a().det():
            return g


def seeds(count, base=0):
    return [random.Random(base * 100003 + i) for i in range(count)]
