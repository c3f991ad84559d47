"""Homogenization, charts at infinity and the projective reduction of dimension."""

from invsurf import errors
from invsurf.exact.tower import FieldElem
from invsurf.poly.matrix import SquareMatrix
from invsurf.poly.mpoly import NEG_INF, MPoly, _union_tower
from invsurf.poly.vfield import PolyVectorField


def homogenize(psi, degree=None):
    """Lift psi (n vars) to a homogeneous polynomial in n+1 vars.

    ``degree`` defaults to deg(psi); a larger value pads with powers of the
    new last variable.
    """
    if not psi:
        raise errors.ZeroPolynomial("cannot homogenize the zero polynomial")
    r = psi.degree() if degree is None else degree
    if r < psi.degree():
        raise ValueError(f"degree {r} is below the polynomial degree {psi.degree()}")
    terms = {e + (r - sum(e),): c for e, c in psi.terms.items()}
    return MPoly._raw(psi.nvars + 1, terms, psi.field)


def dehomogenize_first(poly):
    """Set the first variable to 1 and drop it: poly(1, y2, ..., y_k) in k-1 vars."""
    out = {}
    for e, c in poly.terms.items():
        ne = e[1:]
        s = out.get(ne)
        out[ne] = c if s is None else s + c
    return MPoly._raw(poly.nvars - 1, {e: c for e, c in out.items() if c}, poly.field)


def normalize_direction(v):
    """Scale so the first nonzero coordinate is 1."""
    field = _union_tower([x for x in v if isinstance(x, FieldElem)])
    v = [field(x) for x in v]
    for x in v:
        if x:
            inv = x.inverse()
            return [y * inv for y in v]
    raise errors.ZeroVector("direction vector is zero")


class PoincareChart:
    """Direction v with a transition matrix T satisfying T v = e1.

    T is the inverse of the matrix whose columns are v followed by the unit
    vectors e_i for every i other than the first nonzero slot of v.
    """

    __slots__ = ("direction", "T", "T_inv", "pivot", "field")

    def __init__(self, v):
        field = _union_tower([x for x in v if isinstance(x, FieldElem)])
        v = [field(x) for x in v]
        n = len(v)
        pivot = next((i for i, x in enumerate(v) if x), None)
        if pivot is None:
            raise errors.ZeroVector("direction vector is zero")
        others = [i for i in range(n) if i != pivot]
        cols = [v] + [[field.one if r == i else field.zero for r in range(n)] for i in others]
        m_inv = SquareMatrix([[cols[c][r] for c in range(n)] for r in range(n)])
        self.direction = tuple(v)
        self.T_inv = m_inv
        self.T = m_inv.inverse()
        self.pivot = pivot
        self.field = field
        if self.T.apply(v) != [field.one] + [field.zero] * (n - 1):
            raise errors.VerificationFailed("chart does not send v to e1")

    @property
    def n(self):
        return len(self.direction)

    def to_json(self):
        return {
            "direction": [str(x) for x in self.direction],
            "T": [[str(x) for x in row] for row in self.T.rows],
            "T_inverse": [[str(x) for x in row] for row in self.T_inv.rows],
        }


def _linear_images(matrix, nvars, field):
    """Polynomials y -> (matrix y)_i as MPolys."""
    ys = MPoly.gens(nvars, field)
    out = []
    for row in matrix.rows:
        acc = MPoly.zero(nvars, field)
        for a, y in zip(row, ys):
            if a:
                acc = acc + y * a
        out.append(acc)
    return out


def _chart_field(psi_field, chart):
    return _union_tower([psi_field.one, chart.field.one])


def pullback(psi, chart):
    """psi composed with T^-1."""
    field = _chart_field(psi.field, chart)
    return psi.over(field).compose(_linear_images(chart.T_inv, psi.nvars, field), psi.nvars)


def poincare_poly(psi, chart=None):
    """Poincare transform of psi in the chart of ``chart.direction``.

    The result lives in n variables standing for x2, ..., x_(n+1).
    """
    if not psi:
        raise errors.ZeroPolynomial("cannot transform the zero polynomial")
    phi = psi if chart is None else pullback(psi, chart)
    return dehomogenize_first(homogenize(phi, psi.degree()))


def conjugate_field(f, chart):
    """The field y -> T f(T^-1 y)."""
    field = _chart_field(f.field, chart)
    images = _linear_images(chart.T_inv, f.n, field)
    pulled = [c.over(field).compose(images, f.n) for c in f.components]
    out = []
    for row in chart.T.rows:
        acc = MPoly.zero(f.n, field)
        for a, p in zip(row, pulled):
            if a:
                acc = acc + p * a
        out.append(acc)
    return PolyVectorField(out)


def poincare_field(f, chart=None):
    """Poincare transform of the vector field f in the chart of ``chart.direction``.

    Components are -g1* x_j + g_j* for j = 2..n and -g1* x_(n+1), where
    g is the degree-m homogenization of T f T^-1 and * means x1 := 1.
    """
    if f.m == NEG_INF:
        raise errors.ZeroPolynomial("the zero vector field has no transform")
    h = f if chart is None else conjugate_field(f, chart)
    m = f.m
    n = f.n
    g = []
    for c in h.components:
        if c:
            g.append(dehomogenize_first(homogenize(c, m)))
        else:
            g.append(MPoly.zero(n, h.field))
    zs = MPoly.gens(n, h.field)
    comps = [g[j] - g[0] * zs[j - 1] for j in range(1, n)]
    comps.append(-(g[0] * zs[n - 1]))
    return PolyVectorField(comps)


def reduce_dim(p):
    """q_i(y) = p_i(y, 1) - y_i p_n(y, 1) for a homogeneous field p in n >= 2 variables."""
    if not p.is_homogeneous():
        raise errors.NotHomogeneous("reduction needs a homogeneous vector field")
    n = p.n
    if n < 2:
        raise errors.UnsupportedDimension("reduction needs n >= 2")
    ys = MPoly.gens(n - 1, p.field)

    def at_one(c):
        out = {}
        for e, x in c.terms.items():
            ne = e[:-1]
            s = out.get(ne)
            out[ne] = x if s is None else s + x
        return MPoly._raw(n - 1, {e: x for e, x in out.items() if x}, p.field)

    last = at_one(p.components[-1])
    return PolyVectorField([at_one(p.components[i]) - ys[i] * last for i in range(n - 1)])
