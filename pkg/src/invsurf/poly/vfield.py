"""Polynomial vector fields and the derivation they induce."""

from invsurf import errors
from invsurf.exact.tower import QQ
from invsurf.poly.mpoly import NEG_INF, MPoly, _union_tower


class PolyVectorField:
    """n polynomial components in n variables, with cached homogeneous parts."""

    __slots__ = ("n", "components", "m", "field", "_parts")

    def __init__(self, components):
        components = list(components)
        if not components:
            raise errors.DimensionMismatch("a vector field needs at least one component")
        n = len(components)
        for c in components:
            if c.nvars != n:
                raise errors.DimensionMismatch(f"component in {c.nvars} variables, expected {n}")
        field = _union_tower([c.field.one for c in components])
        self.components = tuple(c.over(field) for c in components)
        self.n = n
        self.field = field
        deg = max(c.degree() for c in self.components)
        self.m = deg if deg != NEG_INF else NEG_INF
        self._parts = None

    @property
    def parts(self):
        """parts[k][i] is the degree-k homogeneous part of component i."""
        if self._parts is None:
            if self.m == NEG_INF:
                self._parts = []
            else:
                self._parts = [
                    tuple(c.homogeneous_part(k) for c in self.components) for k in range(self.m + 1)
                ]
        return self._parts

    def top(self):
        """The top-degree homogeneous part f^(m) as a vector field."""
        return PolyVectorField(self.parts[self.m])

    def is_homogeneous(self):
        return all(c.is_homogeneous() and (not c or c.degree() == self.m) for c in self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return self.n

    def __eq__(self, other):
        return isinstance(other, PolyVectorField) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return f"PolyVectorField({[str(c) for c in self.components]})"

    def evaluate(self, point):
        return [c.evaluate(point) for c in self.components]

    def jacobian(self, point=None):
        """Matrix of partials; evaluated at ``point`` when one is given."""
        rows = [[c.diff(j) for j in range(self.n)] for c in self.components]
        if point is None:
            return rows
        return [[e.evaluate(point) for e in row] for row in rows]

    def to_json(self):
        return {
            "n": self.n,
            "m": self.m if self.m != NEG_INF else None,
            "tower": self.field.to_json(),
            "components": [c.to_json() for c in self.components],
        }


def lie_derivative(f, psi):
    """X_f(psi) = sum_i f_i * d(psi)/dx_i."""
    if psi.nvars != f.n:
        raise errors.DimensionMismatch(f"polynomial in {psi.nvars} variables, field has n={f.n}")
    total = MPoly.zero(f.n, f.field)
    for i, fi in enumerate(f.components):
        d = psi.diff(i)
        if d:
            total = total + fi * d
    return total


def divergence(f):
    total = MPoly.zero(f.n, f.field if f.field else QQ)
    for i, fi in enumerate(f.components):
        total = total + fi.diff(i)
    return total
