"""One quadratic extension K(sqrt A) on top of a multiquadratic tower."""

from fractions import Fraction
from math import gcd, isqrt

from invsurf import errors
from invsurf.exact.tower import FieldElem, Square, sqrt_in_field


TRIAL_BOUND = 1 << 16


def _largest_square_divisor(n):
    """Largest s with s^2 | n, found among primes below TRIAL_BOUND.

    A leftover cofactor that is itself a perfect square is absorbed too;
    square factors made of two large primes are left in place.
    """
    n = abs(n)
    out = 1
    f = 2
    while f * f <= n and f < TRIAL_BOUND:
        while n % (f * f) == 0:
            n //= f * f
            out *= f
        if n % f == 0:
            n //= f
        f += 1 if f == 2 else 2
    r = isqrt(n)
    if r > 1 and r * r == n:
        out *= r
    return out


def canonical_radicand(a):
    """Rescale ``a`` by a rational square: integral coords, small square factors removed.

    Returns ``(A, c)`` with ``a == c**2 * A``.
    """
    tower = a.tower
    # a = num/den; multiply by den^2 -> num*den (integral), then strip squares
    ints = [x * a.den for x in a.num]
    g = gcd(*ints)
    s = _largest_square_divisor(g)
    A = FieldElem._raw(tower, [x // (s * s) for x in ints], 1)
    c = Fraction(s, a.den)
    return A, c


class QuadExt:
    """K(sqrt A) for a radicand A certified non-square in K."""

    __slots__ = ("base", "radicand", "certificate")

    def __init__(self, radicand):
        if isinstance(radicand, (int, Fraction)):
            from invsurf.exact.tower import QQ

            radicand = QQ(radicand)
        if not radicand:
            raise errors.ZeroRadicand("radicand must be nonzero")
        res = sqrt_in_field(radicand)
        if isinstance(res, Square):
            raise errors.RadicandIsSquare("radicand is a square in the base field", root=str(res.root))
        self.base = radicand.tower
        self.radicand = radicand
        self.certificate = {"non_square": "exact"}

    def __repr__(self):
        return f"QuadExt({self.radicand!r})"

    def __eq__(self, other):
        return isinstance(other, QuadExt) and self.radicand == other.radicand

    def __hash__(self):
        return hash(("QuadExt", self.radicand))

    def __call__(self, u, v=0):
        return QuadElem(self, self.base(u) if not isinstance(u, FieldElem) else u.promote(self.base),
                        self.base(v) if not isinstance(v, FieldElem) else v.promote(self.base))

    @property
    def sqrt(self):
        return self(0, 1)

    def to_json(self):
        return {"radicand": self.radicand.to_json(), "certificate": dict(self.certificate)}


class QuadElem:
    """u + v*sqrt(A) with u, v in the base tower."""

    __slots__ = ("ext", "u", "v")

    def __init__(self, ext, u, v):
        self.ext = ext
        self.u = u
        self.v = v

    def _lift(self, other):
        if isinstance(other, QuadElem):
            if other.ext != self.ext:
                raise errors.ExtensionTooDeep("elements of two different quadratic extensions")
            return other
        if isinstance(other, (int, Fraction, FieldElem)):
            return QuadElem(self.ext, self.ext.base(other), self.ext.base.zero)
        return None

    def __repr__(self):
        return f"QuadElem({self.u!r}, {self.v!r}, sqrt={self.ext.radicand!r})"

    def __bool__(self):
        return bool(self.u) or bool(self.v)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.u == o.u and self.v == o.v

    def __hash__(self):
        if not self.v:
            return hash(self.u)
        return hash((self.u, self.v, self.ext))

    def __neg__(self):
        return QuadElem(self.ext, -self.u, -self.v)

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.ext, self.u + o.u, self.v + o.v)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.ext, self.u - o.u, self.v - o.v)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a = self.ext.radicand
        return QuadElem(self.ext, self.u * o.u + a * self.v * o.v, self.u * o.v + self.v * o.u)

    __rmul__ = __mul__

    def conjugate(self):
        return QuadElem(self.ext, self.u, -self.v)

    def norm(self):
        return self.u * self.u - self.ext.radicand * self.v * self.v

    def inverse(self):
        n = self.norm()
        if not n:
            raise errors.DivisionByZero("inverse of zero")
        inv = n.inverse()
        return QuadElem(self.ext, self.u * inv, -self.v * inv)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def rational_coords(self):
        """Q-coordinates over the basis (b_i) + (b_i * sqrt A)."""
        return tuple(self.u.coords) + tuple(self.v.coords)

    def to_json(self):
        return {"u": self.u.to_json(), "v": self.v.to_json(), "radicand": self.ext.radicand.to_json()}

    def to_decimal(self, digits=30):
        from decimal import Decimal, localcontext

        ur, ui = self.u.to_decimal(digits + 10)
        vr, vi = self.v.to_decimal(digits + 10)
        ar, ai = self.ext.radicand.to_decimal(digits + 10)
        with localcontext() as ctx:
            ctx.prec = digits + 10
            # principal complex square root of ar + i*ai
            mod = (ar * ar + ai * ai).sqrt()
            sr = ((mod + ar) / 2).sqrt()
            si = ((mod - ar) / 2).sqrt()
            if ai < 0:
                si = -si
            re = ur + vr * sr - vi * si
            im = ui + vr * si + vi * sr
        with localcontext() as ctx:
            ctx.prec = digits
            return (+re, +im)

    def __str__(self):
        return f"({self.u}) + ({self.v})*sqrt({self.ext.radicand})"
