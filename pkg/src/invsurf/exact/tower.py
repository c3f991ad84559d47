"""Multiquadratic number fields Q(sqrt d1, ..., sqrt dk).

Elements are stored as integer coordinate vectors over the subset-product
basis plus one positive common denominator.  Basis index ``S`` is a bitmask
over the generators (bit ``i`` <-> ``d_(i+1)``), so the basis of
``[2, 3, 5]`` is ``1, sqrt2, sqrt3, sqrt6, sqrt5, sqrt10, sqrt15, sqrt30``.
"""

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from math import isqrt, lcm, prod

from invsurf import errors
from invsurf._native import int_echelon, mq_mul, normalize

MAX_GENERATORS = 4


def _is_square_int(n):
    return n >= 0 and isqrt(n) ** 2 == n


def _is_square_free(d):
    d = abs(d)
    if d < 2:
        return d == 1
    f = 2
    while f * f <= d:
        if d % (f * f) == 0:
            return False
        if d % f == 0:
            d //= f
        f += 1 if f == 2 else 2
    return True


class FieldTower:
    """Q adjoined square roots of square-free integers, at most four of them."""

    __slots__ = ("discriminants", "k", "size", "scale", "_parent", "_zero", "_one")

    def __init__(self, discriminants):
        self.discriminants = tuple(discriminants)
        self.k = len(self.discriminants)
        self.size = 1 << self.k
        n = self.size
        self.scale = tuple(
            prod(self.discriminants[b] for b in range(self.k) if (i & j) >> b & 1)
            for i in range(n)
            for j in range(n)
        )
        self._parent = None
        self._zero = None
        self._one = None

    def __repr__(self):
        return f"FieldTower({list(self.discriminants)})"

    def __eq__(self, other):
        return isinstance(other, FieldTower) and self.discriminants == other.discriminants

    def __hash__(self):
        return hash(("FieldTower", self.discriminants))

    @property
    def degree(self):
        return self.size

    @property
    def parent(self):
        """The tower without its last generator."""
        if self._parent is None:
            self._parent = create_tower(self.discriminants[:-1])
        return self._parent

    def basis_value(self, mask):
        return prod(self.discriminants[b] for b in range(self.k) if mask >> b & 1)

    def basis_names(self):
        return [self.basis_name(s) for s in range(self.size)]

    def basis_name(self, mask):
        if mask == 0:
            return "1"
        gens = [self.discriminants[b] for b in range(self.k) if mask >> b & 1]
        if all(g > 0 for g in gens):
            return f"sqrt{prod(gens)}"
        return "*".join(f"sqrt({g})" if g < 0 else f"sqrt{g}" for g in gens)

    @property
    def zero(self):
        if self._zero is None:
            self._zero = FieldElem._raw(self, [0] * self.size, 1)
        return self._zero

    @property
    def one(self):
        if self._one is None:
            self._one = FieldElem._raw(self, [1] + [0] * (self.size - 1), 1)
        return self._one

    def gen(self, i):
        """sqrt of the i-th discriminant (0-based)."""
        return self.basis(1 << i)

    def basis(self, mask):
        num = [0] * self.size
        num[mask] = 1
        return FieldElem._raw(self, num, 1)

    def __call__(self, value):
        """Coerce an int, Fraction or element of a subtower into this tower."""
        if isinstance(value, FieldElem):
            return value.promote(self)
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, (int, Fraction)):
            value = Fraction(value)
            num = [0] * self.size
            num[0] = value.numerator
            return FieldElem._raw(self, num, value.denominator)
        raise TypeError(f"cannot coerce {value!r} into {self!r}")

    def from_coords(self, coords):
        return FieldElem(self, coords)

    def contains(self, other):
        return set(other.discriminants) <= set(self.discriminants)

    def embedding_map(self, sub):
        """Basis index map from subtower ``sub`` into this tower."""
        pos = [self.discriminants.index(d) for d in sub.discriminants]
        out = []
        for s in range(sub.size):
            t = 0
            for b in range(sub.k):
                if s >> b & 1:
                    t |= 1 << pos[b]
            out.append(t)
        return out

    def to_json(self):
        return list(self.discriminants)


@lru_cache(maxsize=None)
def _tower(discs):
    return FieldTower(discs)


def create_tower(discriminants=()):
    """Validated tower; ``[]`` is Q itself.

    Raises RedundantGenerator when a square root already lies in the
    partial tower (``[2, 8]``), NotSquareFree for 0 or non-square-free
    integers, TowerTooLarge beyond four generators.
    """
    discs = tuple(int(d) for d in discriminants)
    if len(discs) > MAX_GENERATORS:
        raise errors.TowerTooLarge(f"at most {MAX_GENERATORS} generators supported", discriminants=discs)
    for i, d in enumerate(discs):
        if d == 0:
            raise errors.NotSquareFree("0 is not a valid discriminant", discriminant=d)
        prev = discs[:i]
        for mask in range(1 << len(prev)):
            p = prod(prev[b] for b in range(len(prev)) if mask >> b & 1)
            if _is_square_int(d * p):
                raise errors.RedundantGenerator(
                    f"sqrt({d}) already lies in Q(sqrt of {list(prev)})", discriminant=d
                )
        if not _is_square_free(d):
            raise errors.NotSquareFree(f"{d} is not square-free", discriminant=d)
    return _tower(discs)


QQ = create_tower(())


class FieldElem:
    """Immutable element of a FieldTower."""

    __slots__ = ("tower", "num", "den", "_inv")

    def __init__(self, tower, coords):
        coords = [Fraction(c) for c in coords]
        if len(coords) != tower.size:
            raise ValueError(f"expected {tower.size} coordinates, got {len(coords)}")
        den = lcm(*(c.denominator for c in coords))
        num, den = normalize([c.numerator * (den // c.denominator) for c in coords], den)
        self.tower = tower
        self.num = tuple(num)
        self.den = den
        self._inv = None

    @classmethod
    def _raw(cls, tower, num, den):
        self = object.__new__(cls)
        num, den = normalize(num, den)
        self.tower = tower
        self.num = tuple(num)
        self.den = den
        self._inv = None
        return self

    # -- inspection ------------------------------------------------------
    @property
    def coords(self):
        return tuple(Fraction(n, self.den) for n in self.num)

    def is_rational(self):
        return not any(self.num[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self.num[0], self.den)

    def __bool__(self):
        return any(self.num)

    def __repr__(self):
        return f"FieldElem({self.tower.to_json()}, {[str(c) for c in self.coords]})"

    def __str__(self):
        from invsurf.parse_io.printer import format_coefficient

        return format_coefficient(self)

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self.num[0], self.den))
        return hash((self.tower.discriminants, self.num, self.den))

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            if other.tower is not self.tower and other.tower != self.tower:
                try:
                    a, b = _common(self, other)
                except errors.TowerMismatch:
                    return False
                return a.num == b.num and a.den == b.den
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    # -- coercion --------------------------------------------------------
    def promote(self, tower):
        if tower is self.tower or tower == self.tower:
            return self
        if not tower.contains(self.tower):
            raise errors.TowerMismatch(f"{self.tower!r} does not embed into {tower!r}")
        idx = tower.embedding_map(self.tower)
        num = [0] * tower.size
        for s, t in enumerate(idx):
            num[t] = self.num[s]
        return FieldElem._raw(tower, num, self.den)

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.tower is self.tower or other.tower == self.tower:
                return self, other
            return _common(self, other)
        if isinstance(other, (int, Fraction)):
            return self, self.tower(other)
        return None

    # -- arithmetic ------------------------------------------------------
    def __neg__(self):
        return FieldElem._raw(self.tower, [-x for x in self.num], self.den)

    def __pos__(self):
        return self

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if a.den == b.den:
            return FieldElem._raw(a.tower, [x + y for x, y in zip(a.num, b.num)], a.den)
        return FieldElem._raw(
            a.tower, [x * b.den + y * a.den for x, y in zip(a.num, b.num)], a.den * b.den
        )

    __radd__ = __add__

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a + (-b)

    def __rsub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b + (-a)

    def __mul__(self, other):
        if isinstance(other, int):
            return FieldElem._raw(self.tower, [x * other for x in self.num], self.den)
        if isinstance(other, Fraction):
            return FieldElem._raw(
                self.tower, [x * other.numerator for x in self.num], self.den * other.denominator
            )
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if a.tower.k == 0:
            return FieldElem._raw(a.tower, [a.num[0] * b.num[0]], a.den * b.den)
        return FieldElem._raw(a.tower, mq_mul(a.num, b.num, a.tower.scale), a.den * b.den)

    __rmul__ = __mul__

    def inverse(self):
        if self._inv is None:
            if not any(self.num):
                raise errors.DivisionByZero("inverse of zero")
            self._inv = _solve_mul(self, self.tower.one)
        return self._inv

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise errors.DivisionByZero("division by zero")
            other = Fraction(other)
            return FieldElem._raw(
                self.tower, [x * other.denominator for x in self.num], self.den * other.numerator
            )
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b * a.inverse()

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = self.tower.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- conjugation and numerics ---------------------------------------
    def conjugate(self, i):
        """Apply the automorphism sqrt(d_i) -> -sqrt(d_i)."""
        bit = 1 << i
        return FieldElem._raw(
            self.tower, [-x if s & bit else x for s, x in enumerate(self.num)], self.den
        )

    def to_decimal(self, digits=30):
        """Principal complex embedding as a pair of Decimals (real, imag)."""
        return _decimal_value(self, digits)

    def to_json(self):
        return {"tower": self.tower.to_json(), "coords": [str(c) for c in self.coords]}

    @classmethod
    def from_json(cls, obj):
        tower = create_tower(obj.get("tower", []))
        return cls(tower, [Fraction(c) for c in obj["coords"]])


def _common(a, b):
    ta, tb = a.tower, b.tower
    if tb.contains(ta):
        return a.promote(tb), b
    if ta.contains(tb):
        return a, b.promote(ta)
    raise errors.TowerMismatch(f"{ta!r} and {tb!r} have no common tower")


def _solve_mul(b, a):
    """x with b*x = a, by elimination on the multiplication matrix of b."""
    tower = b.tower
    n = tower.size
    if n == 1:
        return FieldElem._raw(tower, [a.num[0] * b.den], a.den * b.num[0])
    scale = tower.scale
    # column t of b*e_t: (b*e_t)[u ^ t] = b[u] * scale(u, t)
    mat = [[0] * (n + 1) for _ in range(n)]
    for t in range(n):
        for u in range(n):
            bu = b.num[u]
            if bu:
                mat[u ^ t][t] = bu * scale[u * n + t]
    for s in range(n):
        mat[s][n] = a.num[s]
    rows, pivots = int_echelon(mat, n + 1)
    if len(pivots) != n or pivots[-1] != n - 1:
        raise errors.DivisionByZero("singular multiplication matrix")
    x = [Fraction(0)] * n
    for r in range(n - 1, -1, -1):
        row = rows[r]
        acc = Fraction(row[n])
        for j in range(r + 1, n):
            if row[j]:
                acc -= row[j] * x[j]
        x[r] = acc / row[r]
    # b = num_b / den_b, a = num_a / den_a: x_true = x * den_b / den_a
    factor = Fraction(b.den, a.den)
    return FieldElem(tower, [c * factor for c in x])


# -- square roots ---------------------------------------------------------


@dataclass(frozen=True)
class Square:
    root: object

    @property
    def is_square(self):
        return True


@dataclass(frozen=True)
class NotSquare:
    exact: bool = True
    precision_bits: int | None = None

    @property
    def is_square(self):
        return False


def _split(a):
    """a = u + v*sqrt(d_k) with u, v in the parent tower."""
    tower = a.tower
    half = tower.size >> 1
    parent = tower.parent
    u = FieldElem._raw(parent, list(a.num[:half]), a.den)
    v = FieldElem._raw(parent, list(a.num[half:]), a.den)
    return u, v


def _join(tower, u, v):
    u = u.promote(tower.parent)
    v = v.promote(tower.parent)
    den = u.den * v.den
    num = [x * v.den for x in u.num] + [y * u.den for y in v.num]
    return FieldElem._raw(tower, num, den)


def _sqrt_rational(q):
    q = Fraction(q)
    if q < 0:
        return None
    p, d = q.numerator, q.denominator
    rp, rd = isqrt(p), isqrt(d)
    if rp * rp == p and rd * rd == d:
        return Fraction(rp, rd)
    return None


def _sqrt_elem(a):
    tower = a.tower
    if tower.k == 0:
        r = _sqrt_rational(Fraction(a.num[0], a.den))
        return None if r is None else tower(r)
    if not a:
        return tower.zero
    d = tower.discriminants[-1]
    parent = tower.parent
    u, v = _split(a)
    if not v:
        x = _sqrt_elem(u)
        if x is not None:
            return x.promote(tower)
        y = _sqrt_elem(u / d)
        if y is not None:
            return _join(tower, parent.zero, y)
        return None
    # (x + y sqrt d)^2 = a  =>  (x^2 - d y^2)^2 = u^2 - d v^2
    n = _sqrt_elem(u * u - v * v * d)
    if n is None:
        return None
    for s in (n, -n):
        x = _sqrt_elem((u + s) / 2)
        if x is None or not x:
            continue
        y = v / (x * 2)
        r = _join(tower, x, y)
        if r * r == a:
            return r
    return None


def _canonical_sign(r):
    for x in r.num:
        if x:
            return r if x > 0 else -r
    return r


def sqrt_in_field(a):
    """Decide whether ``a`` is a square in its own field.

    Returns ``Square(root)`` (first nonzero coordinate of the root positive)
    or ``NotSquare``.  The decision is exact in both directions: it descends
    the tower through the norm map, so no precision bound is involved.
    """
    if isinstance(a, (int, Fraction)):
        if a == 0:
            raise errors.ZeroRadicand("square root of zero requested")
        r = _sqrt_rational(a)
        return NotSquare() if r is None else Square(r)
    if not a:
        raise errors.ZeroRadicand("square root of zero requested")
    r = _sqrt_elem(a)
    if r is None:
        return NotSquare()
    return Square(_canonical_sign(r))


# -- decimal rendering ----------------------------------------------------


def _decimal_value(a, digits):
    with localcontext() as ctx:
        ctx.prec = digits + 15
        tower = a.tower
        gens = []
        for d in tower.discriminants:
            root = Decimal(abs(d)).sqrt()
            gens.append((Decimal(0), root) if d < 0 else (root, Decimal(0)))
        re = Decimal(0)
        im = Decimal(0)
        for s, n in enumerate(a.num):
            if not n:
                continue
            br, bi = Decimal(1), Decimal(0)
            for b in range(tower.k):
                if s >> b & 1:
                    gr, gi = gens[b]
                    br, bi = br * gr - bi * gi, br * gi + bi * gr
            re += n * br
            im += n * bi
        re /= a.den
        im /= a.den
    with localcontext() as ctx:
        ctx.prec = digits
        return (+re, +im)


def format_decimal(value, digits=30):
    """Render a FieldElem, Fraction or int as a decimal string."""
    if isinstance(value, (int, Fraction)):
        with localcontext() as ctx:
            ctx.prec = digits
            return str(Decimal(Fraction(value).numerator) / Decimal(Fraction(value).denominator))
    if hasattr(value, "to_decimal"):
        re, im = value.to_decimal(digits)
        if im == 0:
            return str(re)
        sign = "+" if im >= 0 else "-"
        return f"{re} {sign} {abs(im)}*I"
    raise TypeError(f"cannot render {value!r}")
