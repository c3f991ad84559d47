"""Sparse multivariate polynomials over a multiquadratic tower."""

from dataclasses import dataclass
from fractions import Fraction

from invsurf import errors
from invsurf._native import poly_mul
from invsurf.exact.tower import QQ, FieldElem, create_tower

NEG_INF = float("-inf")


def grevlex_key(exp):
    """Sort key: larger key means larger monomial in graded reverse lex."""
    return (sum(exp), tuple(-e for e in reversed(exp)))


def _union_tower(values):
    tower = QQ
    for c in values:
        if isinstance(c, FieldElem) and c.tower is not tower:
            if c.tower.contains(tower):
                tower = c.tower
            elif not tower.contains(c.tower):
                discs = list(tower.discriminants) + [
                    d for d in c.tower.discriminants if d not in tower.discriminants
                ]
                tower = create_tower(discs)
    return tower


class MPoly:
    """Immutable polynomial: ``terms`` maps exponent tuples to nonzero FieldElems."""

    __slots__ = ("nvars", "terms", "field", "_lead")

    def __init__(self, nvars, terms=None, field=None):
        terms = terms or {}
        if field is None:
            field = _union_tower(terms.values())
        clean = {}
        for exp, c in terms.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise errors.DimensionMismatch(f"exponent {exp} has wrong length for {nvars} variables")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = field(c)
            if c:
                clean[exp] = clean[exp] + c if exp in clean else c
                if not clean[exp]:
                    del clean[exp]
        self.nvars = nvars
        self.terms = clean
        self.field = field
        self._lead = None

    @classmethod
    def _raw(cls, nvars, terms, field):
        self = object.__new__(cls)
        self.nvars = nvars
        self.terms = terms
        self.field = field
        self._lead = None
        return self

    # -- constructors ----------------------------------------------------
    @classmethod
    def zero(cls, nvars, field=QQ):
        return cls._raw(nvars, {}, field)

    @classmethod
    def constant(cls, nvars, c, field=None):
        if field is None:
            field = c.tower if isinstance(c, FieldElem) else QQ
        c = field(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {}, field)

    @classmethod
    def var(cls, nvars, i, field=QQ):
        exp = [0] * nvars
        exp[i] = 1
        return cls._raw(nvars, {tuple(exp): field.one}, field)

    @classmethod
    def monomial(cls, exp, c=1, field=None):
        return cls(len(exp), {tuple(exp): c}, field)

    @classmethod
    def gens(cls, nvars, field=QQ):
        return [cls.var(nvars, i, field) for i in range(nvars)]

    # -- field handling --------------------------------------------------
    def over(self, field):
        if field is self.field:
            return self
        return MPoly._raw(self.nvars, {e: field(c) for e, c in self.terms.items()}, field)

    def _match(self, other):
        """Coerce ``other`` to an MPoly over a common field."""
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise errors.DimensionMismatch(f"{self.nvars} vs {other.nvars} variables")
            if other.field is self.field:
                return self, other
            field = _union_tower([self.field.one, other.field.one])
            return self.over(field), other.over(field)
        if isinstance(other, (int, Fraction, FieldElem)):
            field = self.field
            if isinstance(other, FieldElem) and not field.contains(other.tower):
                field = _union_tower([field.one, other])
            return self.over(field), MPoly.constant(self.nvars, other, field)
        return None

    # -- inspection ------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and (0,) * self.nvars in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, self.field.zero)

    def coeff(self, exp):
        return self.terms.get(tuple(exp), self.field.zero)

    def degree(self):
        if not self.terms:
            return NEG_INF
        return max(sum(e) for e in self.terms)

    def degree_in(self, i):
        if not self.terms:
            return NEG_INF
        return max(e[i] for e in self.terms)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_part(self, k):
        return MPoly._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == k}, self.field)

    def homogeneous_parts(self):
        """List [f(0), ..., f(deg)] of homogeneous components."""
        d = self.degree()
        if d == NEG_INF:
            return []
        parts = [{} for _ in range(d + 1)]
        for e, c in self.terms.items():
            parts[sum(e)][e] = c
        return [MPoly._raw(self.nvars, p, self.field) for p in parts]

    def sorted_terms(self):
        """Terms in decreasing graded reverse lex order."""
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def leading_term(self):
        if self._lead is None:
            if not self.terms:
                raise errors.ZeroPolynomial("zero polynomial has no leading term")
            exp = max(self.terms, key=grevlex_key)
            self._lead = (exp, self.terms[exp])
        return self._lead

    def variables(self):
        used = set()
        for e in self.terms:
            used.update(i for i, x in enumerate(e) if x)
        return sorted(used)

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                return False
            if other.terms.keys() != self.terms.keys():
                return False
            return all(self.terms[e] == other.terms[e] for e in self.terms)
        if isinstance(other, (int, Fraction, FieldElem)):
            if not other:
                return not self.terms
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"MPoly({self.nvars}, {self})"

    def __str__(self):
        from invsurf.parse_io.printer import print_poly

        return print_poly(self)

    # -- arithmetic ------------------------------------------------------
    def __neg__(self):
        return MPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()}, self.field)

    def __pos__(self):
        return self

    def __add__(self, other):
        pair = self._match(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        out = dict(a.terms)
        for e, c in b.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MPoly._raw(a.nvars, out, a.field)

    __radd__ = __add__

    def __sub__(self, other):
        pair = self._match(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a + (-b)

    def __rsub__(self, other):
        pair = self._match(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b + (-a)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return MPoly.zero(self.nvars, self.field)
            return MPoly._raw(self.nvars, {e: c * other for e, c in self.terms.items()}, self.field)
        pair = self._match(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if len(b.terms) == 1 and b.is_constant():
            c = b.constant_term()
            return MPoly._raw(a.nvars, {e: x * c for e, x in a.terms.items()}, a.field)
        return MPoly._raw(a.nvars, poly_mul(a.terms, b.terms), a.field)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = MPoly.constant(self.nvars, 1, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c):
        return self * c

    def mul_monomial(self, exp, c):
        return MPoly._raw(
            self.nvars,
            {tuple(a + b for a, b in zip(e, exp)): x * c for e, x in self.terms.items()},
            self.field,
        )

    # -- calculus and evaluation ----------------------------------------
    def diff(self, i):
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                ne = e[:i] + (k - 1,) + e[i + 1:]
                out[ne] = c * k
        return MPoly._raw(self.nvars, out, self.field)

    def evaluate(self, point):
        """Value at ``point``; entries may be ints, Fractions, FieldElems or QuadElems."""
        if len(point) != self.nvars:
            raise errors.DimensionMismatch(f"point of length {len(point)} for {self.nvars} variables")
        total = self.field.zero
        powers = [{} for _ in range(self.nvars)]
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    p = powers[i].get(k)
                    if p is None:
                        p = point[i] ** k
                        powers[i][k] = p
                    term = p * term
            total = term + total
        return total

    def __call__(self, *point):
        return self.evaluate(point)

    def specialize(self, i, value):
        """Substitute a constant for variable ``i`` (variable count unchanged)."""
        value = self.field(value) if not isinstance(value, FieldElem) else value
        field = _union_tower([self.field.one, value])
        out = {}
        for e, c in self.terms.items():
            ne = e[:i] + (0,) + e[i + 1:]
            t = field(c) * value ** e[i] if e[i] else field(c)
            s = out.get(ne)
            out[ne] = t if s is None else s + t
        return MPoly._raw(self.nvars, {e: c for e, c in out.items() if c}, field)

    def compose(self, images, nvars=None):
        """Substitute ``images[i]`` (MPolys in ``nvars`` variables) for x_i."""
        if len(images) != self.nvars:
            raise errors.DimensionMismatch("need one image per variable")
        if nvars is None:
            nvars = images[0].nvars if images else 0
        field = _union_tower([self.field.one] + [g.field.one for g in images])
        result = MPoly.zero(nvars, field)
        cache = [{0: MPoly.constant(nvars, 1, field)} for _ in images]

        def power(i, k):
            p = cache[i].get(k)
            if p is None:
                p = power(i, k - 1) * images[i]
                cache[i][k] = p
            return p

        for e, c in self.terms.items():
            term = MPoly.constant(nvars, c, field)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def permute(self, order, nvars=None):
        """Move variable i to slot ``order[i]``."""
        nvars = self.nvars if nvars is None else nvars
        out = {}
        for e, c in self.terms.items():
            ne = [0] * nvars
            for i, k in enumerate(e):
                if k:
                    ne[order[i]] += k
            out[tuple(ne)] = c
        return MPoly._raw(nvars, out, self.field)

    def coefficients_in(self, i):
        """Coefficient list [c_0, c_1, ...] of the polynomial viewed as univariate in x_i."""
        d = self.degree_in(i)
        if d == NEG_INF:
            return []
        buckets = [{} for _ in range(d + 1)]
        for e, c in self.terms.items():
            buckets[e[i]][e[:i] + (0,) + e[i + 1:]] = c
        return [MPoly._raw(self.nvars, b, self.field) for b in buckets]

    # -- division --------------------------------------------------------
    def divide_exact(self, divisor):
        """Quotient if ``divisor`` divides self exactly, else None."""
        a, b = self._match(divisor)
        if not b:
            raise errors.ZeroDivisor("division by the zero polynomial")
        if not a:
            return MPoly.zero(a.nvars, a.field)
        lexp, lc = b.leading_term()
        inv = lc.inverse()
        rem = dict(a.terms)
        quot = {}
        bterms = list(b.terms.items())
        while rem:
            exp = max(rem, key=grevlex_key)
            c = rem[exp]
            shift = tuple(x - y for x, y in zip(exp, lexp))
            if any(s < 0 for s in shift):
                # the leading term of an exact multiple is always divisible
                return None
            q = c * inv
            quot[shift] = q
            for e, bc in bterms:
                ne = tuple(x + y for x, y in zip(e, shift))
                v = rem.get(ne)
                v = -(bc * q) if v is None else v - bc * q
                if v:
                    rem[ne] = v
                else:
                    rem.pop(ne, None)
        return MPoly._raw(a.nvars, quot, a.field)

    def content_monic(self):
        """Scale so the grevlex leading coefficient is 1."""
        if not self.terms:
            return self
        _, lc = self.leading_term()
        if lc == 1:
            return self
        inv = lc.inverse()
        return MPoly._raw(self.nvars, {e: c * inv for e, c in self.terms.items()}, self.field)

    # -- serialization ---------------------------------------------------
    def to_json(self):
        return {
            "nvars": self.nvars,
            "tower": self.field.to_json(),
            "terms": [
                {"exp": list(e), "coef": [str(x) for x in c.coords] if self.field.k else str(c.coords[0])}
                for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, obj):
        field = create_tower(obj.get("tower", []))
        terms = {}
        for t in obj["terms"]:
            coef = t["coef"]
            if isinstance(coef, list):
                c = field.from_coords([Fraction(x) for x in coef])
            elif isinstance(coef, dict):
                c = FieldElem.from_json(coef)
            else:
                c = field(Fraction(coef))
            terms[tuple(t["exp"])] = c
        return cls(obj["nvars"], terms, field)


@dataclass(frozen=True)
class Quotient:
    q: MPoly


@dataclass(frozen=True)
class NotDivisible:
    pass


def exact_divide(psi, phi):
    """Quotient(q) when psi == q * phi exactly, otherwise NotDivisible()."""
    q = psi.divide_exact(phi)
    return NotDivisible() if q is None else Quotient(q)
