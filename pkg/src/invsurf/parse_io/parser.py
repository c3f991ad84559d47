"""Recursive-descent parser for polynomial text.

Grammar (whitespace-insensitive)::

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := unary ('*' unary | '/' unary)*      divisor must be a nonzero constant
    unary   := ('+'|'-') unary | power
    power   := primary ('^' intlit)?
    primary := intlit | surd | var | '(' expr ')'
    surd    := 'sqrt' intlit | 'sqrt' '(' ['-'] intlit ')'
"""

from dataclasses import dataclass, field
from math import isqrt
import re

from invsurf import errors
from invsurf.exact.tower import QQ, _is_square_free, create_tower
from invsurf.poly.mpoly import MPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")
_SURD = re.compile(r"sqrt(\d+)$")

# keeps parsing bounded on adversarial input
MAX_EXPONENT = 1000
MAX_RADICAND = 1 << 32
MAX_DIGITS = 4000


@dataclass(frozen=True)
class ParseContext:
    """Variable names (positional) and the coefficient tower."""

    var_names: tuple = ()
    tower: object = QQ
    _index: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        names = tuple(self.var_names)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        object.__setattr__(self, "var_names", names)
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(names)})

    @classmethod
    def standard(cls, n, tower=QQ, prefix="x"):
        if isinstance(tower, (list, tuple)):
            tower = create_tower(tower)
        return cls(tuple(f"{prefix}{i + 1}" for i in range(n)), tower)

    @property
    def nvars(self):
        return len(self.var_names)

    def index(self, name):
        return self._index.get(name)


def _byte_offset(text, pos):
    return len(text[:pos].encode("utf-8"))


def _square_split(n):
    """n = s^2 * r with r square-free (sign kept on r)."""
    sign = -1 if n < 0 else 1
    n = abs(n)
    s = 1
    f = 2
    while f * f <= n:
        while n % (f * f) == 0:
            n //= f * f
            s *= f
        f += 1
    return s, sign * n


def resolve_surd(n, tower):
    """sqrt(n) as an element of ``tower``, or None if it does not live there."""
    if n == 0:
        return tower.zero
    s, r = _square_split(n)
    if r == 1:
        return tower(s)
    for mask in range(1, tower.size):
        gens = [tower.discriminants[b] for b in range(tower.k) if mask >> b & 1]
        if tower.basis_value(mask) != r:
            continue
        # the basis element is a product of principal roots; it equals the
        # principal root of r when at most one factor is negative
        if sum(g < 0 for g in gens) <= 1:
            return tower.basis(mask) * s
    return None


class _Parser:
    def __init__(self, text, ctx):
        self.text = text
        self.ctx = ctx
        self.tokens = []
        for m in _TOKEN.finditer(text):
            if m.group(1) is not None:
                self.tokens.append(("int", m.group(1), m.start(1)))
            elif m.group(2) is not None:
                self.tokens.append(("name", m.group(2), m.start(2)))
            elif m.group(3) is not None:
                self.tokens.append(("op", m.group(3), m.start(3)))
        self.tokens.append(("end", "", len(text)))
        self.i = 0

    # -- helpers ---------------------------------------------------------
    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, cls, message, pos, expected=None):
        raise cls(message, position=_byte_offset(self.text, pos), expected=expected, text=self.text)

    def expect_op(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            self.fail(errors.ParseError, f"unexpected {val!r}" if val else "unexpected end of input", pos, repr(op))

    def const(self, c):
        return MPoly.constant(self.ctx.nvars, c, self.ctx.tower)

    # -- grammar ---------------------------------------------------------
    def parse(self):
        kind, _, pos = self.peek()
        if kind == "end":
            self.fail(errors.ParseError, "empty input", pos, "expression")
        result = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            self.fail(errors.ParseError, f"unexpected {val!r}", pos, "operator or end of input")
        return result

    def expr(self):
        kind, val, _ = self.peek()
        negate = False
        if kind == "op" and val in "+-":
            self.take()
            negate = val == "-"
        acc = self.term()
        if negate:
            acc = -acc
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                acc = acc + t if val == "+" else acc - t
            else:
                return acc

    def term(self):
        acc = self.unary()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.unary()
            elif kind == "op" and val == "/":
                self.take()
                _, _, dpos = self.peek()
                d = self.unary()
                if not d.is_constant() or not d:
                    self.fail(errors.ParseError, "division only by nonzero constants", dpos, "nonzero constant")
                acc = acc * d.constant_term().inverse()
            else:
                return acc

    def unary(self):
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            inner = self.unary()
            return -inner if val == "-" else inner
        return self.power()

    def power(self):
        base = self.primary()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val, pos = self.take()
            if kind == "op" and val == "-":
                self.fail(errors.NegativeExponent, "negative exponent", pos, "non-negative integer")
            if kind == "op" and val == "(":
                # allow x^(3) for convenience
                kind, val, pos2 = self.take()
                if kind == "op" and val == "-":
                    self.fail(errors.NegativeExponent, "negative exponent", pos2, "non-negative integer")
                if kind != "int":
                    self.fail(errors.ParseError, f"unexpected {val!r}", pos2, "integer exponent")
                self.expect_op(")")
            elif kind != "int":
                self.fail(errors.ParseError, f"unexpected {val!r}" if val else "unexpected end of input", pos, "integer exponent")
            if len(val) > 4 or int(val) > MAX_EXPONENT:
                self.fail(errors.ParseError, f"exponent above {MAX_EXPONENT}", pos, "smaller exponent")
            return base ** int(val)
        return base

    def primary(self):
        kind, val, pos = self.take()
        if kind == "int":
            if len(val) > MAX_DIGITS:
                self.fail(errors.ParseError, "integer literal too long", pos, f"at most {MAX_DIGITS} digits")
            return self.const(int(val))
        if kind == "name":
            idx = self.ctx.index(val)
            if idx is not None:
                return MPoly.var(self.ctx.nvars, idx, self.ctx.tower)
            m = _SURD.match(val)
            if m:
                if len(m.group(1)) > 12:
                    self.fail(errors.ParseError, "radicand too large", pos, f"radicand below {MAX_RADICAND}")
                return self.surd(int(m.group(1)), pos, val)
            if val == "sqrt":
                self.expect_op("(")
                k2, v2, p2 = self.take()
                sign = 1
                if k2 == "op" and v2 == "-":
                    sign = -1
                    k2, v2, p2 = self.take()
                if k2 != "int":
                    self.fail(errors.ParseError, f"unexpected {v2!r}", p2, "integer radicand")
                if len(v2) > 12:
                    self.fail(errors.ParseError, "radicand too large", p2, f"radicand below {MAX_RADICAND}")
                self.expect_op(")")
                return self.surd(sign * int(v2), pos, f"sqrt({sign * int(v2)})")
            self.fail(errors.UnknownSymbol, f"unknown symbol {val!r}", pos, "variable or surd")
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        if kind == "end":
            self.fail(errors.ParseError, "unexpected end of input", pos, "operand")
        self.fail(errors.ParseError, f"unexpected {val!r}", pos, "operand")

    def surd(self, n, pos, label):
        if abs(n) >= MAX_RADICAND:
            self.fail(errors.ParseError, "radicand too large", pos, f"radicand below {MAX_RADICAND}")
        value = resolve_surd(n, self.ctx.tower)
        if value is None:
            self.fail(errors.UnknownSymbol, f"{label} does not lie in the coefficient field", pos, "tower generator")
        return self.const(value)


def parse_poly(text, ctx):
    """Parse ``text`` into an MPoly in ``ctx.nvars`` variables over ``ctx.tower``."""
    if not isinstance(text, str):
        raise TypeError("polynomial text must be a string")
    try:
        return _Parser(text, ctx).parse()
    except RecursionError:
        raise errors.ParseError("expression nested too deeply", position=0, expected=None, text=text) from None


def parse_constant(text, tower=QQ):
    """Parse a variable-free expression into a field element."""
    if isinstance(text, (int,)):
        return tower(text)
    poly = parse_poly(str(text), ParseContext((), tower))
    return poly.constant_term()


_SURD_ANY = re.compile(r"sqrt\s*(?:(\d+)|\(\s*(-?)\s*(\d+)\s*\))")


def infer_discriminants(texts):
    """Square-free generators covering every surd mentioned in ``texts``.

    Generators are added in order of first appearance; a radicand whose
    square class is already a product of earlier generators is skipped.
    """
    gens = []
    for text in texts:
        for m in _SURD_ANY.finditer(text):
            if len(m.group(1) or m.group(3)) > 12:
                continue
            n = int(m.group(1)) if m.group(1) else int(m.group(3)) * (-1 if m.group(2) else 1)
            if abs(n) >= MAX_RADICAND:
                continue
            _, r = _square_split(n)
            if r == 1 or r == 0:
                continue
            if _in_span(r, gens):
                continue
            if not _is_square_free(r):
                continue
            gens.append(r)
    return gens


def _in_span(r, gens):
    for mask in range(1 << len(gens)):
        p = 1
        for b, g in enumerate(gens):
            if mask >> b & 1:
                p *= g
        q = r * p
        if q > 0 and isqrt(q) ** 2 == q:
            return True
    return False
