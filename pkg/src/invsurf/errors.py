"""Exception hierarchy.

Every domain error carries a short ``kind`` string that the CLI copies into
its structured error output.
"""


class InvsurfError(Exception):
    kind = "InvsurfError"

    def __init__(self, message="", **details):
        super().__init__(message or self.kind)
        self.details = details

    def to_json(self):
        out = {"error": self.kind, "message": str(self)}
        if self.details:
            out["details"] = {k: _plain(v) for k, v in self.details.items()}
        return out


def _plain(value):
    if isinstance(value, (int, float, str, bool)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return str(value)


def _kind(name, base=InvsurfError, extra=()):
    cls = type(name, (base,) + tuple(extra), {"kind": name})
    return cls


# exact
NotSquareFree = _kind("NotSquareFree", extra=(ValueError,))
RedundantGenerator = _kind("RedundantGenerator", extra=(ValueError,))
TowerTooLarge = _kind("TowerTooLarge", extra=(ValueError,))
TowerMismatch = _kind("TowerMismatch", extra=(TypeError,))
DivisionByZero = _kind("DivisionByZero", extra=(ZeroDivisionError,))
ZeroRadicand = _kind("ZeroRadicand", extra=(ValueError,))
RadicandIsSquare = _kind("RadicandIsSquare", extra=(ValueError,))

# poly
DimensionMismatch = _kind("DimensionMismatch", extra=(ValueError,))
ZeroDivisor = _kind("ZeroDivisor", extra=(ZeroDivisionError,))
DegenerateInVar = _kind("DegenerateInVar", extra=(ValueError,))
ZeroPolynomial = _kind("ZeroPolynomial", extra=(ValueError,))
NotHomogeneous = _kind("NotHomogeneous", extra=(ValueError,))


# parse_io
class ParseError(InvsurfError, ValueError):
    kind = "SyntaxError"

    def __init__(self, message, position=None, expected=None, text=None):
        super().__init__(message, position=position, expected=expected)
        self.position = position
        self.expected = expected
        self.text = text

    def __str__(self):
        msg = self.args[0]
        if self.position is not None:
            msg = f"{msg} at offset {self.position}"
        if self.expected:
            msg = f"{msg} (expected {self.expected})"
        return msg


class UnknownSymbol(ParseError):
    kind = "UnknownSymbol"


class NegativeExponent(ParseError):
    kind = "NegativeExponent"


# transform / infinity
ZeroVector = _kind("ZeroVector", extra=(ValueError,))
UnsupportedDimension = _kind("UnsupportedDimension", extra=(ValueError,))
ExtensionTooDeep = _kind("ExtensionTooDeep", extra=(ValueError,))
DuplicateLine = _kind("DuplicateLine", extra=(ValueError,))
NotInvariant = _kind("NotInvariant", extra=(ValueError,))

# distinguished
SingularA = _kind("SingularA", extra=(ValueError,))
VerificationFailed = _kind("VerificationFailed", extra=(ArithmeticError,))
DegenerateFactorization = _kind("DegenerateFactorization", extra=(ArithmeticError,))
B1Vanishes = _kind("B1Vanishes", extra=(ZeroDivisionError,))

# darboux
ConstantInput = _kind("ConstantInput", extra=(ValueError,))
EliminationBudgetExceeded = _kind("EliminationBudgetExceeded", extra=(RuntimeError,))
FactorNotSemiInvariant = _kind("FactorNotSemiInvariant", extra=(ValueError,))
UnsupportedField = _kind("UnsupportedField", extra=(ValueError,))
