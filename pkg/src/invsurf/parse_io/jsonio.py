"""JSON input formats and report serialization."""

import json
from fractions import Fraction

from invsurf.exact.quadext import QuadElem
from invsurf.exact.tower import QQ, FieldElem, create_tower, format_decimal
from invsurf.parse_io.parser import ParseContext, infer_discriminants, parse_constant, parse_poly
from invsurf.parse_io.printer import format_coefficient, print_poly
from invsurf.poly.mpoly import MPoly
from invsurf.poly.vfield import PolyVectorField

DECIMAL_DIGITS = 30


def dumps(obj):
    """Stable JSON text (insertion-ordered keys, two-space indent, trailing newline)."""
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def elem_json(x, digits=DECIMAL_DIGITS):
    """Exact coordinates plus an advisory decimal rendering."""
    if isinstance(x, QuadElem):
        return {
            "kind": "quadratic",
            "u": elem_json(x.u, digits),
            "v": elem_json(x.v, digits),
            "radicand": elem_json(x.ext.radicand, digits),
            "decimal": format_decimal(x, digits),
        }
    if isinstance(x, (int, Fraction)):
        x = QQ(x)
    return {
        "tower": x.tower.to_json(),
        "coords": [str(c) for c in x.coords],
        "text": format_coefficient(x),
        "decimal": format_decimal(x, digits),
    }


def poly_json(p, ctx=None):
    out = p.to_json()
    out["text"] = print_poly(p, ctx)
    return out


def field_json(f, ctx=None):
    return {
        "n": f.n,
        "m": f.m,
        "tower": f.field.to_json(),
        "components": [print_poly(c, ctx) for c in f.components],
    }


def _tower_from(obj, texts):
    if obj.get("tower") is not None:
        return create_tower(obj["tower"])
    return create_tower(infer_discriminants(texts))


def load_vector_field(obj):
    """{"n": 3, "components": ["x1^2 + ...", ...], "tower": [2, 3, 5]} -> (field, ctx).

    Components may also be MPoly JSON objects.  ``tower`` is inferred from
    the surds in the text when omitted; ``vars`` overrides x1..xn.
    """
    comps = obj["components"]
    n = int(obj.get("n", len(comps)))
    if len(comps) != n:
        raise ValueError(f"expected {n} components, got {len(comps)}")
    texts = [c for c in comps if isinstance(c, str)]
    tower = _tower_from(obj, texts)
    names = obj.get("vars")
    ctx = ParseContext(tuple(names), tower) if names else ParseContext.standard(n, tower)
    polys = []
    for c in comps:
        if isinstance(c, str):
            polys.append(parse_poly(c, ctx))
        else:
            polys.append(MPoly.from_json(c).over(tower))
    f = PolyVectorField(polys)
    if "m" in obj and obj["m"] is not None and f.m != obj["m"]:
        raise ValueError(f"declared degree {obj['m']} but components have degree {f.m}")
    return f, ctx


def load_matrix(rows, tower):
    return [[_entry(x, tower) for x in row] for row in rows]


def _entry(x, tower):
    if isinstance(x, dict):
        return FieldElem.from_json(x).promote(tower)
    return parse_constant(str(x), tower)


def load_gamma(obj):
    """{"gamma": [["sqrt2","sqrt3","0"], ...], "tower": [2,3,5]} -> (3x3 matrix, tower)."""
    rows = obj["gamma"]
    texts = [str(x) for row in rows for x in row if not isinstance(x, dict)]
    tower = _tower_from(obj, texts)
    return load_matrix(rows, tower), tower


def load_lines(obj, tower=None):
    """{"lines": [["1","0","0"], ...]} -> list of direction vectors."""
    rows = obj["lines"] if isinstance(obj, dict) else obj
    if tower is None:
        texts = [str(x) for row in rows for x in row if not isinstance(x, dict)]
        tower = _tower_from(obj if isinstance(obj, dict) else {}, texts)
    return load_matrix(rows, tower)


def vector_json(vec, digits=DECIMAL_DIGITS):
    return [elem_json(x, digits) for x in vec]
