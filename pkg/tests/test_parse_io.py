import json

import pytest
from helpers import SURD_TOWER, rand_poly, seeds
from hypothesis import given, settings
from hypothesis import strategies as st

from invsurf import errors
from invsurf.exact import QQ, create_tower
from invsurf.parse_io import ParseContext, infer_discriminants, parse_constant, parse_poly, print_poly, resolve_surd
from invsurf.parse_io.jsonio import dumps, elem_json, field_json, load_gamma, load_lines, load_vector_field
from invsurf.poly import MPoly, PolyVectorField

CTX3 = ParseContext.standard(3)
CTX_SURD = ParseContext.standard(3, SURD_TOWER)


def test_two_term_example():
    p = parse_poly("x1^2 + (3/2)*x1*x2", CTX3)
    assert len(p.terms) == 2
    assert p == MPoly(3, {(2, 0, 0): 1, (1, 1, 0): QQ(3) / 2})


def test_first_component_of_example_field(surd):
    text = "x1^2 - ((10*sqrt2*sqrt3 - 10*sqrt3)/30)*x1*x2 - ((6*sqrt2*sqrt5 - 6*sqrt5)/30)*x1*x3"
    p = parse_poly(text, CTX_SURD)
    assert p == surd.field.components[0]
    K = SURD_TOWER
    s2, s3, s5 = K.gen(0), K.gen(1), K.gen(2)
    assert p.terms[(1, 1, 0)] == -(s2 * s3 - s3) / 3
    assert p.terms[(1, 0, 1)] == -(s2 * s5 - s5) / 5


def test_print_zero():
    assert print_poly(MPoly.zero(3), CTX3) == "0"


def test_print_is_canonical():
    assert print_poly(parse_poly("x2*x1", CTX3), CTX3) == print_poly(parse_poly("x1*x2", CTX3), CTX3)
    a = parse_poly("3 - x3 + x1^2*x2 + x2", CTX3)
    b = parse_poly("x2 + x1^2*x2 + 3 - x3", CTX3)
    assert print_poly(a, CTX3) == print_poly(b, CTX3)


def test_round_trip_rationals():
    for rng in seeds(1000, 30):
        n = rng.randint(1, 4)
        ctx = ParseContext.standard(n)
        p = rand_poly(rng, n, 4, QQ, terms=rng.randint(0, 7), r=50)
        assert parse_poly(print_poly(p, ctx), ctx) == p


def test_round_trip_example_tower():
    for rng in seeds(1000, 31):
        p = rand_poly(rng, 3, 3, SURD_TOWER, terms=rng.randint(0, 6), r=20)
        assert parse_poly(print_poly(p, CTX_SURD), CTX_SURD) == p


def test_round_trip_negative_discriminant():
    K = create_tower([-1, 2])
    ctx = ParseContext.standard(2, K)
    for rng in seeds(50, 32):
        p = rand_poly(rng, 2, 3, K, terms=4)
        assert parse_poly(print_poly(p, ctx), ctx) == p


def test_custom_variable_names():
    ctx = ParseContext(("x", "y", "z"))
    assert parse_poly("x*y - z^2", ctx) == parse_poly("x1*x2 - x3^2", CTX3)
    with pytest.raises(ValueError):
        ParseContext(("x", "x"))


def test_surd_forms():
    K = SURD_TOWER
    s2, s3 = K.gen(0), K.gen(1)
    assert parse_constant("sqrt6", K) == s2 * s3
    assert parse_constant("sqrt(12)", K) == 2 * s3
    assert parse_constant("sqrt8/4", K) == s2 / 2
    assert parse_constant("sqrt4", QQ) == QQ(2)
    assert resolve_surd(7, K) is None
    Ki = create_tower([-1])
    assert parse_constant("sqrt(-1)*sqrt(-1)", Ki) == -1


def test_infer_discriminants():
    assert infer_discriminants(["sqrt2*x1 + sqrt3", "sqrt6 - sqrt5", "sqrt8"]) == [2, 3, 5]
    assert infer_discriminants(["x1 + 1"]) == []


@pytest.mark.parametrize(
    "text, kind, offset",
    [
        ("x1^-1", errors.NegativeExponent, 3),
        ("x1 + x4", errors.UnknownSymbol, 5),
        ("x1 + sqrt7", errors.UnknownSymbol, 5),
        ("x1 + * x2", errors.ParseError, 5),
        ("(x1 + x2", errors.ParseError, 8),
        ("x1 / x2", errors.ParseError, 5),
        ("x1 / 0", errors.ParseError, 5),
        ("", errors.ParseError, 0),
        ("x1 x2", errors.ParseError, 3),
        ("x1^1001", errors.ParseError, 3),
    ],
)
def test_parse_errors_carry_offsets(text, kind, offset):
    with pytest.raises(kind) as info:
        parse_poly(text, CTX3)
    assert info.value.position == offset
    out = info.value.to_json()
    assert out["details"]["position"] == offset


def test_non_ascii_input_is_rejected_with_offset():
    for text, offset in [("x1 + é", 5), ("éé x1", 0), ("x1 éé", 3), ("x1 + x2 ∗ x3", 8)]:
        with pytest.raises(errors.ParseError) as info:
            parse_poly(text, CTX3)
        assert info.value.position == offset


def test_adversarial_inputs_stay_bounded():
    for text in ["(" * 5000 + "x1", "9" * 5000, "x1^" + "9" * 5000, "sqrt" + "9" * 50]:
        with pytest.raises(errors.ParseError):
            parse_poly(text, CTX3)


ALPHABET = "x1234 sqrt()+-*/^0"


@settings(max_examples=500, deadline=None)
@given(st.text(alphabet=ALPHABET, max_size=40) | st.text(max_size=30))
def test_fuzz_never_crashes(text):
    try:
        p = parse_poly(text, CTX_SURD)
    except errors.ParseError as e:
        assert e.position is not None and 0 <= e.position <= len(text.encode("utf-8"))
        return
    assert parse_poly(print_poly(p, CTX_SURD), CTX_SURD) == p


# -- JSON -----------------------------------------------------------------------


def test_vector_field_json_format():
    obj = {"n": 3, "m": 2, "components": ["x1^2 + sqrt2*x2", "x2^2", "x3*x1"]}
    f, ctx = load_vector_field(obj)
    assert f.n == 3 and f.m == 2
    assert f.field.discriminants == (2,)
    out = field_json(f, ctx)
    g, _ = load_vector_field(out)
    assert g == f
    with pytest.raises(ValueError):
        load_vector_field({"n": 3, "m": 3, "components": obj["components"]})
    with pytest.raises(ValueError):
        load_vector_field({"n": 2, "components": obj["components"]})


def test_vector_field_from_mpoly_json():
    p = MPoly(2, {(1, 1): 3, (0, 0): -1})
    f, _ = load_vector_field({"components": [p.to_json(), "x1"]})
    assert f == PolyVectorField([p, MPoly.var(2, 0)])


def test_gamma_and_lines_files():
    import pathlib

    docs = pathlib.Path(__file__).resolve().parent.parent / "docs" / "examples"
    gamma, tower = load_gamma(json.loads((docs / "surd_gamma.json").read_text()))
    assert tower is SURD_TOWER
    assert len(gamma) == 3 and all(len(r) == 3 for r in gamma)
    lines = load_lines(json.loads((docs / "seven_lines.json").read_text()))
    assert len(lines) == 7


def test_element_json():
    K = SURD_TOWER
    x = K.gen(0) / 3 - 1
    out = elem_json(x)
    assert out["coords"][0] == "-1" and out["coords"][1] == "1/3"
    assert out["decimal"].startswith("-0.528595479")
    assert parse_constant(out["text"], K) == x


def test_dumps_is_stable():
    a = dumps({"b": 1, "a": [1, 2]})
    assert a == dumps({"b": 1, "a": [1, 2]})
    assert a.endswith("\n")
