"""Command-line entry point: ``invsurf <subcommand> ...``.

Every subcommand writes one JSON document (exact coordinates plus advisory
decimals) to stdout or ``--out``.  Exit status is 0 on success, 1 on a
domain error (JSON on stderr) and 2 on a usage error.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

import mpmath

from invsurf import __version__, errors
from invsurf.darboux import (
    Valid,
    Verified,
    bounds_report,
    search_semi_invariants,
    verify_jacobi_multiplier,
    verify_semi_invariant,
)
from invsurf.darboux.semi import DEFAULT_BUDGET
from invsurf.distinguished import construct_distinguished, sample_genericity, seventh_idempotent
from invsurf.exact.tower import create_tower
from invsurf.infinity import Cond1, Cond2, property_e_report
from invsurf.parse_io import ParseContext, parse_poly, print_poly
from invsurf.parse_io.jsonio import (
    dumps,
    elem_json,
    field_json,
    load_gamma,
    load_lines,
    load_matrix,
    load_vector_field,
    poly_json,
    vector_json,
)
from invsurf.parse_io.parser import infer_discriminants
from invsurf.transform import PoincareChart, poincare_field, poincare_poly


class UsageError(Exception):
    pass


# -- serialization of reports ----------------------------------------------


def classification_json(cls):
    if isinstance(cls, Cond1):
        return {"kind": "Cond1"}
    if isinstance(cls, Cond2):
        return {"kind": "Cond2", "multipliers": list(cls.multipliers)}
    return {"kind": "Neither", "relations": [list(r) for r in cls.relations]}


def point_json(rep):
    out = {
        "direction": vector_json(rep.v),
        "gamma": elem_json(rep.gamma),
        "dp_charpoly": [elem_json(c) for c in rep.dp_charpoly],
        "dp_spectrum": [elem_json(x) for x in rep.dp_spectrum],
        "inf_spectrum": [elem_json(x) for x in rep.inf_spectrum],
        "classification": classification_json(rep.classification),
        "multiplicity_one": rep.multiplicity_one,
    }
    if rep.extension is not None:
        out["extension"] = {"radicand": elem_json(rep.extension.radicand),
                            "certificate": dict(rep.extension.certificate)}
    if rep.crosscheck is not None:
        out["crosscheck"] = rep.crosscheck
    return out


def property_e_json(report):
    return {
        "m": report.m,
        "n": report.n,
        "verdict": report.verdict,
        "complete": report.complete,
        "expected_count": report.expected_count,
        "point_count": len(report.points),
        "witness": report.witness,
        "curve_bound": report.curve_bound,
        "points": [point_json(p) for p in report.points],
        "notes": list(report.notes),
    }


def distinguished_json(df, ctx=None):
    out = {
        "gamma": [vector_json(r) for r in df.gamma.rows],
        "field": field_json(df.field, ctx),
        "theta": [elem_json(x) for x in df.theta],
        "idempotents": [vector_json(v) for v in df.idempotents],
    }
    if df.seventh is not None:
        out["seventh"] = vector_json(df.seventh)
    return out


def semi_json(semi, ctx):
    return {
        "psi": poly_json(semi.psi, ctx),
        "cofactor": poly_json(semi.cofactor, ctx),
        "degree": semi.degree,
    }


# -- input helpers -----------------------------------------------------------


def read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def text_or_file(value):
    """An inline expression, or the contents of a file when ``value`` names one."""
    if os.path.isfile(value):
        with open(value, encoding="utf-8") as fh:
            return fh.read().strip()
    return value


def parse_direction(text, tower=None):
    parts = [p.strip() for p in text.split(",")]
    if tower is None:
        tower = create_tower(infer_discriminants(parts))
    return load_matrix([parts], tower)[0]


def parse_int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def load_factors(obj, ctx):
    """[{"poly": "x1", "exponent": "1"}, ...] or [["x1", 1], ...]."""
    items = obj["factors"] if isinstance(obj, dict) else obj
    out = []
    for item in items:
        if isinstance(item, dict):
            text, d = item["poly"], item.get("exponent", 1)
        else:
            text, d = item
        out.append((parse_poly(str(text), ctx), Fraction(str(d))))
    return out


# -- subcommands -------------------------------------------------------------


def cmd_transform(args):
    if args.field is None and args.poly is None:
        raise UsageError("transform needs --field or --poly")
    result = {}
    if args.field is not None:
        f, ctx = load_vector_field(read_json(args.field))
        n, tower = f.n, f.field
    else:
        text = text_or_file(args.poly)
        if args.direction is None and args.n is None:
            raise UsageError("transform --poly needs --direction or --n")
        n = args.n or len(args.direction.split(","))
        tower = create_tower(infer_discriminants([text] + ([args.direction] if args.direction else [])))
        ctx = ParseContext.standard(n, tower)
        f = None
    v = parse_direction(args.direction, tower) if args.direction else None
    if v is not None and len(v) != n:
        raise UsageError(f"direction has {len(v)} entries, expected {n}")
    chart = PoincareChart(v) if v is not None else None
    out_ctx = ParseContext.standard(n, tower)
    if f is not None:
        g = poincare_field(f, chart)
        result["field"] = field_json(g, out_ctx)
    if args.poly is not None:
        psi = parse_poly(text_or_file(args.poly), ctx)
        result["poly"] = poly_json(poincare_poly(psi, chart), out_ctx)
    return {"chart": chart.to_json() if chart else {"direction": "e1"}, "result": result}


def cmd_analyze(args):
    f, _ = load_vector_field(read_json(args.field))
    lines = load_lines(read_json(args.lines))
    report = property_e_report(f, lines, crosscheck=args.crosscheck)
    return property_e_json(report)


def cmd_construct(args):
    rows, _ = load_gamma(read_json(args.gamma))
    df = construct_distinguished(rows)
    out = None
    if not args.no_seventh:
        try:
            seventh_idempotent(df)
        except errors.InvsurfError as exc:
            out = exc.to_json()
    doc = distinguished_json(df)
    if out is not None:
        doc["seventh_error"] = out
    return doc


def cmd_sample(args):
    seed = 0 if args.seed is None else args.seed
    stats = sample_genericity(args.count, args.range, seed, analyze=not args.no_analyze)
    return stats.to_json()


def cmd_semi(args):
    f, ctx = load_vector_field(read_json(args.field))
    if args.verify is None and not args.search:
        raise UsageError("semi needs --verify or --search")
    if args.verify is not None:
        try:
            psi = parse_poly(text_or_file(args.verify), ctx)
        except errors.ParseError as exc:
            raise UsageError(exc) from exc
        res = verify_semi_invariant(f, psi)
        if isinstance(res, Verified):
            return {"verdict": "Verified", **semi_json(res.semi, ctx)}
        return {"verdict": "NotSemiInvariant", "psi": poly_json(psi, ctx), "lie_derivative": poly_json(res.lie, ctx)}
    if args.dmax is None or args.dmax < 1:
        raise UsageError("--search needs --dmax >= 1")
    result = search_semi_invariants(f, args.dmax, budget=args.budget)
    return {
        "d_max": args.dmax,
        "budget": args.budget,
        "complete": result.complete,
        "flags": list(result.flags),
        "note": result.note,
        "semi_invariants": [semi_json(s, ctx) for s in result.found],
    }


def cmd_multiplier(args):
    f, ctx = load_vector_field(read_json(args.field))
    factors = load_factors(read_json(args.factors), ctx)
    res = verify_jacobi_multiplier(f, factors)
    out = {
        "factors": [{"poly": print_poly(p, ctx), "exponent": str(d)} for p, d in factors],
        "cofactors": [poly_json(c, ctx) for c in res.cofactors],
        "verdict": "Valid" if isinstance(res, Valid) else "Invalid",
    }
    if not isinstance(res, Valid):
        out["residual"] = poly_json(res.residual, ctx)
    return out


def cmd_bounds(args):
    degrees = parse_int_list(args.degrees) if args.degrees else None
    exponents = [Fraction(x) for x in args.exponents.split(",")] if args.exponents else None
    pe = read_json(args.property_e) if args.property_e else None
    return bounds_report(args.m, args.n, degrees=degrees, exponents=exponents, property_e=pe).to_json()


# -- parser --------------------------------------------------------------


def _global_flags(parser, defaults):
    kw = (lambda v: {"default": v}) if defaults else (lambda v: {"default": argparse.SUPPRESS})
    parser.add_argument("--precision", type=int, help="working precision in bits for numerical root isolation (>= 64)", **kw(256))
    parser.add_argument("--budget", type=int, help="maximum Groebner basis size in the semi-invariant search", **kw(DEFAULT_BUDGET))
    parser.add_argument("--seed", type=int, help="seed for randomized subcommands", **kw(None))
    parser.add_argument("--out", help="write the JSON report here instead of stdout", **kw(None))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser():
    parser = _Parser(prog="invsurf", description="Exact analysis of invariant algebraic surfaces of polynomial vector fields.")
    parser.add_argument("--version", action="version", version=f"invsurf {__version__}")
    _global_flags(parser, True)
    sub = parser.add_subparsers(dest="command", metavar="SUBCOMMAND", parser_class=_Parser)

    def add(name, help_text, func):
        p = sub.add_parser(name, help=help_text, description=help_text)
        _global_flags(p, False)
        p.set_defaults(func=func)
        return p

    p = add("transform", "Poincare transform of a vector field or polynomial in the chart around a direction at infinity.", cmd_transform)
    p.add_argument("--field", help="vector-field JSON")
    p.add_argument("--poly", help="polynomial text or a file containing it")
    p.add_argument("--direction", help='direction "a,b,c" (default e1)')
    p.add_argument("--n", type=int, help="number of variables for --poly without --direction")

    p = add("analyze", "Stationary points at infinity: Jacobian spectra, conditions 1 and 2, and the property E verdict.", cmd_analyze)
    p.add_argument("--field", required=True, help="vector-field JSON")
    p.add_argument("--lines", required=True, help="JSON list of invariant line directions")
    p.add_argument("--crosscheck", action="store_true", help="recompute each spectrum from the transformed field")

    p = add("construct", "Distinguished quadratic field with idempotents e1, e2, e3 and the rows of gamma, plus its seventh idempotent.", cmd_construct)
    p.add_argument("--gamma", required=True, help="gamma-matrix JSON")
    p.add_argument("--no-seventh", action="store_true", help="skip the seventh idempotent")

    p = add("sample", "Genericity experiment for the distinguished construction on random rational gammas.", cmd_sample)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--range", type=int, required=True, help="numerators and denominators drawn from [-R, R] minus 0")
    p.add_argument("--no-analyze", action="store_true", help="skip the property E verdict per trial")

    p = add("semi", "Semi-invariants: verify X_f(psi) = lambda psi, or search all rational ones up to a degree.", cmd_semi)
    p.add_argument("--field", required=True, help="vector-field JSON")
    p.add_argument("--verify", help="polynomial text or a file containing it")
    p.add_argument("--search", action="store_true")
    p.add_argument("--dmax", type=int)

    p = add("multiplier", "Jacobi multiplier check: sum of d_i times cofactors equals the divergence.", cmd_multiplier)
    p.add_argument("--field", required=True, help="vector-field JSON")
    p.add_argument("--factors", required=True, help='JSON list of {"poly": ..., "exponent": ...}')

    p = add("bounds", "Degree bounds: invariant lines, products and subset sums of degrees, multiplier shape, Carnicer cap.", cmd_bounds)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degrees", help="comma-separated degrees of relatively prime semi-invariants")
    p.add_argument("--exponents", help="comma-separated multiplier exponents, paired with --degrees")
    p.add_argument("--property-e", help="property E report JSON from analyze")
    return parser


def _emit_error(payload, stream):
    stream.write(json.dumps(payload, sort_keys=True) + "\n")


def dispatch(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        if args.precision < 64:
            raise UsageError("--precision must be at least 64")
        if args.budget < 1:
            raise UsageError("--budget must be at least 1")
        with mpmath.workprec(args.precision):
            doc = args.func(args)
    except UsageError as exc:
        cause = exc.__cause__
        if isinstance(cause, errors.InvsurfError):
            payload = cause.to_json()
        else:
            payload = {"error": "UsageError", "message": str(exc)}
        payload["usage"] = True
        _emit_error(payload, stderr)
        return 2
    except errors.ParseError as exc:
        _emit_error(exc.to_json(), stderr)
        return 2
    except errors.InvsurfError as exc:
        _emit_error(exc.to_json(), stderr)
        return 1
    except (ValueError, KeyError, TypeError) as exc:
        _emit_error({"error": type(exc).__name__, "message": str(exc)}, stderr)
        return 1
    text = dumps(doc)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return 0


def main():
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
