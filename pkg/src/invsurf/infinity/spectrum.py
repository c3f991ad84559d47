"""Stationary points at infinity: invariant lines, spectra and the rationality conditions."""

from dataclasses import dataclass, field
from fractions import Fraction

from invsurf import errors
from invsurf.exact.quadext import QuadElem, QuadExt, canonical_radicand
from invsurf.exact.rational import rational_kernel
from invsurf.exact.tower import FieldElem, Square, sqrt_in_field
from invsurf.poly import univariate as uv
from invsurf.poly.matrix import SquareMatrix, char_poly
from invsurf.poly.mpoly import _union_tower
from invsurf.transform.poincare import PoincareChart, normalize_direction, poincare_field

MAX_SPECTRUM_DIM = 3


@dataclass(frozen=True)
class Line:
    gamma: FieldElem


@dataclass(frozen=True)
class NotInvariantLine:
    image: tuple


@dataclass(frozen=True)
class Cond1:
    name = "Cond1"


@dataclass(frozen=True)
class Cond2:
    multipliers: tuple
    name = "Cond2"


@dataclass(frozen=True)
class Neither:
    relations: tuple = ()
    name = "Neither"


def line_count(m, n):
    """(m^n - 1)/(m - 1): stationary points at infinity counted with multiplicity."""
    if m == 1:
        return n
    return (m**n - 1) // (m - 1)


def verify_invariant_line(f, v):
    """Line(gamma) when f^(m)(v) = gamma v, else NotInvariantLine(f^(m)(v))."""
    fld = _union_tower([f.field.one] + [x for x in v if isinstance(x, FieldElem)])
    v = [fld(x) for x in v]
    j = next((i for i, x in enumerate(v) if x), None)
    if j is None:
        raise errors.ZeroVector("direction vector is zero")
    top = f.parts[f.m]
    w = [c.evaluate(v) for c in top]
    w = [fld(x) for x in w]
    gamma = w[j] / v[j]
    if all(wi == gamma * vi for wi, vi in zip(w, v)):
        return Line(gamma)
    return NotInvariantLine(tuple(w))


def _top_jacobian(f, v):
    top = f.parts[f.m]
    return SquareMatrix([[c.diff(k).evaluate(v) for k in range(f.n)] for c in top])


def _quadratic_roots(b, c):
    """Roots of t^2 + b t + c, adjoining a square root when needed."""
    disc = b * b - c * 4
    if not disc:
        r = -b / 2
        return [r, r], None
    res = sqrt_in_field(disc)
    if isinstance(res, Square):
        r = res.root
        return [(-b + r) / 2, (-b - r) / 2], None
    radicand, scale = canonical_radicand(disc)
    ext = QuadExt(radicand)
    half = -b / 2
    s = Fraction(scale) / 2
    root = ext(half, ext.base(s))
    return [root, root.conjugate()], ext


@dataclass
class InfinityPointReport:
    v: tuple
    gamma: FieldElem
    dp_charpoly: list
    dp_spectrum: list
    inf_spectrum: list
    classification: object
    multiplicity_one: bool
    extension: object = None
    crosscheck: bool = None
    chart: object = field(default=None, repr=False)


def infinity_spectrum(f, v, crosscheck=False):
    """Spectrum of Dp(v) and of the transformed linearization at the point at infinity.

    The transformed spectrum is -gamma together with beta_i - gamma for the
    eigenvalues beta_i of Dp(v) other than m*gamma.
    """
    n = f.n
    res = verify_invariant_line(f, v)
    if not isinstance(res, Line):
        raise errors.NotInvariant("direction is not an invariant line of the top-degree part", direction=[str(x) for x in v])
    fld = _union_tower([f.field.one] + [x for x in v if isinstance(x, FieldElem)])
    v = tuple(fld(x) for x in v)
    gamma = res.gamma
    m = f.m
    jac = _top_jacobian(f, v)
    cp = uv.from_mpoly(char_poly(jac))
    if n > MAX_SPECTRUM_DIM:
        raise errors.UnsupportedDimension(f"spectra are computed only for n <= {MAX_SPECTRUM_DIM}")
    mg = gamma * m
    quot, rem = uv.divmod_poly(cp, [-mg, fld.one])
    if rem:
        raise errors.VerificationFailed("m*gamma is not an eigenvalue of Dp(v)")
    ext = None
    if len(quot) == 1:
        betas = []
    elif len(quot) == 2:
        betas = [-quot[0] / quot[1]]
    else:
        q0, q1, q2 = quot
        betas, ext = _quadratic_roots(q1 / q2, q0 / q2)
    dp_spectrum = [mg] + betas
    inf_spectrum = [-gamma] + [b - gamma for b in betas]
    cls = classify_conditions(inf_spectrum)
    report = InfinityPointReport(
        v=v,
        gamma=gamma,
        dp_charpoly=cp,
        dp_spectrum=dp_spectrum,
        inf_spectrum=inf_spectrum,
        classification=cls,
        multiplicity_one=all(bool(x) for x in inf_spectrum),
        extension=ext,
    )
    if crosscheck:
        report.crosscheck = transform_crosscheck(f, v, report)
    return report


def expected_transform_charpoly(report):
    """prod (t + gamma) * prod (t - (beta_i - gamma)) from the Dp(v) data, over the base field.

    Uses charpoly(Dp(v)) = (t - m gamma) Q(t), so the product over the
    beta_i equals Q(t + gamma) and no square roots are needed.
    """
    gamma = report.gamma
    m_gamma = report.dp_spectrum[0]
    q, rem = uv.divmod_poly(report.dp_charpoly, [-m_gamma, gamma.tower.one])
    shifted = _taylor_shift(q, gamma)
    return uv.mul([gamma, gamma.tower.one], shifted)


def _taylor_shift(p, a):
    """Coefficients of p(t + a)."""
    out = []
    for c in reversed(p):
        out = uv.mul(out, [a, 1]) if out else [c * 0]
        out[0] = out[0] + c
    return uv.trim(out)


def transform_crosscheck(f, v, report=None):
    """Compare charpoly(Df*_v(0)) from the transformed field with the value implied by Dp(v)."""
    if report is None:
        report = infinity_spectrum(f, v)
    chart = PoincareChart(list(v))
    g = poincare_field(f, chart)
    zero = [g.field.zero] * g.n
    jac = SquareMatrix([[c.diff(k).evaluate(zero) for k in range(g.n)] for c in g.components])
    direct = uv.from_mpoly(char_poly(jac))
    expected = expected_transform_charpoly(report)
    fld = _union_tower([x for x in direct + expected if isinstance(x, FieldElem)])
    return uv.trim([fld(x) for x in direct]) == uv.trim([fld(x) for x in expected])


# -- condition classification -------------------------------------------


def _coordinate_columns(spectrum):
    exts = {x.ext for x in spectrum if isinstance(x, QuadElem)}
    if len(exts) > 1:
        raise errors.ExtensionTooDeep("spectrum mixes several quadratic extensions")
    ext = exts.pop() if exts else None
    parts = []
    for x in spectrum:
        if isinstance(x, QuadElem):
            parts.extend([x.u, x.v])
        elif isinstance(x, FieldElem):
            parts.append(x)
    if ext is not None:
        parts.append(ext.base.one)
    tower = _union_tower(parts)
    cols = []
    for x in spectrum:
        if isinstance(x, QuadElem):
            cols.append(list(tower(x.u).coords) + list(tower(x.v).coords))
        else:
            x = tower(x) if not isinstance(x, FieldElem) else x.promote(tower)
            pad = [Fraction(0)] * tower.size if ext is not None else []
            cols.append(list(x.coords) + pad)
    return cols


def classify_conditions(spectrum):
    """Cond1 (Q-independent), Cond2 (one positive relation) or Neither."""
    spectrum = list(spectrum)
    if len(spectrum) < 1:
        raise ValueError("empty spectrum")
    cols = _coordinate_columns(spectrum)
    rows = [list(r) for r in zip(*cols)]
    kernel = rational_kernel(rows)
    if not kernel:
        return Cond1()
    if len(kernel) == 1:
        vec = kernel[0]
        if all(x > 0 for x in vec):
            return Cond2(tuple(vec))
        if all(x < 0 for x in vec):
            return Cond2(tuple(-x for x in vec))
    return Neither(tuple(tuple(k) for k in kernel))


# -- property E ---------------------------------------------------------


@dataclass
class PropertyEReport:
    m: int
    n: int
    points: list
    complete: bool
    expected_count: int
    verdict: str
    witness: object = None
    curve_bound: int = None
    notes: list = field(default_factory=list)


def property_e_report(f, lines, crosscheck=False):
    """Classify every supplied stationary point at infinity and decide property E.

    Verdict precedence: any point failing both conditions gives Violated;
    otherwise an incomplete line list (too few lines, or some multiplicity
    above one) gives Incomplete; otherwise Satisfied.
    """
    normalized = []
    for v in lines:
        w = normalize_direction(v)
        for prev in normalized:
            if prev == w:
                raise errors.DuplicateLine("two supplied directions are proportional", direction=[str(x) for x in w])
        normalized.append(w)
    points = [infinity_spectrum(f, v, crosscheck=crosscheck) for v in normalized]
    expected = line_count(f.m, f.n)
    complete = len(points) == expected and all(p.multiplicity_one for p in points)
    witness = None
    for i, p in enumerate(points):
        if isinstance(p.classification, Neither):
            witness = i
            break
    if witness is not None:
        verdict = "Violated"
    elif not complete:
        verdict = "Incomplete"
    else:
        verdict = "Satisfied"
    notes = []
    if f.n == 3:
        notes.append("property S holds automatically in dimension 3; not computed")
    return PropertyEReport(
        m=f.m,
        n=f.n,
        points=points,
        complete=complete,
        expected_count=expected,
        verdict=verdict,
        witness=witness,
        curve_bound=expected,
        notes=notes,
    )
