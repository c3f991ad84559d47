"""Distinguished quadratic fields in dimension 3 built from prescribed idempotents."""

import random
from dataclasses import dataclass, field
from fractions import Fraction

from invsurf import errors
from invsurf.exact.tower import FieldElem
from invsurf.infinity.spectrum import property_e_report
from invsurf.poly import univariate as uv
from invsurf.poly.matrix import SquareMatrix, sylvester_resultant
from invsurf.poly.mpoly import MPoly, _union_tower
from invsurf.poly.vfield import PolyVectorField

# monomials x1x2, x2x3, x3x1 as exponent tuples
CROSS = ((1, 1, 0), (0, 1, 1), (1, 0, 1))
SQUARES = ((2, 0, 0), (0, 2, 0), (0, 0, 2))


class GammaSpec:
    """Rows are the idempotents v_1, v_2, v_3 in the standard basis."""

    __slots__ = ("rows", "field")

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise errors.DimensionMismatch("gamma must be a 3x3 matrix")
        fld = _union_tower([x for r in rows for x in r if isinstance(x, FieldElem)])
        self.rows = tuple(tuple(fld(x) for x in r) for r in rows)
        self.field = fld

    def matrix_a(self):
        """Rows (g_i1 g_i2, g_i2 g_i3, g_i3 g_i1)."""
        return SquareMatrix([[g[0] * g[1], g[1] * g[2], g[2] * g[0]] for g in self.rows])

    def to_json(self):
        return {"tower": self.field.to_json(), "gamma": [[str(x) for x in r] for r in self.rows]}


@dataclass
class DistinguishedField:
    gamma: GammaSpec
    field: PolyVectorField
    theta: list
    idempotents: list
    seventh: object = None
    details: dict = field(default_factory=dict)


def _is_idempotent(f, v):
    return [c.evaluate(v) for c in f.components] == list(v)


def construct_distinguished(gamma):
    """The homogeneous quadratic map with idempotents e1, e2, e3 and the rows of gamma.

    Per output coordinate k, the cross-term values w = p^(e_i, e_j)_k solve
    2A w = (v_ik - v_ik^2)_i; the coefficients of x1x2, x2x3, x3x1 in p_k are
    then 2w.
    """
    if not isinstance(gamma, GammaSpec):
        gamma = GammaSpec(gamma)
    K = gamma.field
    a = gamma.matrix_a()
    if not a.det():
        raise errors.SingularA("the matrix A of cross products is singular")
    two_a_inv = SquareMatrix([[x * 2 for x in row] for row in a.rows]).inverse()
    theta = []
    comps = []
    for k in range(3):
        rhs = [g[k] - g[k] * g[k] for g in gamma.rows]
        w = two_a_inv.apply(rhs)
        coeffs = [x * 2 for x in w]
        terms = {SQUARES[k]: K.one}
        for exp, c in zip(CROSS, coeffs):
            if c:
                terms[exp] = c
        comps.append(MPoly(3, terms, K))
        # theta numbering: x1x2, x2x3, x3x1 within each component
        theta.extend(coeffs)
    f = PolyVectorField(comps)
    units = [[K.one if i == j else K.zero for j in range(3)] for i in range(3)]
    idem = units + [list(r) for r in gamma.rows]
    for v in idem:
        if not _is_idempotent(f, v):
            raise errors.VerificationFailed("constructed map misses a prescribed idempotent")
    return DistinguishedField(gamma=gamma, field=f, theta=theta, idempotents=idem)


# -- seventh idempotent --------------------------------------------------


def split_coefficients(df):
    """a11..c13 of the rewritten system p - x = 0 (x1 eliminated later)."""
    t = df.theta
    return {
        "a11": t[0], "a12": t[2], "a13": t[1],
        "b11": t[3], "b12": t[5], "b13": t[4],
        "c11": t[6], "c12": t[8], "c13": t[7],
    }


def _elimination_system(co, K, lift):
    """E1 = B1 C2 - C1 B2 and E2 = B2^2 - A1 B1 B2 + A2 B1^2 in K[x2, x3, t].

    With ``lift`` the coefficient b12 is replaced by the variable t.
    """
    x2, x3, t = MPoly.gens(3, K)
    one = MPoly.constant(3, 1, K)
    b12 = t if lift else one * co["b12"]
    A1 = x2 * co["a11"] + x3 * co["a12"] - one
    A2 = x2 * x3 * co["a13"]
    B1 = x2 * co["b11"] + x3 * b12 if lift else x2 * co["b11"] + x3 * co["b12"]
    B2 = x2 * x2 - x2 + x2 * x3 * co["b13"]
    C1 = x2 * co["c11"] + x3 * co["c12"]
    C2 = x3 * x3 - x3 + x2 * x3 * co["c13"]
    E1 = B1 * C2 - C1 * B2
    E2 = B2 * B2 - A1 * B1 * B2 + A2 * B1 * B1
    return E1, E2, (A1, A2, B1, B2, C1, C2)


def _strip(poly, factors, label):
    for fac in factors:
        q = poly.divide_exact(fac)
        if q is None:
            raise errors.DegenerateFactorization(f"expected factor {fac} of the {label} resultant is absent")
        poly = q
    return poly


def _strip_all(poly, fac):
    """Divide out every power of ``fac``."""
    while poly:
        q = poly.divide_exact(fac)
        if q is None:
            return poly
        poly = q
    return poly


def _fourth_root(quartic, known, label):
    """Remove the three known roots from a quartic and return the remaining one."""
    q = uv.trim(quartic)
    if uv.degree(q) != 4:
        raise errors.DegenerateFactorization(f"{label} quotient has degree {uv.degree(q)}, expected 4")
    q = uv.monic(q)
    rest, rem = uv.divmod_poly(q, uv.from_roots(known))
    if rem or uv.degree(rest) != 1:
        raise errors.DegenerateFactorization(f"known roots do not divide the {label} quartic")
    # Vieta: the four roots sum to minus the cubic coefficient
    root = -q[3] - sum(known[1:], known[0])
    if root != -rest[0] / rest[1]:
        raise errors.VerificationFailed("Vieta root disagrees with the linear quotient")
    return root


def seventh_idempotent(df, keep_intermediates=False):
    """Third and second coordinates by resultant elimination, the first from x1 = -B2/B1.

    When b12 vanishes the literal resultant is identically zero, so b12 is
    replaced by a formal variable t, the known factors are divided out in
    K[x3, t] and t is set back to 0.
    """
    K = df.gamma.field
    co = split_coefficients(df)
    lift = not co["b12"]
    E1, E2, parts = _elimination_system(co, K, lift)
    x2, x3, t = MPoly.gens(3, K)
    one = MPoly.constant(3, 1, K)
    b11, b12, b13 = co["b11"], (t if lift else one * co["b12"]), co["b13"]

    r3 = sylvester_resultant(E1, E2, 0)
    if not r3:
        raise errors.DegenerateFactorization("resultant in x3 vanishes identically")
    lin3 = x3 * b11 * b13 - x3 * b12 - one * b11
    factors3 = [x3] * 5 + [x3 - one] + [lin3, lin3]
    t4 = _strip(r3, factors3, "x3")

    r2 = sylvester_resultant(E1, E2, 1)
    if not r2:
        raise errors.DegenerateFactorization("resultant in x2 vanishes identically")
    lin2 = x2 * b11 * b13 - x2 * b12 + b12
    factors2 = [x2] * 5 + [x2 - one] + [lin2, lin2]
    s4 = _strip(r2, factors2, "x2")

    if lift:
        # the lifted resultants carry powers of t that vanish at b12 = 0
        t4 = _strip_all(t4, t).specialize(2, 0)
        s4 = _strip_all(s4, t).specialize(2, 0)
    t4u = uv.from_mpoly(t4, 1) if t4.variables() else []
    s4u = uv.from_mpoly(s4, 0) if s4.variables() else []

    rows = df.gamma.rows
    s3 = _fourth_root(t4u, [g[2] for g in rows], "x3")
    s2 = _fourth_root(s4u, [g[1] for g in rows], "x2")

    B1 = co["b11"] * s2 + co["b12"] * s3
    C1 = co["c11"] * s2 + co["c12"] * s3
    if B1:
        s1 = -(s2 * s2 - s2 + co["b13"] * s2 * s3) / B1
    elif C1:
        # second equation is silent about x1; use the third one
        s1 = -(s3 * s3 - s3 + co["c13"] * s2 * s3) / C1
    else:
        raise errors.B1Vanishes("B1 and C1 both vanish at the candidate (x2, x3)")
    v = [s1, s2, s3]
    if not _is_idempotent(df.field, v):
        raise errors.VerificationFailed("candidate seventh point is not an idempotent")
    df.seventh = v
    if keep_intermediates:
        df.details.update({
            "lifted": lift,
            "resultant_x3": r3,
            "resultant_x2": r2,
            "quartic_x3": t4u,
            "quartic_x2": s4u,
            "coefficients": co,
        })
    return v


def proportional(u, v):
    """True when u and v span the same line."""
    for i in range(3):
        for j in range(i + 1, 3):
            if u[i] * v[j] != u[j] * v[i]:
                return False
    return True


def distinct_idempotents(vectors):
    """Number of pairwise non-proportional nonzero vectors."""
    kept = []
    for v in vectors:
        if not any(v):
            continue
        if not any(proportional(v, w) for w in kept):
            kept.append(v)
    return len(kept)


# -- genericity sampling ---------------------------------------------------


@dataclass
class GenericityStats:
    count: int
    coeff_range: int
    seed: int
    det_nonzero: int = 0
    constructed: int = 0
    seventh_found: int = 0
    seven_distinct: int = 0
    verdicts: dict = field(default_factory=dict)
    failures: dict = field(default_factory=dict)

    def fraction(self, key):
        return Fraction(getattr(self, key), self.count) if self.count else Fraction(0)

    def to_json(self):
        keys = ("det_nonzero", "constructed", "seventh_found", "seven_distinct")
        return {
            "count": self.count,
            "coeff_range": self.coeff_range,
            "seed": self.seed,
            "tallies": {k: getattr(self, k) for k in keys},
            "fractions": {k: str(self.fraction(k)) for k in keys},
            "fractions_decimal": {k: float(self.fraction(k)) for k in keys},
            "property_e_verdicts": dict(sorted(self.verdicts.items())),
            "failures": dict(sorted(self.failures.items())),
        }


def random_gamma(rng, coeff_range):
    """A 3x3 matrix of rationals p/q with p, q uniform in [-R, R] minus 0."""
    values = [v for v in range(-coeff_range, coeff_range + 1) if v]

    def entry():
        return Fraction(rng.choice(values), rng.choice(values))

    return [[entry() for _ in range(3)] for _ in range(3)]


def sample_genericity(count, coeff_range, seed, analyze=True, inject=()):
    """Run the construction pipeline on seeded random rational gammas and tally outcomes.

    Matrices in ``inject`` are used for the first trials in place of random draws.
    """
    if count < 0 or coeff_range < 1:
        raise ValueError("count must be >= 0 and coeff_range >= 1")
    rng = random.Random(seed)
    stats = GenericityStats(count=count, coeff_range=coeff_range, seed=seed)

    def fail(kind):
        stats.failures[kind] = stats.failures.get(kind, 0) + 1

    inject = list(inject)
    for i in range(count):
        gamma = GammaSpec(inject[i] if i < len(inject) else random_gamma(rng, coeff_range))
        if not gamma.matrix_a().det():
            fail("SingularA")
            continue
        stats.det_nonzero += 1
        try:
            df = construct_distinguished(gamma)
        except errors.InvsurfError as exc:
            fail(exc.kind)
            continue
        stats.constructed += 1
        try:
            v7 = seventh_idempotent(df)
        except errors.InvsurfError as exc:
            fail(exc.kind)
            continue
        stats.seventh_found += 1
        points = df.idempotents + [v7]
        if distinct_idempotents(points) != 7:
            fail("FewerThanSevenLines")
            continue
        stats.seven_distinct += 1
        if analyze:
            try:
                verdict = property_e_report(df.field, points).verdict
            except errors.InvsurfError as exc:
                verdict = exc.kind
            stats.verdicts[verdict] = stats.verdicts.get(verdict, 0) + 1
    return stats
