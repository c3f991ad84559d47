from fractions import Fraction
from math import gcd

import pytest
import sympy as sp
from helpers import SURD_TOWER, zero_pattern_gamma, rand_elem, rand_fraction, rand_poly, seeds, sympy_equal, to_sympy

from invsurf import errors
from invsurf.distinguished import construct_distinguished, seventh_idempotent
from invsurf.exact import QQ, QuadElem, create_tower, rational_kernel
from invsurf.infinity import (
    Cond1,
    Cond2,
    Line,
    Neither,
    NotInvariantLine,
    classify_conditions,
    infinity_spectrum,
    line_count,
    property_e_report,
    transform_crosscheck,
    verify_invariant_line,
)
from invsurf.parse_io import ParseContext, parse_poly
from invsurf.poly import MPoly, PolyVectorField

r2, r3, r5 = sp.sqrt(2), sp.sqrt(3), sp.sqrt(5)


def F(*texts, tower=QQ):
    ctx = ParseContext.standard(len(texts), tower)
    return PolyVectorField([parse_poly(t, ctx) for t in texts])


def _same_multiset(ours, reference):
    left = [to_sympy(x) for x in ours]
    for p in reference:
        for i, x in enumerate(left):
            if sympy_equal(x, p):
                left.pop(i)
                break
        else:
            return False
    return not left


# -- invariant lines --------------------------------------------------------------


def test_line_count():
    assert line_count(2, 3) == 7
    assert line_count(3, 2) == 4
    assert line_count(1, 3) == 3


def test_invariant_line_examples(surd):
    K = SURD_TOWER
    res = verify_invariant_line(surd.field, [K.one, K.zero, K.zero])
    assert res == Line(K.one)
    assert isinstance(verify_invariant_line(surd.field, [1, 1, 1]), NotInvariantLine)
    with pytest.raises(errors.ZeroVector):
        verify_invariant_line(surd.field, [0, 0, 0])


def test_all_idempotents_are_lines(surd_lines, surd):
    for v in surd_lines:
        assert verify_invariant_line(surd.field, v) == Line(SURD_TOWER.one)


def test_gamma_scales_with_direction():
    for rng in seeds(200, 50):
        m = rng.randint(1, 3)
        # p(x) = x * ell(x)^(m-1) has every direction invariant
        ell = rand_poly(rng, 3, 1, terms=3, min_degree=1)
        xs = MPoly.gens(3)
        f = PolyVectorField([x * ell ** (m - 1) + rand_poly(rng, 3, m - 1, terms=2) for x in xs])
        if f.m != m:
            continue
        v = [rand_fraction(rng, 5) for _ in range(3)]
        if not any(v):
            continue
        c = rand_fraction(rng, 5, allow_zero=False)
        g1 = verify_invariant_line(f, v).gamma
        g2 = verify_invariant_line(f, [c * x for x in v]).gamma
        assert g2 == g1 * c ** (m - 1)


# -- spectra -----------------------------------------------------------------------


def test_spectrum_at_e1(surd):
    K = SURD_TOWER
    rep = infinity_spectrum(surd.field, [K.one, K.zero, K.zero])
    reference = [-(r5 - 1) * r2 / 2, -r2 * (r3 - 1) / 2, 2]
    assert _same_multiset(rep.dp_spectrum, reference)
    assert _same_multiset(rep.inf_spectrum, [-1, -(r5 - 1) * r2 / 2 - 1, -r2 * (r3 - 1) / 2 - 1])
    assert rep.multiplicity_one


def test_reference_tables_for_six_idempotents(surd):
    reference = [
        [-(r5 - 1) * r2 / 2, -r2 * (r3 - 1) / 2, 2],
        [-(r5 - 1) * r3 / 3, -r3 * (r2 - 1) / 3, 2],
        [-r5 * (r3 - 1) / 5, -r5 * (r2 - 1) / 5, 2],
        [2, r2 + r3, -2 * r5 + 2],
        [2, -2 * r2 + 2, r5 + r3],
        [2, -2 * r3 + 2, r5 + r2],
    ]
    for v, table in zip(surd.idempotents, reference):
        rep = infinity_spectrum(surd.field, v)
        assert rep.extension is None
        assert _same_multiset(rep.dp_spectrum, table)
        assert isinstance(rep.classification, Cond1)


def test_reference_pair_at_seventh_idempotent(surd):
    rep = infinity_spectrum(surd.field, surd.seventh)
    assert to_sympy(rep.dp_spectrum[0]) == 2
    lp, lm = rep.dp_spectrum[1:]
    assert isinstance(lp, QuadElem) and isinstance(lm, QuadElem)
    d = 4061514
    center = (((794929 * r2 + 762999) * r3 + 880620 * r2 + 1744545) * r5 / d
              + (1796931 * r2 + 3382333) * r3 / d + sp.Rational(776393, 676919) * r2 + sp.Rational(3211015, 1353838))
    A = (((-6061791842292 * r5 + 20403579754296) * r3 - 10627847112816 * r5 + 45521293739166) * r2
         + (-8804787537402 * r5 + 29950278886104) * r3 - 15500011528278 * r5 + 66711726928548)
    # the pair is center +- sqrt(A)/d: compare the sum and the squared half-difference
    assert sympy_equal(to_sympy(lp.u), center)
    assert sympy_equal(to_sympy(lp.v * lp.v * lp.ext.radicand), A / d**2)
    assert isinstance(rep.classification, Cond1)


def test_diagonal_power_map():
    for m in (2, 3):
        f = F(f"x1^{m}", f"x2^{m}", f"x3^{m}")
        rep = infinity_spectrum(f, [1, 0, 0])
        assert [to_sympy(x) for x in rep.dp_spectrum] == [m, 0, 0]
        assert [to_sympy(x) for x in rep.inf_spectrum] == [-1, -1, -1]


def test_spectrum_dimension_limit():
    f = F("x1^2", "x2^2", "x3^2", "x4^2")
    with pytest.raises(errors.UnsupportedDimension):
        infinity_spectrum(f, [1, 0, 0, 0])


def test_not_invariant_is_rejected(surd):
    with pytest.raises(errors.NotInvariant):
        infinity_spectrum(surd.field, [1, 1, 1])


def _field_with_line(rng, tower=QQ):
    """Quadratic field on 3-space with a prescribed invariant direction v."""
    n = 3
    while True:
        v = [rand_elem(rng, tower, 4) for _ in range(n)]
        if not any(v):
            continue
        gamma = rand_elem(rng, tower, 4)
        comps = [rand_poly(rng, n, 2, tower, terms=4, r=5, min_degree=2) for _ in range(n)]
        k = next(i for i, x in enumerate(v) if x)
        xk2 = MPoly.var(n, k, tower) ** 2
        comps = [c - xk2 * ((c.evaluate(v) - gamma * vi) / (v[k] * v[k])) for c, vi in zip(comps, v)]
        lower = [rand_poly(rng, n, 1, tower, terms=2, r=5) for _ in range(n)]
        f = PolyVectorField([a + b for a, b in zip(comps, lower)])
        if f.m == 2:
            return f, v


def test_transform_crosscheck_random():
    for rng in seeds(200, 51):
        tower = QQ if rng.random() < 0.7 else create_tower([2])
        f, v = _field_with_line(rng, tower)
        rep = infinity_spectrum(f, v, crosscheck=True)
        assert rep.crosscheck is True
        assert transform_crosscheck(f, v, rep)
        # every eigenvalue is a root of the Jacobian's characteristic polynomial
        assert len(rep.inf_spectrum) == 3


def test_transform_crosscheck_example(surd, surd_lines):
    for v in surd_lines:
        assert transform_crosscheck(surd.field, v)


# -- classification -----------------------------------------------------------------


def test_classification_examples():
    K = SURD_TOWER
    s2, s3, s5 = K.gen(0), K.gen(1), K.gen(2)
    assert isinstance(classify_conditions([K(2), s2 + s3, 2 - 2 * s5]), Cond1)
    res = classify_conditions([K(1), s2, -1 - s2])
    assert res == Cond2((1, 1, 1))
    assert isinstance(classify_conditions([QQ(1), QQ(2), QQ(3)]), Neither)


def test_classification_agrees_with_kernel_oracle():
    K = SURD_TOWER
    s2, s3, s5 = K.gen(0), K.gen(1), K.gen(2)
    coords = [[Fraction(c) for c in x.coords] for x in [K(2), s2 + s3, 2 - 2 * s5]]
    rows = [list(r) for r in zip(*coords)]
    assert rational_kernel(rows) == []
    assert sp.Matrix(rows).rank() == 3


def _random_spectrum(rng):
    K = rng.choice([QQ, create_tower([2]), create_tower([2, 3])])
    kind = rng.random()
    a = rand_elem(rng, K, 5)
    b = rand_elem(rng, K, 5)
    if kind < 0.4:
        # positive relation m1 a + m2 b + m3 c = 0
        ms = [rng.randint(1, 4) for _ in range(3)]
        c = -(a * ms[0] + b * ms[1]) / ms[2]
        return [a, b, c]
    return [a, b, rand_elem(rng, K, 5)]


def test_classification_invariances():
    for rng in seeds(200, 52):
        eigs = _random_spectrum(rng)
        if not all(eigs):
            continue
        base = classify_conditions(eigs)
        perm = list(range(3))
        rng.shuffle(perm)
        permuted = classify_conditions([eigs[i] for i in perm])
        q = rand_fraction(rng, 7, allow_zero=False)
        scaled = classify_conditions([x * q for x in eigs])
        assert type(base) is type(permuted) is type(scaled)
        if isinstance(base, Cond2):
            assert tuple(base.multipliers[i] for i in perm) == permuted.multipliers
            assert scaled.multipliers == base.multipliers
            ms = base.multipliers
            assert all(x > 0 for x in ms)
            assert gcd(*ms) == 1
            total = sum((x * k for x, k in zip(eigs, ms)), eigs[0].tower.zero)
            assert not total


def test_classification_in_quadratic_extension():
    # residual block [[1, 1], [1, 0]] at e1: the pair (1 +- sqrt5)/2 is adjoined
    f = F("x1^2", "x1*x2 + x1*x3 + x2^2", "x1*x2 + x3^2")
    rep = infinity_spectrum(f, [1, 0, 0], crosscheck=True)
    assert rep.crosscheck
    assert rep.extension is not None
    assert to_sympy(rep.extension.radicand) in (5, 20, sp.Rational(5, 4))
    got = sorted(float(to_sympy(x)) for x in rep.inf_spectrum)
    assert got == pytest.approx(sorted([-1.0, (-1 + 5**0.5) / 2, (-1 - 5**0.5) / 2]))
    # -1 = lambda2 + lambda3 is a relation with mixed signs
    cls = rep.classification
    assert isinstance(cls, Neither) and len(cls.relations) == 1


# -- property E -----------------------------------------------------------------------


def test_property_e_on_example(surd, surd_lines):
    rep = property_e_report(surd.field, surd_lines, crosscheck=True)
    assert rep.verdict == "Satisfied"
    assert rep.complete
    assert rep.curve_bound == 7
    assert all(isinstance(p.classification, Cond1) for p in rep.points)
    assert all(p.crosscheck for p in rep.points)


def test_property_e_diagonal_squares():
    f = F("x1^2", "x2^2", "x3^2")
    lines = [[a, b, c] for a in (0, 1) for b in (0, 1) for c in (0, 1) if a or b or c]
    rep = property_e_report(f, lines)
    assert len(rep.points) == 7
    assert rep.verdict == "Violated"
    assert isinstance(rep.points[rep.witness].classification, Neither)


def test_property_e_incomplete(surd, surd_lines):
    rep = property_e_report(surd.field, surd_lines[:5])
    assert rep.verdict == "Incomplete" and not rep.complete


def test_property_e_duplicate_line(surd, surd_lines):
    K = SURD_TOWER
    doubled = [x * 3 for x in surd_lines[3]]
    with pytest.raises(errors.DuplicateLine):
        property_e_report(surd.field, surd_lines[:4] + [doubled])


def test_count_law_on_sampled_fields():
    for rng in seeds(10, 53):
        df = construct_distinguished(zero_pattern_gamma(rng))
        seventh_idempotent(df)
        lines = [list(v) for v in df.idempotents] + [list(df.seventh)]
        rep = property_e_report(df.field, lines)
        if all(p.multiplicity_one for p in rep.points):
            assert len(rep.points) == 7 == rep.expected_count
            assert rep.complete
