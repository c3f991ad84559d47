import random
from fractions import Fraction

import pytest
import sympy as sp
from helpers import rand_elem, rand_fraction, seeds, to_sympy

from invsurf import errors
from invsurf.exact import (
    QQ,
    FieldElem,
    NotSquare,
    QuadExt,
    Square,
    canonical_radicand,
    create_tower,
    det,
    rank,
    rational_kernel,
    solve,
    sqrt_in_field,
)

K235 = create_tower([2, 3, 5])
K23 = create_tower([2, 3])
TOWERS = [QQ, create_tower([2]), K23, K235, create_tower([-1, 2]), create_tower([2, 3, 5, 7])]


# -- towers ---------------------------------------------------------------------


def test_empty_tower_is_rationals():
    assert QQ.size == 1
    assert QQ.basis_names() == ["1"]


def test_example_tower_basis():
    assert K235.size == 8
    assert K235.basis_names() == ["1", "sqrt2", "sqrt3", "sqrt6", "sqrt5", "sqrt10", "sqrt15", "sqrt30"]


@pytest.mark.parametrize(
    "discs, kind",
    [
        ([2, 8], errors.RedundantGenerator),
        ([2, 3, 6], errors.RedundantGenerator),
        ([4], errors.RedundantGenerator),
        ([12], errors.NotSquareFree),
        ([0], errors.NotSquareFree),
        ([2, 3, 5, 7, 11], errors.TowerTooLarge),
    ],
)
def test_invalid_towers(discs, kind):
    with pytest.raises(kind):
        create_tower(discs)


def test_towers_are_shared():
    assert create_tower([2, 3]) is K23


# -- arithmetic examples ----------------------------------------------------------


def test_basis_product():
    s2, s3 = K23.gen(0), K23.gen(1)
    assert s2 * s3 == K23.basis(3)


def test_division_example():
    s2 = K23.gen(0)
    assert K23.one / (1 + s2) == s2 - 1


def test_difference_of_squares():
    s2, s3 = K23.gen(0), K23.gen(1)
    assert (s2 + s3) * (s2 - s3) == -1


def test_division_by_zero():
    with pytest.raises(errors.DivisionByZero):
        K23.one / K23.zero


def test_mixed_towers_promote():
    a = create_tower([2]).gen(0)
    b = create_tower([3]).gen(0)
    with pytest.raises(errors.TowerMismatch):
        a + b
    assert a.promote(K23) * b.promote(K23) == K23.basis(3)


def test_negative_discriminant():
    K = create_tower([-1])
    i = K.gen(0)
    assert i * i == -1
    assert (1 + i) * (1 - i) == 2


def test_json_round_trip():
    rng = random.Random(5)
    for _ in range(50):
        a = rand_elem(rng, K235)
        assert FieldElem.from_json(a.to_json()) == a


# -- square roots -----------------------------------------------------------------


def test_rational_square():
    res = sqrt_in_field(QQ(Fraction(9, 4)))
    assert isinstance(res, Square) and res.root == Fraction(3, 2)


def test_rational_non_square():
    assert isinstance(sqrt_in_field(QQ(2)), NotSquare)


def test_nested_square():
    s2, s3 = K23.gen(0), K23.gen(1)
    res = sqrt_in_field(5 + 2 * K23.basis(3))
    assert isinstance(res, Square) and res.root == s2 + s3


def test_square_root_of_zero_rejected():
    with pytest.raises(errors.ZeroRadicand):
        sqrt_in_field(K23.zero)


def test_sqrt_of_squares():
    for rng in seeds(200, 1):
        K = rng.choice(TOWERS[:5])
        a = rand_elem(rng, K)
        if not a:
            continue
        res = sqrt_in_field(a * a)
        assert isinstance(res, Square)
        assert res.root * res.root == a * a
        assert res.root in (a, -a)


def test_sqrt_answers_are_sound():
    for rng in seeds(200, 2):
        K = rng.choice(TOWERS[:5])
        a = rand_elem(rng, K)
        if not a:
            continue
        res = sqrt_in_field(a)
        if isinstance(res, Square):
            assert res.root * res.root == a
        else:
            # over Q the verdict must agree with sympy
            if a.is_rational():
                q = a.rational_value()
                assert not (q >= 0 and sp.sqrt(sp.Rational(q.numerator, q.denominator)).is_rational)


def test_non_square_in_example_field():
    # sqrt7 is not in Q(sqrt2, sqrt3, sqrt5)
    assert isinstance(sqrt_in_field(K235(7)), NotSquare)
    assert isinstance(sqrt_in_field(K235.gen(0)), NotSquare)


# -- field axioms -----------------------------------------------------------------


def test_field_axioms():
    for rng in seeds(200, 3):
        K = rng.choice(TOWERS)
        a, b, c = (rand_elem(rng, K) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a - a == K.zero
        if a:
            assert a * a.inverse() == K.one
            assert (b / a) * a == b
        # faithful coordinates
        assert bool(a) == any(a.coords)


def test_product_matches_sympy():
    for rng in seeds(200, 4):
        K = rng.choice([K23, K235, create_tower([-1, 2])])
        a, b = rand_elem(rng, K), rand_elem(rng, K)
        assert sp.expand(to_sympy(a) * to_sympy(b) - to_sympy(a * b)) == 0


def test_conjugation_is_automorphism():
    for rng in seeds(200, 5):
        K = K235
        a, b = rand_elem(rng, K), rand_elem(rng, K)
        i = rng.randrange(K.k)
        assert (a * b).conjugate(i) == a.conjugate(i) * b.conjugate(i)
        assert (a + b).conjugate(i) == a.conjugate(i) + b.conjugate(i)


# -- quadratic extension ---------------------------------------------------------


def test_quadext_rejects_squares():
    with pytest.raises(errors.RadicandIsSquare):
        QuadExt(K23(5) + 2 * K23.basis(3))
    with pytest.raises(errors.ZeroRadicand):
        QuadExt(K23.zero)


def test_quadext_arithmetic():
    for rng in seeds(200, 6):
        base = K23
        while True:
            A = rand_elem(rng, base)
            if A and isinstance(sqrt_in_field(A), NotSquare):
                break
        L = QuadExt(A)
        x = L(rand_elem(rng, base), rand_elem(rng, base))
        y = L(rand_elem(rng, base), rand_elem(rng, base))
        assert L.sqrt * L.sqrt == L(A)
        assert x * y == y * x
        assert (x * y).conjugate() == x.conjugate() * y.conjugate()
        assert x * x.conjugate() == L(x.norm())
        if x:
            assert x * x.inverse() == L(1)


def test_canonical_radicand():
    for rng in seeds(200, 7):
        a = rand_elem(rng, K235)
        if not a:
            continue
        A, c = canonical_radicand(a)
        assert A * (c * c) == a
        assert all(x.denominator == 1 for x in A.coords)


# -- rational linear algebra ----------------------------------------------------


def test_kernel_examples():
    assert rational_kernel([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == []
    k = rational_kernel([[1, 1, -2]])
    assert len(k) == 2
    assert all(v[0] + v[1] - 2 * v[2] == 0 for v in k)
    k = rational_kernel([[1, 2], [2, 4]])
    assert k in ([[2, -1]], [[-2, 1]])


def test_kernel_properties():
    for rng in seeds(200, 8):
        r, c = rng.randint(1, 4), rng.randint(1, 5)
        m = [[rand_fraction(rng, 4) for _ in range(c)] for _ in range(r)]
        if rng.random() < 0.5 and r > 1:
            m[-1] = [x + y for x, y in zip(m[0], m[1 % r])]
        ker = rational_kernel(m)
        for v in ker:
            assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)
            assert all(Fraction(x).denominator == 1 for x in v)
        assert len(ker) + rank(m) == c
        assert sp.Matrix(m).rank() == rank(m)


def test_det_and_solve_match_sympy():
    for rng in seeds(50, 9):
        n = rng.randint(1, 4)
        m = [[rand_fraction(rng, 5) for _ in range(n)] for _ in range(n)]
        d = det(m)
        ref = sp.Matrix([[sp.Rational(x.numerator, x.denominator) for x in row] for row in m]).det()
        assert sp.Rational(d.numerator, d.denominator) == ref
        b = [rand_fraction(rng, 5) for _ in range(n)]
        x = solve(m, b)
        if d:
            assert [sum(a * y for a, y in zip(row, x)) for row in m] == b
        else:
            assert x is None
