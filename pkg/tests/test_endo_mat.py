import random
from fractions import Fraction

import pytest
from hypothesis import given
from strategies import polys

from sl2kxy.endo import AffineAuto, Endo, apply, compose, invert_affine, xy_swap
from sl2kxy.generate import random_affine, random_poly
from sl2kxy.mat import (COHN_MATRIX, J, CohnFactor, ElemMat, L, Mat2, U, cohn_b_corner, compress,
                        det, expand_diag, expand_J, expand_J_inverse, expand_special, inverse_steps,
                        mat_mul, product)
from sl2kxy.poly import Poly
from sl2kxy.scalar import sqrt

x, y = Poly.x(), Poly.y()
SWAP = AffineAuto(0, 1, 1, 0)


# endomorphisms

def test_apply_examples():
    p = Poly.coerce("x^3 - 2*x*y + 5")
    assert apply(AffineAuto.identity(), p) == p
    assert apply(SWAP, "x^2 + y") == Poly.coerce("y^2 + x")
    for gamma in (1, Fraction(-2, 3), sqrt(2)):
        f = x * y + gamma
        assert apply(xy_swap(gamma), f) == f


def test_invert_affine_examples():
    assert invert_affine(AffineAuto.identity()) == AffineAuto.identity()
    assert invert_affine(AffineAuto(2, 0, 0, 1)) == AffineAuto(Fraction(1, 2), 0, 0, 1)
    half = Fraction(1, 2)
    assert invert_affine(AffineAuto(1, 1, 1, -1)) == AffineAuto(half, half, half, -half)


def test_singular_affine_rejected():
    with pytest.raises(ValueError):
        AffineAuto(1, 2, 2, 4)


def test_general_endomorphism():
    th = Endo(x * x, x + y)
    assert apply(th, "x*y") == x ** 3 + x * x * y
    assert str(th) == "theta: x -> x^2; y -> x + y"


def test_invert_affine_random():
    rng = random.Random(5)
    for _ in range(50):
        th = random_affine(rng)
        inv = invert_affine(th)
        for v in (x, y):
            assert apply(compose(th, inv), v) == v
            assert apply(compose(inv, th), v) == v


@given(polys(), polys())
def test_apply_is_homomorphism(p, q):
    th = AffineAuto(1, 2, -1, 3, Fraction(1, 2), -1)
    assert apply(th, p * q) == apply(th, p) * apply(th, q)


# matrices

def test_cohn_matrix_determinant():
    assert det(COHN_MATRIX) == 1


def test_elementary_det_and_identity():
    for e in (U("x^3 + y"), L("y^2 - 7")):
        assert e.matrix().det() == 1
    A = Mat2("x", "y^2", "1", "x*y")
    assert mat_mul(A, Mat2.identity()) == A


def test_expand_J():
    assert product(expand_J()) == J
    assert product(expand_J_inverse()) == Mat2(0, -1, 1, 0)
    assert expand_special("J") == expand_J()


def test_expand_diag():
    assert expand_diag(1) == []
    assert product(expand_diag(2)) == Mat2(2, 0, 0, Fraction(1, 2))
    r = 1 + sqrt(3)
    assert product(expand_special("Diag", r)) == Mat2(r, 0, 0, 1 / r)
    with pytest.raises(ZeroDivisionError):
        expand_diag(0)


def test_elementary_under_affine_is_elementary():
    rng = random.Random(11)
    for _ in range(20):
        th = random_affine(rng)
        h = random_poly(rng, 3)
        for e in (U(h), L(h)):
            img = apply(th, e.matrix())
            assert img == ElemMat(e.side, apply(th, h)).matrix()


def test_det_multiplicative():
    rng = random.Random(2)
    for _ in range(30):
        A = product([U(random_poly(rng, 2)), L(random_poly(rng, 2))])
        B = Mat2(random_poly(rng, 2), random_poly(rng, 1), random_poly(rng, 1), random_poly(rng, 2))
        assert det(A @ B) == det(A) * det(B)


def test_compress_and_inverse_steps():
    steps = [U(x), U(-x), L(1), L(y), U(0), U(2)]
    assert compress(steps) == [L(y + 1), U(2)]
    assert product(inverse_steps(steps)) @ product(steps) == Mat2.identity()


def test_cohn_factor_expansions_have_det_one():
    for delta in (1, -1, Fraction(2, 3)):
        for psi in ("y", "y^3 - y + 2"):
            assert CohnFactor.A(delta, psi).matrix().det() == 1
    for gamma in (1, -2, Fraction(1, 3)):
        for k in range(2, 13):
            for scale in (1, 5):
                assert CohnFactor.B(gamma, k, scale).matrix().det() == 1


def test_cohn_b_corner_closed_form():
    for gamma in (1, 3):
        for k in (2, 5):
            num = 1 - Poly({(1, 1): Fraction(-1, gamma)}) ** k
            assert cohn_b_corner(gamma, k) * (x * y + gamma) == num


def test_cohn_factor_validation():
    with pytest.raises(ValueError):
        CohnFactor.A(0, "y")
    with pytest.raises(ValueError):
        CohnFactor.A(1, "x")
    with pytest.raises(ValueError):
        CohnFactor.B(0, 2)
    with pytest.raises(ValueError):
        CohnFactor.B(1, 1)
    assert CohnFactor.A(-1, "y").matrix() == Mat2("x^2", "x*y - 1", "x*y + 1", "y^2")
