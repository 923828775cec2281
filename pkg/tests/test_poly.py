from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from strategies import nonzero_polys, polys, small_fractions

from sl2kxy.errors import BothZero, DivisionByZeroPoly, NotDivisible
from sl2kxy.poly import (LaurentX, Poly, divmod_grlex, exact_div, gcd_bivariate,
                         homogeneous_components, laurent_is_unit, laurent_substitute, substitute)
from sl2kxy.scalar import sqrt

x, y = Poly.x(), Poly.y()


def P(s):
    return Poly.coerce(s)


def test_difference_of_squares():
    assert (x + y) * (x - y) == x * x - y * y


def test_zero_absorbs():
    assert (x * x) * 0 == Poly()
    assert ((x * x) * Poly()).is_zero()


def test_cohn_determinant_expansion():
    assert (x * y + 1) * (x * y - 1) + 1 == P("x^2*y^2")


def test_degrees_and_zero_conventions():
    p = P("x^3*y + y^2 + 4")
    assert p.degree() == 4 and p.deg_x() == 3 and p.deg_y() == 2
    assert Poly().degree() == -1
    assert P("7").is_constant() and P("7").constant_term() == 7


def test_homogeneous_components_examples():
    assert homogeneous_components(P("x^2 + x*y - 1")) == [(0, P("-1")), (2, P("x^2 + x*y"))]
    assert homogeneous_components(Poly()) == []
    assert homogeneous_components(P("x*y + 1")) == [(0, P("1")), (2, P("x*y"))]


def test_substitute_examples():
    assert substitute(P("x^2 + y"), (x, -x * x)).is_zero()
    p = P("x^3*y - 2*y + 1")
    assert substitute(p, (x, y)) == p
    assert substitute(P("x^2 - y^2"), (x + y, x - y)) == P("4*x*y")


def test_gcd_examples():
    assert gcd_bivariate(P("x^2"), P("x*y")) == x
    assert gcd_bivariate(P("2*x*y + 4"), Poly()) == P("x*y + 2")
    assert gcd_bivariate(P("x^2*y + x"), P("x*y^2 + y")) == P("x*y + 1")
    with pytest.raises(BothZero):
        gcd_bivariate(Poly(), Poly())


def test_gcd_nontrivial_content():
    a = P("(x + y + 1)*(x*y - 3)*(y^2 + 1)")
    b = P("(x + y + 1)*(y^2 + 1)*(x^2 - y)")
    assert gcd_bivariate(a, b) == P("(x + y + 1)*(y^2 + 1)").monic()


def test_gcd_over_extension():
    r2 = sqrt(2)
    a = (x - r2 * y) * (x + 1)
    b = (x - r2 * y) * (y + 3)
    assert gcd_bivariate(a, b) == x - r2 * y


def test_exact_div_examples():
    assert exact_div(P("x^2*y^2 - 1"), P("x*y + 1")) == P("x*y - 1")
    p = P("3*x^2 + y")
    assert exact_div(p, p) == 1
    assert exact_div(P("1 - (-x*y)^2"), P("1 + x*y")) == P("1 - x*y")


def test_exact_div_errors():
    with pytest.raises(NotDivisible) as info:
        exact_div(P("x^2 + 1"), x)
    assert info.value.remainder == 1
    with pytest.raises(DivisionByZeroPoly):
        exact_div(x, Poly())


def test_laurent_examples():
    assert laurent_substitute(P("x^2 + y"), -1) == LaurentX({2: 1, -1: -1})
    assert laurent_substitute(P("x*y + 1"), -1) == LaurentX()
    assert laurent_substitute(P("x^2"), Fraction(5, 3)) == LaurentX({2: 1})
    assert laurent_is_unit(LaurentX({-2: 3})) == (3, -2)
    assert laurent_is_unit(LaurentX({2: 1, 0: -1})) is None
    assert laurent_is_unit(LaurentX()) is None


def test_monomial_order_is_graded_lex():
    p = P("y^3 + x*y + x^2 + x^3 + 1")
    assert [m for m, _ in p.sorted_terms()] == [(3, 0), (0, 3), (2, 0), (1, 1), (0, 0)]
    assert p.leading_monomial() == (3, 0)


# properties

@settings(max_examples=300)
@given(polys(), polys(), polys(max_degree=2), polys(max_degree=2))
def test_substitute_is_a_ring_homomorphism(p, q, X, Y):
    assert substitute(p * q, (X, Y)) == substitute(p, (X, Y)) * substitute(q, (X, Y))
    assert substitute(p + q, (X, Y)) == substitute(p, (X, Y)) + substitute(q, (X, Y))


@given(polys(max_degree=5, max_terms=10))
def test_homogeneous_components_partition(p):
    parts = homogeneous_components(p)
    degs = [d for d, _ in parts]
    assert degs == sorted(set(degs))
    acc = Poly()
    for d, c in parts:
        assert c.is_homogeneous() and c.degree() == d
        acc = acc + c
    assert acc == p


@given(nonzero_polys, nonzero_polys, polys(max_degree=2))
def test_gcd_divides_and_is_symmetric(a, b, c):
    a, b = a * (c + 1), b * (c + 1)
    if a.is_zero() or b.is_zero():
        return
    g = gcd_bivariate(a, b)
    exact_div(a, g)
    exact_div(b, g)
    assert g == gcd_bivariate(b, a)
    if not (c + 1).is_zero():
        exact_div(g, (c + 1).monic())


@given(polys(), nonzero_polys)
def test_exact_div_round_trip(p, q):
    assert exact_div(p * q, q) == p


@given(polys(), nonzero_polys)
def test_divmod_identity(p, q):
    quo, rem = divmod_grlex(p, q)
    assert quo * q + rem == p


@given(polys(), polys(), small_fractions.filter(bool))
def test_laurent_substitute_multiplicative(p, q, c):
    assert laurent_substitute(p * q, c) == laurent_substitute(p, c) * laurent_substitute(q, c)


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == Poly()


@given(st.integers(0, 6), nonzero_polys)
def test_pow(n, p):
    acc = Poly.const(1)
    for _ in range(n):
        acc = acc * p
    assert p ** n == acc
