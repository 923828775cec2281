"""Hypothesis strategies shared by the property tests."""

from fractions import Fraction

from hypothesis import strategies as st

from sl2kxy.poly import Poly
from sl2kxy.scalar import sqrt

small_fractions = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))

# basis of Q(sqrt 2, sqrt 3, sqrt 5) restricted to depth <= 3
_RADICALS = [Fraction(1), sqrt(2), sqrt(3), sqrt(5), sqrt(2) * sqrt(3)]


@st.composite
def scalars(draw, depth: int = 3):
    basis = _RADICALS[: depth + 1] if depth < 3 else _RADICALS
    coeffs = draw(st.lists(small_fractions, min_size=len(basis), max_size=len(basis)))
    acc = Fraction(0)
    for c, b in zip(coeffs, basis):
        acc = acc + c * b
    return acc


@st.composite
def polys(draw, max_degree: int = 3, coeff=None, max_terms: int = 6):
    coeff = coeff if coeff is not None else st.builds(Fraction, st.integers(-5, 5), st.integers(1, 3))
    mons = st.tuples(st.integers(0, max_degree), st.integers(0, max_degree)).filter(
        lambda m: m[0] + m[1] <= max_degree)
    items = draw(st.lists(st.tuples(mons, coeff), max_size=max_terms))
    terms: dict = {}
    for m, c in items:
        terms[m] = terms.get(m, Fraction(0)) + c
    return Poly(terms)


nonzero_polys = polys().filter(lambda p: not p.is_zero())
