"""Print and re-parse random polynomials with radical coefficients."""

import random
from fractions import Fraction

from sl2kxy.parse import format_poly, parse_poly
from sl2kxy.poly import Poly
from sl2kxy.scalar import sqrt

rng = random.Random(5)
coeffs = [Fraction(1, 2), Fraction(-3), 1 + sqrt(2), sqrt(3) - sqrt(2), sqrt(-1)]
bad = 0
for i in range(500):
    p = Poly({(rng.randint(0, 4), rng.randint(0, 4)): rng.choice(coeffs)
              for _ in range(rng.randint(0, 6))})
    text = format_poly(p)
    bad += parse_poly(text) != p
    if i < 5:
        print(text)
print("mismatches:", bad)
