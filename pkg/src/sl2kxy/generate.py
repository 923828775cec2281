"""Seeded random instances for the test suites.

Every instance carries the factors it was built from, so the associated row
and the matrix are known independently of :mod:`sl2kxy.cofactors` and
:mod:`sl2kxy.decompose`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Optional

from .endo import AffineAuto, apply
from .mat import CohnFactor, ElemMat, L, Mat2, U, product
from .poly import Poly

Profile = Literal["row", "matrix"]
FAMILIES = ("x2+y", "x2+gamma", "xy+gamma", "linear")

GAMMA_POOL = tuple(Fraction(v) for v in (1, -1, 2, -2, 3, "1/2", "-1/3", "2/3"))
UNIT_POOL = tuple(Fraction(v) for v in (1, -1, 2, -3, "1/2", "-2/5"))


@dataclass(eq=False)
class Instance:
    seed: int
    profile: str
    family: str
    f: Poly
    g: Poly
    start: Mat2                      # determinant-one matrix with the starting row on top
    factors: list = field(default_factory=list)   # Mat2 / ElemMat, left to right
    matrix: Optional[Mat2] = None
    gamma: Optional[Fraction] = None
    terminal: str = "Trivial"        # kind of the starting row

    @property
    def row(self) -> tuple[Poly, Poly]:
        return self.f, self.g

    def witness(self) -> tuple[Poly, Poly]:
        """``(P, Q)`` read off the second row of the construction."""
        M = product(self.factors)
        return M.a22, -M.a21

    def to_dict(self) -> dict:
        d = {"seed": self.seed, "profile": self.profile, "family": self.family,
             "f": str(self.f), "g": str(self.g), "terminal": self.terminal,
             "gamma": None if self.gamma is None else str(self.gamma),
             "trace": [_factor_json(m) for m in self.factors]}
        if self.matrix is not None:
            d["matrix"] = [[str(self.matrix.a11), str(self.matrix.a12)],
                           [str(self.matrix.a21), str(self.matrix.a22)]]
        return d


def _factor_json(m) -> dict:
    if isinstance(m, ElemMat):
        return {"side": m.side, "h": str(m.h)}
    return {"matrix": [[str(m.a11), str(m.a12)], [str(m.a21), str(m.a22)]]}


def random_poly(rng: random.Random, max_degree: int, density: float = 0.4,
                coeffs=(-3, -2, -1, 1, 2, 3)) -> Poly:
    """A polynomial of degree ``<= max_degree``; the top degree always occurs."""
    if max_degree < 0:
        return Poly()
    terms = {}
    for d in range(max_degree + 1):
        for a in range(d + 1):
            if rng.random() < density:
                terms[(a, d - a)] = Fraction(rng.choice(coeffs))
    a = rng.randint(0, max_degree)
    terms[(a, max_degree - a)] = Fraction(rng.choice(coeffs))
    return Poly(terms)


def _unit_start(f: Poly) -> Mat2:
    return Mat2(f, 1, -1, 0)


def _start(rng: random.Random, family: str, max_h_degree: int):
    """Return ``(f, start matrix, gamma, terminal kind)``."""
    x, y = Poly.x(), Poly.y()
    if family == "x2+y":
        f = x * x + y
        return f, _unit_start(f), None, "Trivial"
    if family == "x2+gamma":
        gamma = rng.choice(GAMMA_POOL + (Fraction(0),))
        f = x * x + gamma
        kind = rng.choice(("unit", "linear", "cohn") if gamma == 0 else ("unit", "linear"))
        if kind == "unit":
            return f, _unit_start(f), gamma, "Trivial"
        if kind == "linear":
            # x^2 + gamma = (a + b x) q + c with c = gamma + a^2/b^2
            while True:
                a, b = Fraction(rng.randint(-3, 3)), Fraction(rng.choice((-2, -1, 1, 2)))
                c = gamma + a * a / (b * b)
                if c != 0:
                    break
            lin = b * x + a
            q = x * (1 / b) - a / (b * b)
            return f, Mat2(f, lin, q * (1 / c), (1 / c)), gamma, "Trivial"
        delta = rng.choice(UNIT_POOL)
        psi = random_poly(rng, max(1, max_h_degree), coeffs=(-2, -1, 1, 2))
        psi = Poly({(0, b): c for (a, b), c in psi.terms.items() if a == 0}) or Poly.y()
        if psi.is_constant():
            psi = psi + Poly.y()
        return f, CohnFactor.A(delta, psi).matrix(), gamma, "CohnA"
    if family == "xy+gamma":
        gamma = rng.choice(GAMMA_POOL)
        f = x * y + gamma
        kind = rng.choice(("unit", "xpow", "ypow"))
        if kind == "unit":
            return f, _unit_start(f), gamma, "Trivial"
        k = rng.randint(1, 4)
        alpha = rng.choice(UNIT_POOL)
        if k == 1:
            # (x*y + gamma, alpha*x) reduces straight to (1, 0)
            M = Mat2(f, x * alpha, y * (1 / (alpha * gamma)), 1 / gamma)
            if kind == "ypow":
                M = apply(AffineAuto(0, 1, 1, 0), M)
            return f, M, gamma, "Trivial"
        M = CohnFactor.B(gamma, k, alpha).matrix()
        if kind == "ypow":
            M = apply(AffineAuto(0, 1, 1, 0), M)
        return f, M, gamma, "CohnB"
    if family == "linear":
        while True:
            a, b = rng.randint(-3, 3), rng.randint(-3, 3)
            if a or b:
                break
        f = Poly({(1, 0): a, (0, 1): b, (0, 0): rng.randint(-3, 3)})
        return f, _unit_start(f), None, "Trivial"
    raise ValueError(f"unknown family {family!r}")


def generate_random_instance(seed: int, profile: Profile = "row", max_h_degree: int = 3,
                             steps: int = 3, family: Optional[str] = None) -> Instance:
    """Deterministic under ``seed``.

    ``row``: a canonical ``f`` and ``g`` built by ``steps`` moves ``g -> g + f*h``
    from a starting row of known type.  ``matrix``: such a row completed to a
    determinant-one matrix, then multiplied by random lower transvections on
    the left and upper ones on the right, ``steps`` in total.
    """
    if steps < 0:
        raise ValueError("steps must be >= 0")
    rng = random.Random(seed)
    if family is None:
        family = rng.choice(FAMILIES)
    f, start, gamma, terminal = _start(rng, family, max_h_degree)
    if profile == "row":
        factors: list = [start]
        for _ in range(steps):
            factors.append(U(random_poly(rng, rng.randint(0, max_h_degree))))
        M = product(factors)
        return Instance(seed, "row", family, M.a11, M.a12, start, factors, None, gamma, terminal)
    if profile != "matrix":
        raise ValueError(f"unknown profile {profile!r}")
    left: list = []
    right: list = []
    for _ in range(steps):
        h = random_poly(rng, rng.randint(0, max_h_degree))
        if rng.random() < 0.5:
            left.insert(0, L(h))
        else:
            right.append(U(h))
    factors = left + [start] + right
    M = product(factors)
    return Instance(seed, "matrix", family, M.a11, M.a12, start, factors, M, gamma, terminal)


def random_affine(rng: random.Random) -> AffineAuto:
    while True:
        a = [Fraction(rng.randint(-2, 2)) for _ in range(4)]
        if a[0] * a[3] - a[1] * a[2] != 0:
            return AffineAuto(*a, Fraction(rng.randint(-2, 2)), Fraction(rng.randint(-2, 2)))


def scrambled_matrix(seed: int, max_h_degree: int = 3, steps: int = 4) -> tuple[Mat2, list]:
    """A matrix-profile instance moved by a random affine map and ``J`` factors.

    Returns the matrix and the factor list multiplying to it.
    """
    inst = generate_random_instance(seed, "matrix", max_h_degree, steps)
    rng = random.Random(seed ^ 0x5EED)
    theta = random_affine(rng)
    factors = [m if isinstance(m, Mat2) else m.matrix() for m in inst.factors]
    factors = [apply(theta, m) for m in factors]
    Jm = Mat2(0, 1, -1, 0)
    if rng.random() < 0.5:
        factors.insert(0, Jm)
    if rng.random() < 0.5:
        factors.append(Jm)
    return product(factors), factors


def equal_degree_row(seed: int, n: int, max_tries: int = 200) -> Instance:
    """A unimodular row with ``deg f == deg g == n`` and its witness.

    The row is the first row of a random product of transvections, equalized
    by one final ``g -> g + c*f`` (or ``f -> f + c*g``) and moved by a random
    affine map.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(seed * 7919 + n)
    for _ in range(max_tries):
        factors: list = []
        a = rng.randint(1, n)
        factors.append(U(random_poly(rng, a, density=0.3)))
        factors.append(L(random_poly(rng, n - a, density=0.3)))
        if rng.random() < 0.5:
            factors.append(U(random_poly(rng, rng.randint(0, 1), density=0.3)))
        M = product(factors)
        df, dg = M.a11.degree(), M.a12.degree()
        c = Fraction(rng.choice((-2, -1, 1, 2)))
        if dg < df:
            factors.append(U(c))
        elif df < dg:
            factors.append(L(c))
        theta = random_affine(rng)
        factors = [apply(theta, m.matrix()) for m in factors]
        M = product(factors)
        f, g = M.a11, M.a12
        if f.degree() == n and g.degree() == n:
            return Instance(seed, "row", "equal-degree", f, g, factors[0], factors, M)
    raise RuntimeError(f"no equal-degree row of degree {n} found for seed {seed}")


def planted_zero_row(seed: int, max_degree: int = 3) -> tuple[Poly, Poly, tuple[Fraction, Fraction]]:
    """A row whose entries both vanish at a random rational point."""
    rng = random.Random(seed)
    pt = (Fraction(rng.randint(-3, 3), rng.choice((1, 2))), Fraction(rng.randint(-3, 3), rng.choice((1, 3))))
    dx = Poly({(1, 0): 1, (0, 0): -pt[0]})
    dy = Poly({(0, 1): 1, (0, 0): -pt[1]})

    def entry():
        while True:
            p = dx * random_poly(rng, rng.randint(0, max_degree - 1)) + \
                dy * random_poly(rng, rng.randint(0, max_degree - 1))
            if not p.is_zero():
                return p

    return entry(), entry(), pt
