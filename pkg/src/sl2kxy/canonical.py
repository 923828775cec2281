"""Affine normal forms of degree-2 polynomials: x^2 + gamma, x^2 + y, x*y + gamma."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional

from .endo import AffineAuto, apply, invert_affine
from .errors import NotDegreeTwo
from .poly import Poly
from .scalar import Scalar, as_scalar, sqrt_adjoin

Tag = Literal["SquarePlusConst", "SquarePlusY", "CrossPlusConst"]


@dataclass(frozen=True, eq=False)
class CanonicalForm:
    tag: Tag
    gamma: Optional[Scalar] = None

    def poly(self) -> Poly:
        if self.tag == "SquarePlusConst":
            return Poly({(2, 0): 1, (0, 0): self.gamma})
        if self.tag == "SquarePlusY":
            return Poly({(2, 0): 1, (0, 1): 1})
        return Poly({(1, 1): 1, (0, 0): self.gamma})

    def __str__(self):
        return str(self.poly())


def _coords(u: tuple, v: tuple) -> AffineAuto:
    """The affine map (x, y) -> (u, v) for u, v given as (cx, cy, c0)."""
    return AffineAuto(u[0], u[1], v[0], v[1], u[2], v[2])


def _solve2(m11, m12, m21, m22, r1, r2):
    d = m11 * m22 - m12 * m21
    return (r1 * m22 - r2 * m12) / d, (m11 * r2 - m21 * r1) / d


def canonicalize_quadratic(f) -> tuple[AffineAuto, CanonicalForm]:
    """Return ``(theta, form)`` with ``apply(theta, f) == form.poly()``.

    ``theta`` is built by expressing ``f`` in new affine coordinates ``(u, v)``
    in which it reads ``u*v + gamma``, ``u^2 + v`` or ``u^2 + gamma``; the
    substitution is the inverse of that change of coordinates.
    """
    f = Poly.coerce(f)
    if f.degree() != 2:
        raise NotDegreeTwo(f"{f} has degree {f.degree()}, not 2")
    a, b, c = f.coeff(2, 0), f.coeff(1, 1), f.coeff(0, 2)
    d, e, k = f.coeff(1, 0), f.coeff(0, 1), f.coeff(0, 0)
    disc = b * b - 4 * a * c
    zero = Fraction(0)

    if disc != 0:
        # q = l1 * l2 with independent linear forms
        if a == 0 and c == 0:
            l1, l2 = (b, zero), (zero, Fraction(1))
        elif a == 0:
            l1, l2 = (b, c), (zero, Fraction(1))
        elif c == 0:
            l1, l2 = (Fraction(1), zero), (a, b)
        else:
            s, _ = sqrt_adjoin(disc)
            r1 = (-b + s) / (2 * a)
            r2 = (-b - s) / (2 * a)
            l1, l2 = (a, -a * r1), (Fraction(1), -r2)
        # linear part d*x + e*y = p*l1 + r*l2
        p, r = _solve2(l1[0], l2[0], l1[1], l2[1], d, e)
        gamma = k - p * r
        phi = _coords((l1[0], l1[1], r), (l2[0], l2[1], p))
        form = CanonicalForm("CrossPlusConst", gamma)
    else:
        # q = lam * l^2
        if a != 0:
            lam, l = a, (Fraction(1), b / (2 * a))
        else:
            lam, l = c, (zero, Fraction(1))
        s, _ = sqrt_adjoin(lam)
        l = (l[0] * s, l[1] * s)
        m = (zero, Fraction(1)) if l[0] != 0 else (Fraction(1), zero)
        p, r = _solve2(l[0], m[0], l[1], m[1], d, e)
        # f = (l + p/2)^2 + r*m + k - p^2/4
        rest = k - p * p / 4
        u = (l[0], l[1], p / 2)
        if r == 0:
            phi = _coords(u, (m[0], m[1], zero))
            form = CanonicalForm("SquarePlusConst", rest)
        else:
            phi = _coords(u, (r * m[0], r * m[1], rest))
            form = CanonicalForm("SquarePlusY")
    theta = invert_affine(phi)
    if not (apply(theta, f) == form.poly()):
        raise AssertionError(f"internal error: canonicalization of {f} failed")
    return theta, form


def quadratic_rank(f) -> int:
    """Rank of the quadratic part (affine invariant)."""
    f = Poly.coerce(f)
    a, b, c = f.coeff(2, 0), f.coeff(1, 1), f.coeff(0, 2)
    if a == 0 and b == 0 and c == 0:
        return 0
    return 2 if b * b - 4 * a * c != 0 else 1


__all__ = ["CanonicalForm", "canonicalize_quadratic", "quadratic_rank", "as_scalar"]
