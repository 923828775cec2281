"""Endomorphisms and affine automorphisms of K[x, y]."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import Poly, substitute
from .scalar import Scalar, as_scalar


@dataclass(frozen=True, eq=False)
class Endo:
    """The substitution ``x -> img_x``, ``y -> img_y``."""

    img_x: Poly
    img_y: Poly

    def __call__(self, p):
        return apply(self, p)

    def __str__(self):
        return f"theta: x -> {self.img_x}; y -> {self.img_y}"


@dataclass(frozen=True, eq=False)
class AffineAuto:
    """``x -> a11*x + a12*y + t1``, ``y -> a21*x + a22*y + t2`` with invertible linear part."""

    a11: Scalar
    a12: Scalar
    a21: Scalar
    a22: Scalar
    t1: Scalar = Fraction(0)
    t2: Scalar = Fraction(0)

    def __post_init__(self):
        for name in ("a11", "a12", "a21", "a22", "t1", "t2"):
            object.__setattr__(self, name, as_scalar(getattr(self, name)))
        if self.det() == 0:
            raise ValueError("affine map with singular linear part")

    @classmethod
    def identity(cls) -> AffineAuto:
        return cls(1, 0, 0, 1)

    def det(self) -> Scalar:
        return self.a11 * self.a22 - self.a12 * self.a21

    @property
    def img_x(self) -> Poly:
        return Poly({(1, 0): self.a11, (0, 1): self.a12, (0, 0): self.t1})

    @property
    def img_y(self) -> Poly:
        return Poly({(1, 0): self.a21, (0, 1): self.a22, (0, 0): self.t2})

    def is_identity(self) -> bool:
        return (self.a11 == 1 and self.a22 == 1 and self.a12 == 0 and self.a21 == 0
                and self.t1 == 0 and self.t2 == 0)

    def __call__(self, p):
        return apply(self, p)

    def __eq__(self, other):
        if not isinstance(other, AffineAuto):
            return NotImplemented
        return all(getattr(self, n) == getattr(other, n) for n in ("a11", "a12", "a21", "a22", "t1", "t2"))

    __hash__ = None

    def __str__(self):
        return f"theta: x -> {self.img_x}; y -> {self.img_y}"


def apply(theta, p):
    """Image of a polynomial (or of every entry of a matrix) under ``theta``."""
    from .mat import Mat2
    if isinstance(p, Mat2):
        return p.map(lambda e: apply(theta, e))
    return substitute(Poly.coerce(p), (theta.img_x, theta.img_y))


def compose(outer, inner):
    """The endomorphism ``p -> outer(inner(p))``."""
    ix = apply(outer, inner.img_x)
    iy = apply(outer, inner.img_y)
    if isinstance(outer, AffineAuto) and isinstance(inner, AffineAuto):
        return _affine_from(ix, iy)
    return Endo(ix, iy)


def _affine_from(ix: Poly, iy: Poly) -> AffineAuto:
    return AffineAuto(ix.coeff(1, 0), ix.coeff(0, 1), iy.coeff(1, 0), iy.coeff(0, 1),
                      ix.coeff(0, 0), iy.coeff(0, 0))


def affine_from_images(ix, iy) -> AffineAuto:
    """Build an AffineAuto from degree-<=1 images of ``x`` and ``y``."""
    ix, iy = Poly.coerce(ix), Poly.coerce(iy)
    if ix.degree() > 1 or iy.degree() > 1:
        raise ValueError("images must have degree at most 1")
    return _affine_from(ix, iy)


def invert_affine(theta: AffineAuto) -> AffineAuto:
    d = theta.det()
    b11, b12 = theta.a22 / d, -theta.a12 / d
    b21, b22 = -theta.a21 / d, theta.a11 / d
    # inverse sends v -> A^{-1} (v - t)
    return AffineAuto(b11, b12, b21, b22,
                      -(b11 * theta.t1 + b12 * theta.t2),
                      -(b21 * theta.t1 + b22 * theta.t2))


def xy_swap(gamma) -> AffineAuto:
    """``x -> -y/gamma``, ``y -> -gamma*x``; fixes ``x*y`` and trades ``x^k`` for ``(-y/gamma)^k``."""
    gamma = as_scalar(gamma)
    return AffineAuto(0, -1 / gamma, -gamma, 0)
