"""2x2 polynomial matrices, elementary transvections and certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Literal, Optional

from .poly import Poly
from .scalar import Scalar, as_scalar

Side = Literal["U", "L"]


@dataclass(frozen=True, eq=False)
class Mat2:
    a11: Poly
    a12: Poly
    a21: Poly
    a22: Poly

    def __post_init__(self):
        for n in ("a11", "a12", "a21", "a22"):
            object.__setattr__(self, n, Poly.coerce(getattr(self, n)))

    @classmethod
    def identity(cls) -> Mat2:
        return cls(1, 0, 0, 1)

    @classmethod
    def of(cls, rows) -> Mat2:
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    def entries(self) -> tuple[Poly, Poly, Poly, Poly]:
        return self.a11, self.a12, self.a21, self.a22

    def rows(self):
        return (self.a11, self.a12), (self.a21, self.a22)

    def map(self, fn: Callable[[Poly], Poly]) -> Mat2:
        return Mat2(*(fn(e) for e in self.entries()))

    def __matmul__(self, other: Mat2) -> Mat2:
        return mat_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return all(a == b for a, b in zip(self.entries(), other.entries()))

    __hash__ = None

    def det(self) -> Poly:
        return det(self)

    def is_sl2(self) -> bool:
        return det(self) == 1

    def __str__(self):
        return f"[[{self.a11}, {self.a12}], [{self.a21}, {self.a22}]]"


def mat_mul(A: Mat2, B: Mat2) -> Mat2:
    return Mat2(A.a11 * B.a11 + A.a12 * B.a21, A.a11 * B.a12 + A.a12 * B.a22,
                A.a21 * B.a11 + A.a22 * B.a21, A.a21 * B.a12 + A.a22 * B.a22)


def det(A: Mat2) -> Poly:
    return A.a11 * A.a22 - A.a12 * A.a21


@dataclass(frozen=True, eq=False)
class ElemMat:
    """``U``: [[1, h], [0, 1]];  ``L``: [[1, 0], [h, 1]]."""

    side: Side
    h: Poly

    def __post_init__(self):
        if self.side not in ("U", "L"):
            raise ValueError(f"side must be 'U' or 'L', not {self.side!r}")
        object.__setattr__(self, "h", Poly.coerce(self.h))

    def matrix(self) -> Mat2:
        if self.side == "U":
            return Mat2(1, self.h, 0, 1)
        return Mat2(1, 0, self.h, 1)

    def inverse(self) -> ElemMat:
        return ElemMat(self.side, -self.h)

    def act(self, row: tuple[Poly, Poly]) -> tuple[Poly, Poly]:
        """Right multiplication of a row vector."""
        f, g = row
        if self.side == "U":
            return f, g + f * self.h
        return f + g * self.h, g

    def __eq__(self, other):
        if not isinstance(other, ElemMat):
            return NotImplemented
        return self.side == other.side and self.h == other.h

    __hash__ = None

    def __repr__(self):
        return f"ElemMat({self.side!r}, {str(self.h)!r})"


def U(h) -> ElemMat:
    return ElemMat("U", h)


def L(h) -> ElemMat:
    return ElemMat("L", h)


def product(mats) -> Mat2:
    acc = Mat2.identity()
    for m in mats:
        acc = acc @ (m.matrix() if isinstance(m, ElemMat) else m)
    return acc


def inverse_steps(steps: list[ElemMat]) -> list[ElemMat]:
    return [s.inverse() for s in reversed(steps)]


def compress(steps: list[ElemMat]) -> list[ElemMat]:
    """Merge adjacent same-side factors and drop identities."""
    out: list[ElemMat] = []
    for s in steps:
        if s.h.is_zero():
            continue
        if out and out[-1].side == s.side:
            h = out[-1].h + s.h
            out.pop()
            if not h.is_zero():
                out.append(ElemMat(s.side, h))
        else:
            out.append(s)
    return out


J = Mat2(0, 1, -1, 0)


def expand_J() -> list[ElemMat]:
    return [U(1), L(-1), U(1)]


def expand_J_inverse() -> list[ElemMat]:
    return [U(-1), L(1), U(-1)]


def expand_diag(u) -> list[ElemMat]:
    """Four transvections multiplying to ``[[u, 0], [0, 1/u]]``."""
    u = as_scalar(u)
    if u == 0:
        raise ZeroDivisionError("Diag(0) is not invertible")
    if u == 1:
        return []
    return [L((u - 1) / (u * u)), U(-u), L((1 - u) / u), U(1)]


def expand_special(which, u=None) -> list[ElemMat]:
    if which == "J":
        return expand_J()
    if which == "Diag":
        return expand_diag(u)
    raise ValueError(f"unknown special matrix {which!r}")


@dataclass(frozen=True, eq=False)
class CohnFactor:
    """Non-elementary factor of form A (``x^2, x*psi(y) + delta``) or B (``x*y + gamma, scale*x^k``)."""

    form: Literal["A", "B"]
    delta: Optional[Scalar] = None
    psi: Optional[Poly] = None
    gamma: Optional[Scalar] = None
    k: Optional[int] = None
    scale: Scalar = Fraction(1)

    def __post_init__(self):
        if self.form == "A":
            if self.delta is None or as_scalar(self.delta) == 0:
                raise ValueError("form A needs delta != 0")
            psi = Poly.coerce(self.psi if self.psi is not None else 0)
            if psi.deg_x() > 0:
                raise ValueError("psi must be a polynomial in y alone")
            object.__setattr__(self, "delta", as_scalar(self.delta))
            object.__setattr__(self, "psi", psi)
        elif self.form == "B":
            if self.gamma is None or as_scalar(self.gamma) == 0:
                raise ValueError("form B needs gamma != 0")
            if self.k is None or self.k < 2:
                raise ValueError("form B needs k >= 2")
            object.__setattr__(self, "gamma", as_scalar(self.gamma))
            object.__setattr__(self, "scale", as_scalar(self.scale))
            if self.scale == 0:
                raise ValueError("form B scale must be nonzero")
        else:
            raise ValueError(f"unknown Cohn form {self.form!r}")

    @classmethod
    def A(cls, delta, psi) -> CohnFactor:
        return cls("A", delta=delta, psi=psi)

    @classmethod
    def B(cls, gamma, k, scale=1) -> CohnFactor:
        return cls("B", gamma=gamma, k=k, scale=scale)

    def matrix(self) -> Mat2:
        x, y = Poly.x(), Poly.y()
        if self.form == "A":
            d, psi = self.delta, self.psi
            return Mat2(x * x, x * psi + d, (x * psi - d) * (1 / (d * d)), psi * psi * (1 / (d * d)))
        g, k, a = self.gamma, self.k, self.scale
        t = y * (-1 / g)
        return Mat2(x * y + g, x ** k * a, -(t ** k) * (1 / a), cohn_b_corner(g, k))

    def first_row(self) -> tuple[Poly, Poly]:
        m = self.matrix()
        return m.a11, m.a12

    def __eq__(self, other):
        if not isinstance(other, CohnFactor):
            return NotImplemented
        return self.form == other.form and self.matrix() == other.matrix()

    __hash__ = None


def cohn_b_corner(gamma, k: int) -> Poly:
    """``(1 - (-x*y/gamma)^k) / (gamma + x*y)``, expanded as a geometric sum."""
    gamma = as_scalar(gamma)
    r = Poly({(1, 1): -1 / gamma})
    acc = Poly()
    term = Poly.const(1 / gamma)
    for _ in range(k):
        acc = acc + term
        term = term * r
    return acc


COHN_MATRIX = Mat2("x^2", "x*y - 1", "x*y + 1", "y^2")


@dataclass(eq=False)
class Certificate:
    """``pre * cohn * post == A^theta``."""

    theta: object
    pre: list[ElemMat] = field(default_factory=list)
    cohn: Optional[CohnFactor] = None
    post: list[ElemMat] = field(default_factory=list)

    def product(self) -> Mat2:
        M = product(self.pre)
        if self.cohn is not None:
            M = M @ self.cohn.matrix()
        return M @ product(self.post)

    def n_factors(self) -> int:
        return len(self.pre) + len(self.post) + (self.cohn is not None)


# JSON form; scalars and polynomials are strings in the parser grammar

def elem_to_json(e: ElemMat) -> dict:
    return {"side": e.side, "h": str(e.h)}


def cohn_to_json(c: Optional[CohnFactor]):
    if c is None:
        return None
    if c.form == "A":
        return {"form": "A", "delta": str(Poly.const(c.delta)), "psi": str(c.psi)}
    return {"form": "B", "gamma": str(Poly.const(c.gamma)), "k": c.k, "scale": str(Poly.const(c.scale))}


def certificate_to_json(cert: Certificate) -> dict:
    theta = cert.theta
    return {
        "theta": {"x": str(theta.img_x), "y": str(theta.img_y)},
        "pre": [elem_to_json(e) for e in cert.pre],
        "cohn": cohn_to_json(cert.cohn),
        "post": [elem_to_json(e) for e in cert.post],
    }


def certificate_from_json(d: dict) -> Certificate:
    from .endo import Endo, affine_from_images
    th = d.get("theta") or {"x": "x", "y": "y"}
    ix, iy = Poly.coerce(th["x"]), Poly.coerce(th["y"])
    try:
        theta = affine_from_images(ix, iy)
    except ValueError:
        theta = Endo(ix, iy)
    c = d.get("cohn")
    cohn = None
    if c is not None:
        if c["form"] == "A":
            cohn = CohnFactor.A(as_scalar(c["delta"]), Poly.coerce(c["psi"]))
        else:
            cohn = CohnFactor.B(as_scalar(c["gamma"]), int(c["k"]), as_scalar(c.get("scale", "1")))
    return Certificate(theta,
                       [ElemMat(e["side"], e["h"]) for e in d.get("pre", [])],
                       cohn,
                       [ElemMat(e["side"], e["h"]) for e in d.get("post", [])])
