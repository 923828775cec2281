"""Reduction of unimodular rows by elementary column operations.

Every reducer takes the row ``(f, g)`` with ``f`` in one of the canonical
shapes and returns a :class:`RowCert`: the transvections applied on the right,
in order, and the terminal row they produce.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Optional

from .errors import NotDivisible, NotUnimodular, PreconditionViolated
from .mat import ElemMat, L, U
from .poly import Poly, exact_div, laurent_is_unit, laurent_substitute
from .scalar import Scalar, as_scalar

Row = tuple[Poly, Poly]


@dataclass(frozen=True, eq=False)
class Terminal:
    """Where a reduction stops.

    ``Trivial`` is the row (1, 0).  ``CohnA`` is ``(x^2, x*psi(y) + delta)``.
    ``CohnB`` is ``(x*y + gamma, scale*x^k)``, or ``(x*y + gamma,
    scale*(-y/gamma)^k)`` when ``in_y`` is set.
    """

    kind: Literal["Trivial", "CohnA", "CohnB"]
    delta: Optional[Scalar] = None
    psi: Optional[Poly] = None
    gamma: Optional[Scalar] = None
    k: Optional[int] = None
    scale: Scalar = Fraction(1)
    in_y: bool = False

    def row(self) -> Row:
        x, y = Poly.x(), Poly.y()
        if self.kind == "Trivial":
            return Poly.const(1), Poly()
        if self.kind == "CohnA":
            return x * x, x * self.psi + self.delta
        base = x if not self.in_y else y * (-1 / self.gamma)
        return x * y + self.gamma, base ** self.k * self.scale

    def __str__(self):
        if self.kind == "Trivial":
            return "Trivial"
        if self.kind == "CohnA":
            return f"CohnA(delta={self.delta}, psi={self.psi})"
        return f"CohnB(gamma={self.gamma}, k={self.k}, scale={self.scale}, in_y={self.in_y})"


TRIVIAL = Terminal("Trivial")


@dataclass(eq=False)
class RowCert:
    steps: list[ElemMat] = field(default_factory=list)
    terminal: Terminal = TRIVIAL

    def replay(self, row: Row) -> Row:
        return apply_steps(row, self.steps)

    def check(self, row: Row) -> bool:
        end = self.replay(row)
        want = self.terminal.row()
        return end[0] == want[0] and end[1] == want[1]


def apply_steps(row: Row, steps) -> Row:
    row = (Poly.coerce(row[0]), Poly.coerce(row[1]))
    for s in steps:
        row = s.act(row)
    return row


def trace_lines(row: Row, steps) -> list[str]:
    """``step <n>: <side> h=<poly> -> row=(<f>, <g>)`` for each step."""
    out = []
    row = (Poly.coerce(row[0]), Poly.coerce(row[1]))
    for n, s in enumerate(steps, 1):
        row = s.act(row)
        out.append(f"step {n}: {s.side} h={s.h} -> row=({row[0]}, {row[1]})")
    return out


def _push(steps: list, row: Row, step: ElemMat) -> Row:
    if step.h.is_zero():
        return row
    steps.append(step)
    return step.act(row)


def finish_constant(row: Row, steps: list) -> Row:
    """Take a row with a nonzero constant entry to (1, 0)."""
    f, g = row
    if f == 1 and g.is_zero():
        return row
    if g.is_constant() and not g.is_zero():
        c = g.constant_term()
        row = _push(steps, row, L((1 - f) * (1 / c)))
        row = _push(steps, row, U(Poly.const(-c)))
        return row
    if f.is_constant() and not f.is_zero():
        c = f.constant_term()
        row = _push(steps, row, U((1 - g) * (1 / c)))
        row = _push(steps, row, L(Poly.const(1 - c)))
        row = _push(steps, row, U(Poly.const(-1)))
        return row
    raise NotUnimodular(f"row ({f}, {g}) has no unit entry")


def _descend_linear(row: Row, pivot: int, steps: list) -> tuple[Row, Poly]:
    """Reduce the non-pivot entry modulo the degree-1 pivot until it is constant.

    Returns the new row and the accumulated quotient ``h`` (other = h*pivot + c).
    """
    lin = row[pivot]
    top = lin.component(1)
    h_total = Poly()
    while True:
        other = row[1 - pivot]
        if other.degree() <= 0:
            break
        try:
            h = exact_div(other.top(), top)
        except NotDivisible:
            raise NotUnimodular(
                f"top form of {other} is not divisible by {top}; ({row[0]}, {row[1]}) is not unimodular")
        h_total = h_total + h
        row = _push(steps, row, U(-h) if pivot == 0 else L(-h))
    if row[1 - pivot].is_zero():
        raise NotUnimodular(f"descent by {lin} ended at zero")
    return row, h_total


def corollary1_reduce(f, g) -> tuple[Poly, Scalar, list[ElemMat]]:
    """For ``deg f == 1`` write ``g = h*f + c`` and reduce the row to (1, 0)."""
    f, g = Poly.coerce(f), Poly.coerce(g)
    if f.degree() != 1:
        raise PreconditionViolated("corollary1_reduce needs deg f == 1")
    steps: list[ElemMat] = []
    row, h = _descend_linear((f, g), 0, steps)
    c = row[1].constant_term()
    finish_constant(row, steps)
    return h, c, steps


def reduce_deg_x(f, g) -> tuple[Poly, list[ElemMat]]:
    """Reduce ``g`` modulo ``f = x^2 + u`` (``u`` in y or constant) to ``deg_x <= 1``."""
    f, g = Poly.coerce(f), Poly.coerce(g)
    u = f - Poly.monomial(2, 0)
    if u.deg_x() > 0 or u.degree() > 1 or f.coeff(2, 0) != 1:
        raise PreconditionViolated(f"{f} is not of the shape x^2 + u(y)")
    steps: list[ElemMat] = []
    while g.deg_x() >= 2:
        # h = g_2(y) + g_3(y) x + ... ; g - h*f keeps only g_0 + g_1 x - u*h
        h = Poly._wrap({(a - 2, b): c for (a, b), c in g.terms.items() if a >= 2})
        steps.append(U(-h))
        g = g - h * f
    return g, steps


def _split_x(g: Poly) -> tuple[Poly, Poly]:
    parts = g.in_x()
    return parts.get(0, Poly()), parts.get(1, Poly())


def lemma5_reduce(g) -> RowCert:
    """Reduce ``(x^2 + y, g)`` to (1, 0)."""
    f = Poly({(2, 0): 1, (0, 1): 1})
    g = Poly.coerce(g)
    g1, steps = reduce_deg_x(f, g)
    if not g1.is_constant() or g1.is_zero():
        raise NotUnimodular(f"(x^2 + y, {g}) reduces to ({f}, {g1}), which is not unimodular")
    finish_constant((f, g1), steps)
    return RowCert(steps, TRIVIAL)


def lemma6_reduce(gamma, g) -> RowCert:
    """Reduce ``(x^2 + gamma, g)`` to (1, 0) or to ``(x^2, x*psi(y) + delta)``."""
    gamma = as_scalar(gamma)
    f = Poly({(2, 0): 1, (0, 0): gamma})
    g = Poly.coerce(g)
    g1, steps = reduce_deg_x(f, g)
    g0, gx = _split_x(g1)
    row = (f, g1)
    if gamma != 0:
        # g0 +- sqrt(-gamma) gx must both be constants, hence g0 and gx are
        if not (g0.is_constant() and gx.is_constant()):
            raise NotUnimodular(f"({f}, {g}) is not unimodular: reduced entry {g1} depends on y")
        if gx.is_zero():
            if g0.is_zero():
                raise NotUnimodular(f"({f}, {g}) is not unimodular")
            finish_constant(row, steps)
            return RowCert(steps, TRIVIAL)
        row, _ = _descend_linear(row, 1, steps)
        finish_constant(row, steps)
        return RowCert(steps, TRIVIAL)
    # f = x^2: setting x = 0 forces g0 to be a nonzero constant
    if not g0.is_constant() or g0.is_zero():
        raise NotUnimodular(f"(x^2, {g}) is not unimodular: {g0} is not a unit")
    delta = g0.constant_term()
    if gx.degree() <= 0:
        if gx.is_zero():
            finish_constant(row, steps)
        else:
            row, _ = _descend_linear(row, 1, steps)
            finish_constant(row, steps)
        return RowCert(steps, TRIVIAL)
    return RowCert(steps, Terminal("CohnA", delta=delta, psi=gx))


def _xy_split(g: Poly) -> tuple[Poly, Poly]:
    """``g = (phi(x) + psi(y)) + x*y*h``; returns the pure part and ``h``."""
    pure = {}
    h = {}
    for (a, b), c in g.terms.items():
        if a and b:
            h[(a - 1, b - 1)] = c
        else:
            pure[(a, b)] = c
    return Poly._wrap(pure), Poly._wrap(h)


def lemma7_reduce(gamma, g) -> RowCert:
    """Reduce ``(x*y + gamma, g)`` to (1, 0) or to a CohnB terminal."""
    gamma = as_scalar(gamma)
    f = Poly({(1, 1): 1, (0, 0): gamma})
    g = Poly.coerce(g)
    steps: list[ElemMat] = []
    cap = max(g.degree(), 0) + 1
    pure, h = _xy_split(g)
    while not h.is_zero():
        cap -= 1
        if cap < 0:
            raise RuntimeError("internal error: xy-split loop did not terminate")
        steps.append(U(-h))
        g = pure - h * gamma
        pure, h = _xy_split(g)
    row = (f, g)
    if gamma == 0:
        if not g.is_constant() or g.is_zero():
            raise NotUnimodular(f"(x*y, {g}) is not unimodular")
        finish_constant(row, steps)
        return RowCert(steps, TRIVIAL)
    unit = laurent_is_unit(laurent_substitute(g, -gamma))
    if unit is None:
        raise NotUnimodular(f"({f}, {g}) is not unimodular: g(x, -gamma/x) is not a unit")
    alpha, j = unit
    if j == 0:
        finish_constant(row, steps)
        return RowCert(steps, TRIVIAL)
    if abs(j) == 1:
        row, _ = _descend_linear(row, 1, steps)
        finish_constant(row, steps)
        return RowCert(steps, TRIVIAL)
    if j >= 2:
        return RowCert(steps, Terminal("CohnB", gamma=gamma, k=j, scale=alpha))
    return RowCert(steps, Terminal("CohnB", gamma=gamma, k=-j, scale=alpha, in_y=True))


def reduce_row(f, g) -> tuple[object, RowCert]:
    """Canonicalize ``f`` (degree <= 2) and reduce the transformed row.

    Returns ``(theta, cert)`` where ``cert`` applies to ``(theta(f), theta(g))``.
    """
    from .canonical import canonicalize_quadratic
    from .endo import AffineAuto, apply

    f, g = Poly.coerce(f), Poly.coerce(g)
    d = f.degree()
    if d > 2:
        raise PreconditionViolated(f"first entry {f} has degree {d} > 2")
    if d == 2:
        theta, form = canonicalize_quadratic(f)
        g2 = apply(theta, g)
        if form.tag == "SquarePlusY":
            return theta, lemma5_reduce(g2)
        if form.tag == "SquarePlusConst":
            return theta, lemma6_reduce(form.gamma, g2)
        return theta, lemma7_reduce(form.gamma, g2)
    theta = AffineAuto.identity()
    steps: list[ElemMat] = []
    if d == 1:
        _, _, steps = corollary1_reduce(f, g)
        return theta, RowCert(steps, TRIVIAL)
    finish_constant((f, g), steps)
    return theta, RowCert(steps, TRIVIAL)
