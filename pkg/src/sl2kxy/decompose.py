"""Factorization of SL_2(K[x, y]) matrices that have an entry of degree <= 2.

The output is a :class:`~sl2kxy.mat.Certificate`: an affine automorphism
``theta`` and transvections ``pre``/``post`` around an optional Cohn-type
factor, with ``pre * cohn * post == A^theta``.  :func:`verify_certificate`
re-multiplies the factors and compares exactly; it shares no code with the
search.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .endo import AffineAuto, apply, compose, xy_swap
from .errors import (NoLowDegreeEntry, NotDivisible, NotSL2, NotUnimodular, SqrtUnavailable,
                     TowerDepthExceeded)
from .mat import (Certificate, CohnFactor, ElemMat, L, Mat2, compress, expand_diag, expand_J,
                  expand_J_inverse, inverse_steps, mat_mul)
from .poly import Poly, exact_div
from .reduce import RowCert, reduce_row, trace_lines
from .scalar import sqrt_adjoin

_POSITIONS = ((0, "a11"), (1, "a12"), (2, "a21"), (3, "a22"))


def _move_to_corner(A: Mat2, pos: int):
    """Return ``(A', left, right)`` with ``A' = left * A * right`` and ``A'[1,1] = A[pos]``.

    ``left``/``right`` are given by their inverses' elementary expansions so the
    caller can undo them: ``A = left_inv * A' * right_inv``.
    """
    a11, a12, a21, a22 = A.entries()
    if pos == 0:
        return A, [], []
    if pos == 1:
        # A * J^-1 = [[a12, -a11], [a22, -a21]]
        return Mat2(a12, -a11, a22, -a21), [], expand_J()
    if pos == 2:
        # J * A = [[a21, a22], [-a11, -a12]]
        return Mat2(a21, a22, -a11, -a12), expand_J_inverse(), []
    # J * A * J^-1 = [[a22, -a21], [-a12, a11]]
    return Mat2(a22, -a21, -a12, a11), expand_J_inverse(), expand_J()


def _pick_entry(A: Mat2) -> int:
    # zero entries rank after every nonzero entry of degree <= 2
    best = None
    for pos, name in _POSITIONS:
        e = getattr(A, name)
        d = 2.5 if e.is_zero() else e.degree()
        if d <= 2.5 and (best is None or d < best[0]):
            best = (d, pos)
    if best is None:
        raise NoLowDegreeEntry("every entry has degree >= 3")
    return best[1]


@dataclass(eq=False)
class Decomposition:
    """A certificate plus the bookkeeping used to build it."""

    certificate: Certificate
    position: int
    row_cert: RowCert
    first_row: tuple
    trace: list[str] = field(default_factory=list)


def decompose_theorem1(A: Mat2, trace: bool = False) -> Certificate:
    """Factor ``A`` as described in the module docstring."""
    return decompose(A, trace=trace).certificate


def decompose(A: Mat2, trace: bool = False) -> Decomposition:
    if not isinstance(A, Mat2):
        A = Mat2.of(A)
    if not A.is_sl2():
        raise NotSL2(f"det = {A.det()}, not 1")
    pos = _pick_entry(A)
    A1, left_inv, right_inv = _move_to_corner(A, pos)

    try:
        theta, rc = reduce_row(A1.a11, A1.a12)
    except NotUnimodular as exc:
        raise NotUnimodular(f"first row of an SL2 matrix failed to reduce: {exc}") from exc
    B = apply(theta, A1)
    steps = list(rc.steps)
    term = rc.terminal

    if term.kind == "CohnB" and term.in_y:
        # conjugate (xy + gamma, (-y/gamma)^k) into (xy + gamma, x^k)
        sigma = xy_swap(term.gamma)
        theta = compose(sigma, theta)
        B = apply(sigma, B)
        steps = [ElemMat(s.side, apply(sigma, s.h)) for s in steps]
        term = type(term)("CohnB", gamma=term.gamma, k=term.k, scale=term.scale)

    first = (B.a11, B.a12)
    S = Mat2.identity()
    for s in steps:
        S = mat_mul(S, s.matrix())
    BS = mat_mul(B, S)
    post = inverse_steps(steps)

    if term.kind == "Trivial":
        # B*S = [[1, 0], [c, 1]]
        pre = [L(BS.a21)]
        cohn = None
    else:
        if term.kind == "CohnA":
            cohn = CohnFactor.A(term.delta, term.psi)
        else:
            cohn = CohnFactor.B(term.gamma, term.k, term.scale)
        C = cohn.matrix()
        try:
            lam = exact_div(BS.a21 - C.a21, C.a11)
        except NotDivisible as exc:
            raise AssertionError("internal error: second rows differ by a non-multiple") from exc
        pre = [L(lam)]
        if cohn.form == "B" and cohn.scale != 1:
            pre, cohn, post = _absorb_scale(pre, cohn, post)

    if cohn is None:
        cert = Certificate(theta, compress(left_inv + pre + post + right_inv), None, [])
    else:
        cert = Certificate(theta, compress(left_inv + pre), cohn, compress(post + right_inv))
    lines = trace_lines(first, steps) if trace else []
    return Decomposition(cert, pos, RowCert(steps, term), first, lines)


def _absorb_scale(pre, cohn: CohnFactor, post):
    # C_alpha = Diag(r) C_1 Diag(1/r) with r^2 = alpha
    try:
        r, _ = sqrt_adjoin(cohn.scale)
    except (SqrtUnavailable, TowerDepthExceeded):
        return pre, cohn, post
    unit = CohnFactor.B(cohn.gamma, cohn.k, 1)
    return pre + expand_diag(r), unit, expand_diag(1 / r) + post


@dataclass
class Verdict:
    ok: bool
    diff: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok


def verify_certificate(A: Mat2, cert: Certificate) -> Verdict:
    """Check ``pre * cohn * post == theta(A)`` entrywise; report differing entries."""
    if not isinstance(A, Mat2):
        A = Mat2.of(A)
    lhs = Mat2.identity()
    for e in cert.pre:
        lhs = mat_mul(lhs, e.matrix())
    if cert.cohn is not None:
        lhs = mat_mul(lhs, cert.cohn.matrix())
    for e in cert.post:
        lhs = mat_mul(lhs, e.matrix())
    theta = cert.theta if cert.theta is not None else AffineAuto.identity()
    rhs = apply(theta, A)
    diff = {}
    for name in ("a11", "a12", "a21", "a22"):
        d = getattr(lhs, name) - getattr(rhs, name)
        if not d.is_zero():
            diff[name] = d
    return Verdict(not diff, diff)
