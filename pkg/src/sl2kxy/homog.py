"""Homogeneous-component identities for the associated row of an equal-degree row.

For a unimodular row ``(f, g)`` with ``deg f == deg g == n`` and witnesses
``P*f + Q*g == 1`` of degree ``m``, put ``phi = gcd(f_n, g_n)``.  There are
homogeneous ``alpha_0, ..., alpha_m`` with, for every ``0 <= i <= m``::

    phi^(i+1) * P_(m-i)  ==  sum_j phi^j * alpha_(i-j) * g_(n-j)
   -phi^(i+1) * Q_(m-i)  ==  sum_j phi^j * alpha_(i-j) * f_(n-j)

where ``j`` runs over ``0 .. min(i, n)``.  :func:`alpha_sequence` solves the
first family by exact division and checks the second; :func:`verify_star`
re-evaluates both from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InternalDivisionFailure, NotDivisible, PreconditionViolated
from .poly import Poly, exact_div, gcd_bivariate


@dataclass(eq=False)
class StarData:
    n: int
    m: int
    phi: Poly
    alphas: list[Poly]
    f: Poly
    g: Poly
    P: Poly
    Q: Poly
    failures: list[int] = field(default_factory=list)

    def expected_degree(self, i: int) -> int:
        """Degree a nonzero ``alpha_i`` must have."""
        return (i + 1) * self.phi.degree() + self.m - self.n - i

    def degrees_ok(self) -> bool:
        return all(a.is_zero() or (a.is_homogeneous() and a.degree() == self.expected_degree(i))
                   for i, a in enumerate(self.alphas))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "phi": str(self.phi),
            "phi_degree": self.phi.degree(),
            "alphas": [{"i": i, "alpha": str(a),
                        "degree": a.degree() if not a.is_zero() else None,
                        "expected_degree": self.expected_degree(i)}
                       for i, a in enumerate(self.alphas)],
        }


def _sides(phi: Poly, alphas, comps, n: int, i: int) -> Poly:
    acc = Poly()
    phi_j = Poly.const(1)
    for j in range(min(i, n) + 1):
        if i - j < len(alphas):
            acc = acc + phi_j * alphas[i - j] * comps(n - j)
        phi_j = phi_j * phi
    return acc


def alpha_sequence(f, g, P, Q) -> StarData:
    f, g, P, Q = (Poly.coerce(v) for v in (f, g, P, Q))
    if any(v.is_constant() for v in (f, g, P, Q)):
        raise PreconditionViolated("f, g, P, Q must all be nonconstant")
    n = f.degree()
    if g.degree() != n:
        raise PreconditionViolated(f"deg f = {n} but deg g = {g.degree()}")
    if not (P * f + Q * g == 1):
        raise PreconditionViolated("P*f + Q*g != 1")
    m = max(P.degree(), Q.degree())
    phi = gcd_bivariate(f.component(n), g.component(n))
    gn = g.component(n)

    alphas: list[Poly] = []
    phi_pow = phi
    for i in range(m + 1):
        rhs = phi_pow * P.component(m - i) - _sides(phi, alphas + [Poly()], g.component, n, i)
        try:
            alphas.append(exact_div(rhs, gn))
        except NotDivisible as exc:
            raise InternalDivisionFailure(i) from exc
        lhs_q = -(phi_pow * Q.component(m - i))
        if not (lhs_q == _sides(phi, alphas, f.component, n, i)):
            raise InternalDivisionFailure(i)
        phi_pow = phi_pow * phi
    return StarData(n, m, phi, alphas, f, g, P, Q)


def star_failures(data: StarData) -> list[int]:
    """Indices ``i`` at which either identity fails."""
    bad = []
    if len(data.alphas) != data.m + 1:
        return list(range(data.m + 1))
    phi = data.phi
    phi_pow = phi
    for i in range(data.m + 1):
        p_ok = phi_pow * data.P.component(data.m - i) == _sides(phi, data.alphas, data.g.component, data.n, i)
        q_ok = -(phi_pow * data.Q.component(data.m - i)) == _sides(phi, data.alphas, data.f.component, data.n, i)
        if not (p_ok and q_ok):
            bad.append(i)
        phi_pow = phi_pow * phi
    return bad


def verify_star(data: StarData) -> bool:
    # an all-zero witness satisfies the identities trivially but is no Bezout witness
    if data.P.is_constant() or data.Q.is_constant():
        return False
    data.failures = star_failures(data)
    return not data.failures
