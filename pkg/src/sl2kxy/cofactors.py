"""Unimodularity decisions and Bezout witnesses ``P*f + Q*g = 1``.

The primary route is Buchberger's algorithm (graded reverse lex, which for two
variables coincides with graded lex) with every basis element carrying its
representation in terms of ``f`` and ``g``.  A linear ansatz over bounded
degrees is kept as an independent second route.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from .errors import (BudgetExceeded, DegreeBoundExceeded, NotDivisible, NotUnimodular,
                     PreconditionViolated)
from .poly import Poly, exact_div, gcd_bivariate, grlex_key

log = logging.getLogger(__name__)

DEFAULT_STEP_BUDGET = 10**6

_ZERO = Fraction(0)


@dataclass(eq=False)
class UnimodularRow:
    f: Poly
    g: Poly
    P: Poly
    Q: Poly

    def __post_init__(self):
        for n in ("f", "g", "P", "Q"):
            setattr(self, n, Poly.coerce(getattr(self, n)))

    def holds(self) -> bool:
        return self.P * self.f + self.Q * self.g == 1

    def associated(self) -> tuple[Poly, Poly]:
        """The row ``(-Q, P)`` completing ``(f, g)`` to a determinant-one matrix."""
        return -self.Q, self.P


# Groebner basis with tracked cofactors

def _divides(a, b) -> bool:
    return a[0] <= b[0] and a[1] <= b[1]


def _lcm(a, b):
    return (max(a[0], b[0]), max(a[1], b[1]))


def _lead(t: dict):
    return max(t, key=grlex_key)


def _axpy(target: dict, src: dict, shift, c):
    """target -= c * x^shift * src (in place)."""
    sx, sy = shift
    for (a, b), v in src.items():
        k = (a + sx, b + sy)
        nv = target.get(k, _ZERO) - v * c
        if isinstance(nv, Fraction) and not nv:
            target.pop(k, None)
        else:
            target[k] = nv


class _Budget:
    def __init__(self, limit):
        self.limit = limit
        self.used = 0

    def tick(self):
        self.used += 1
        if self.used > self.limit:
            raise BudgetExceeded(f"reduction step budget {self.limit} exhausted")


def _reduce(h, basis, budget, track):
    """Fully reduce ``h = (poly, a, b)`` by ``basis``; dicts are modified in place."""
    poly, ra, rb = h
    rest: dict = {}
    while poly:
        m = _lead(poly)
        c = poly[m]
        for p, pa, pb, lm in basis:
            if _divides(lm, m):
                shift = (m[0] - lm[0], m[1] - lm[1])
                _axpy(poly, p, shift, c)
                if track:
                    _axpy(ra, pa, shift, c)
                    _axpy(rb, pb, shift, c)
                budget.tick()
                break
        else:
            rest[m] = c
            del poly[m]
    return rest, ra, rb


def _normalize(poly, a, b):
    lm = _lead(poly)
    inv = 1 / poly[lm]
    if inv != 1:
        poly = {k: v * inv for k, v in poly.items()}
        a = {k: v * inv for k, v in a.items()}
        b = {k: v * inv for k, v in b.items()}
    return poly, a, b, lm


def groebner_with_cofactors(f: Poly, g: Poly, budget: int = DEFAULT_STEP_BUDGET,
                            track: bool = True):
    """Return a list of ``(G, A, B)`` with ``G == A*f + B*g`` forming a Groebner basis.

    The computation stops as soon as a nonzero constant appears and then
    returns ``[(1, A, B)]``.  Without ``track`` the cofactors are left empty.
    """
    bud = _Budget(budget)
    basis: list = []
    pairs: list = []
    seeds = [(dict(f.terms), {(0, 0): Fraction(1)}, {}), (dict(g.terms), {}, {(0, 0): Fraction(1)})]
    queue = []
    for s in seeds:
        if s[0]:
            queue.append(s)

    def add(poly, a, b):
        poly, a, b, lm = _normalize(poly, a, b)
        if lm == (0, 0):
            return True
        idx = len(basis)
        basis.append((poly, a, b, lm))
        for j in range(idx):
            pairs.append((j, idx))
        return False

    for s in queue:
        red = _reduce((dict(s[0]), dict(s[1]), dict(s[2])), basis, bud, track)
        if red[0] and add(*red):
            return [_unit(red)]
    done = set()
    while pairs:
        pairs.sort(key=lambda ij: grlex_key(_lcm(basis[ij[0]][3], basis[ij[1]][3])), reverse=True)
        i, j = pairs.pop()
        li, lj = basis[i][3], basis[j][3]
        done.add((i, j))
        lcm = _lcm(li, lj)
        if li[0] + lj[0] == lcm[0] and li[1] + lj[1] == lcm[1]:
            continue  # coprime leading monomials
        if any(k != i and k != j and _divides(basis[k][3], lcm)
               and _pair_done(done, i, k) and _pair_done(done, j, k)
               for k in range(len(basis))):
            continue
        pi, ai, bi, _ = basis[i]
        pj, aj, bj, _ = basis[j]
        si = (lcm[0] - li[0], lcm[1] - li[1])
        sj = (lcm[0] - lj[0], lcm[1] - lj[1])
        sp: dict = {}
        sa: dict = {}
        sb: dict = {}
        _axpy(sp, pi, si, -1)
        _axpy(sp, pj, sj, 1)
        if track:
            _axpy(sa, ai, si, -1)
            _axpy(sa, aj, sj, 1)
            _axpy(sb, bi, si, -1)
            _axpy(sb, bj, sj, 1)
        red = _reduce((sp, sa, sb), basis, bud, track)
        if red[0] and add(*red):
            return [_unit(red)]
    return [_as_polys(b) for b in basis]


def _pair_done(done, a, b):
    return (min(a, b), max(a, b)) in done


def _unit(red):
    poly, a, b, _ = _normalize(*red)
    return Poly._wrap({(0, 0): Fraction(1)}), Poly(a), Poly(b)


def _as_polys(entry):
    poly, a, b, _ = entry
    return Poly(poly), Poly(a), Poly(b)


def _cofactors_gb(f: Poly, g: Poly, budget: int) -> tuple[Poly, Poly]:
    gb = groebner_with_cofactors(f, g, budget=budget)
    if len(gb) == 1 and gb[0][0] == 1:
        return gb[0][1], gb[0][2]
    raise NotUnimodular(f"1 is not in the ideal ({f}, {g})")


def is_unimodular(f, g, budget: int = DEFAULT_STEP_BUDGET) -> bool:
    """True iff 1 lies in the ideal generated by ``f`` and ``g``."""
    f, g = Poly.coerce(f), Poly.coerce(g)
    if (f.is_constant() and not f.is_zero()) or (g.is_constant() and not g.is_zero()):
        return True
    if f.is_zero() or g.is_zero():
        return False
    gb = groebner_with_cofactors(f, g, budget=budget, track=False)
    return len(gb) == 1 and gb[0][0] == 1


def cofactors(f, g, budget: int = DEFAULT_STEP_BUDGET, minimize: bool = True,
              method: str = "groebner") -> tuple[Poly, Poly]:
    """Return ``(P, Q)`` with ``P*f + Q*g == 1``.

    ``method`` is ``"groebner"`` (default) or ``"ansatz"``.  Raises
    :class:`NotUnimodular` when no witness exists.
    """
    f, g = Poly.coerce(f), Poly.coerce(g)
    if f.is_constant() and not f.is_zero():
        return Poly.const(1 / f.constant_term()), Poly()
    if g.is_constant() and not g.is_zero():
        return Poly(), Poly.const(1 / g.constant_term())
    if f.is_zero() or g.is_zero():
        raise NotUnimodular("a row with a zero entry is unimodular only if the other entry is a unit")
    if method == "groebner":
        try:
            P, Q = _cofactors_gb(f, g, budget)
        except BudgetExceeded:
            log.info("Groebner budget exhausted; trying the linear ansatz")
            P, Q = cofactors_ansatz(f, g)
    elif method == "ansatz":
        P, Q = cofactors_ansatz(f, g)
    else:
        raise ValueError(f"unknown method {method!r}")
    if not (P * f + Q * g == 1):
        raise AssertionError("internal error: witness does not satisfy P*f + Q*g = 1")
    if minimize:
        row = reduce_cofactor_pair(UnimodularRow(f, g, P, Q))
        P, Q = row.P, row.Q
    return P, Q


# linear ansatz

def _monomials(d):
    return [(a, t - a) for t in range(d + 1) for a in range(t, -1, -1)]


def _solve(rows: list[dict], rhs: list, nvars: int):
    """One solution of a sparse linear system, or None if inconsistent."""
    pivots: list[tuple[int, dict, object]] = []
    for row, r in zip(rows, rhs):
        row = dict(row)
        for col, prow, pr in pivots:
            c = row.get(col)
            if c is None:
                continue
            for k, v in prow.items():
                nv = row.get(k, _ZERO) - c * v
                if isinstance(nv, Fraction) and not nv:
                    row.pop(k, None)
                else:
                    row[k] = nv
            r = r - c * pr
        if not row:
            if not (isinstance(r, Fraction) and not r):
                return None
            continue
        col = min(row)
        inv = 1 / row[col]
        row = {k: v * inv for k, v in row.items()}
        r = r * inv
        # keep earlier pivot rows reduced in this column
        new = []
        for pcol, prow, pr in pivots:
            c = prow.get(col)
            if c is not None:
                prow = dict(prow)
                for k, v in row.items():
                    nv = prow.get(k, _ZERO) - c * v
                    if isinstance(nv, Fraction) and not nv:
                        prow.pop(k, None)
                    else:
                        prow[k] = nv
                pr = pr - c * r
            new.append((pcol, prow, pr))
        pivots = new + [(col, row, r)]
    sol = [_ZERO] * nvars
    for col, row, r in pivots:
        sol[col] = r  # free variables are zero
    return sol


def _ansatz(f: Poly, g: Poly, D: int):
    mons = _monomials(D)
    n = len(mons)
    eqs: dict = {}
    for idx, (a, b) in enumerate(mons):
        for (fa, fb), c in f.terms.items():
            eqs.setdefault((a + fa, b + fb), {})[idx] = c
        for (ga, gb), c in g.terms.items():
            row = eqs.setdefault((a + ga, b + gb), {})
            row[n + idx] = row.get(n + idx, _ZERO) + c
    keys = sorted(eqs, key=grlex_key, reverse=True)
    rows = [eqs[k] for k in keys]
    rhs = [Fraction(1) if k == (0, 0) else _ZERO for k in keys]
    if (0, 0) not in eqs:
        return None
    sol = _solve(rows, rhs, 2 * n)
    if sol is None:
        return None
    P = Poly({m: sol[i] for i, m in enumerate(mons)})
    Q = Poly({m: sol[n + i] for i, m in enumerate(mons)})
    return P, Q


def cofactors_ansatz(f, g, D: int | None = None) -> tuple[Poly, Poly]:
    """Solve ``P*f + Q*g = 1`` with ``deg P, deg Q <= D`` by linear algebra.

    ``D`` defaults to ``deg f * deg g + 2`` and is increased once before giving up.
    """
    f, g = Poly.coerce(f), Poly.coerce(g)
    if D is None:
        D = f.degree() * g.degree() + 2
    for bound in (D, 2 * D):
        sol = _ansatz(f, g, bound)
        if sol is not None:
            return sol
    raise DegreeBoundExceeded(f"no witness with degrees <= {2 * D}")


# common-factor split and the degree descent

def lemma2_split(f, g, P, Q) -> tuple[Poly, Poly, Poly, Poly]:
    """For ``P*f + Q*g == 0`` return ``(phi, psi, h1, h2)``.

    ``f = phi*h1``, ``g = phi*h2``, ``gcd(h1, h2) = 1``, ``P = psi*h2``, ``Q = -psi*h1``.
    """
    f, g, P, Q = (Poly.coerce(v) for v in (f, g, P, Q))
    if any(v.is_constant() for v in (f, g, P, Q)):
        raise PreconditionViolated("lemma2_split needs four nonconstant polynomials")
    if not (P * f + Q * g).is_zero():
        raise PreconditionViolated("P*f + Q*g is not zero")
    phi = gcd_bivariate(f, g)
    h1, h2 = exact_div(f, phi), exact_div(g, phi)
    psi = exact_div(P, h2)
    if not (Q == -(psi * h1)):
        raise AssertionError("internal error: Q != -psi*h1")
    return phi, psi, h1, h2


def _deg_sum(P: Poly, Q: Poly) -> int:
    return P.degree() + Q.degree()


def reduce_cofactor_pair(row: UnimodularRow) -> UnimodularRow:
    """Greedy descent ``(P, Q) -> (P - lam*g, Q + lam*f)`` while ``deg P + deg Q`` drops."""
    f, g, P, Q = row.f, row.g, row.P, row.Q
    while not P.is_zero() and not Q.is_zero() and not g.is_zero() and not f.is_zero():
        Pm, gl = P.top(), g.top()
        try:
            lam = exact_div(Pm, gl)
        except NotDivisible:
            break
        P2, Q2 = P - lam * g, Q + lam * f
        if _deg_sum(P2, Q2) >= _deg_sum(P, Q):
            break
        P, Q = P2, Q2
    return UnimodularRow(f, g, P, Q)


def top_gcd_degree(f, g) -> int:
    """``deg gcd(top(f), top(g))``; at least 1 for unimodular nonconstant rows."""
    f, g = Poly.coerce(f), Poly.coerce(g)
    return gcd_bivariate(f.top(), g.top()).degree()
