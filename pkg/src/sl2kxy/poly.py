"""Sparse bivariate polynomials over the scalar tower.

Terms are stored in a dict keyed by exponent pairs ``(ex, ey)``.  Iteration and
printing use graded-lexicographic order with ``x > y``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .errors import BothZero, DivisionByZeroPoly, NotDivisible
from .scalar import QuadExt, Scalar, as_scalar

Monomial = tuple[int, int]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def grlex_key(m: Monomial) -> tuple[int, int]:
    return (m[0] + m[1], m[0])


def _is_zero(c) -> bool:
    return isinstance(c, Fraction) and not c


class Poly:
    """An immutable polynomial in ``x`` and ``y``."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, Scalar] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if not isinstance(c, (Fraction, QuadExt)):
                    c = as_scalar(c)
                if not _is_zero(c):
                    clean[m] = c
        self.terms = clean

    @classmethod
    def _wrap(cls, terms: dict) -> Poly:
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    # constructors

    @classmethod
    def const(cls, c) -> Poly:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, ex: int, ey: int, c=1) -> Poly:
        return cls({(ex, ey): c})

    @classmethod
    def x(cls) -> Poly:
        return cls._wrap({(1, 0): _ONE})

    @classmethod
    def y(cls) -> Poly:
        return cls._wrap({(0, 1): _ONE})

    @staticmethod
    def coerce(v) -> Poly:
        if isinstance(v, Poly):
            return v
        if isinstance(v, str):
            from .parse import parse_poly
            return parse_poly(v)
        return Poly.const(v)

    # arithmetic

    def __add__(self, other):
        if not isinstance(other, Poly):
            try:
                other = Poly.const(other)
            except TypeError:
                return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            if m in out:
                s = out[m] + c
                if _is_zero(s):
                    del out[m]
                else:
                    out[m] = s
            else:
                out[m] = c
        return Poly._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._wrap({m: -c for m, c in self.terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, Poly):
            try:
                other = Poly.const(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                c = as_scalar(other)
            except TypeError:
                return NotImplemented
            return self.scale(c)
        if len(self.terms) > len(other.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out: dict = {}
        for (ax, ay), ac in a.items():
            for (bx, by), bc in b.items():
                m = (ax + bx, ay + by)
                if m in out:
                    out[m] = out[m] + ac * bc
                else:
                    out[m] = ac * bc
        return Poly._wrap({m: c for m, c in out.items() if not _is_zero(c)})

    __rmul__ = __mul__

    def scale(self, c) -> Poly:
        c = as_scalar(c)
        if _is_zero(c):
            return Poly._wrap({})
        return Poly._wrap({m: v * c for m, v in self.terms.items()})

    def __truediv__(self, other):
        if isinstance(other, Poly):
            return exact_div(self, other)
        c = as_scalar(other)
        if _is_zero(c):
            raise ZeroDivisionError("division by zero scalar")
        return self.scale(1 / c)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Poly._wrap({(0, 0): _ONE})
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, Poly):
            try:
                other = Poly.const(other)
            except TypeError:
                return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        return all(c == other.terms[m] for m, c in self.terms.items())

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)

    # inspection

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((a + b for a, b in self.terms), default=-1)

    def deg_x(self) -> int:
        return max((a for a, _ in self.terms), default=-1)

    def deg_y(self) -> int:
        return max((b for _, b in self.terms), default=-1)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0, 0) in self.terms)

    def constant_term(self) -> Scalar:
        return self.terms.get((0, 0), _ZERO)

    def coeff(self, ex: int, ey: int) -> Scalar:
        return self.terms.get((ex, ey), _ZERO)

    def is_homogeneous(self) -> bool:
        return len({a + b for a, b in self.terms}) <= 1

    def sorted_terms(self) -> list[tuple[Monomial, Scalar]]:
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_monomial(self) -> Monomial:
        return max(self.terms, key=grlex_key)

    def leading_coeff(self) -> Scalar:
        return self.terms[self.leading_monomial()] if self.terms else _ZERO

    def monic(self) -> Poly:
        return self.scale(1 / self.leading_coeff()) if self.terms else self

    def component(self, d: int) -> Poly:
        return Poly._wrap({m: c for m, c in self.terms.items() if m[0] + m[1] == d})

    def top(self) -> Poly:
        """The top form (highest homogeneous component)."""
        return self.component(self.degree())

    def in_x(self) -> dict[int, Poly]:
        """Coefficients as polynomials in ``y``, keyed by the power of ``x``."""
        out: dict[int, dict] = {}
        for (a, b), c in self.terms.items():
            out.setdefault(a, {})[(0, b)] = c
        return {a: Poly._wrap(t) for a, t in out.items()}

    def mul_monomial(self, ex: int, ey: int, c=_ONE) -> Poly:
        return Poly._wrap({(a + ex, b + ey): v * c for (a, b), v in self.terms.items()})

    def subs(self, x=None, y=None) -> Poly:
        """Substitute polynomials (or scalars) for ``x`` and/or ``y``."""
        X = Poly.x() if x is None else Poly.coerce(x)
        Y = Poly.y() if y is None else Poly.coerce(y)
        return substitute(self, (X, Y))


def homogeneous_components(p: Poly) -> list[tuple[int, Poly]]:
    """Nonzero homogeneous components as ``(degree, part)``, degrees increasing."""
    buckets: dict[int, dict] = {}
    for m, c in p.terms.items():
        buckets.setdefault(m[0] + m[1], {})[m] = c
    return [(d, Poly._wrap(buckets[d])) for d in sorted(buckets)]


def _powers(p: Poly, n: int) -> list[Poly]:
    out = [Poly._wrap({(0, 0): _ONE})]
    for _ in range(n):
        out.append(out[-1] * p)
    return out


def substitute(p: Poly, theta) -> Poly:
    """Ring-homomorphic image of ``p`` under ``x -> theta[0]``, ``y -> theta[1]``."""
    X, Y = (Poly.coerce(t) for t in theta)
    if not p.terms:
        return p
    px = _powers(X, p.deg_x())
    py = _powers(Y, p.deg_y())
    acc: dict = {}
    for a, row in p.in_x().items():
        inner = Poly._wrap({})
        for (_, b), c in row.terms.items():
            inner = inner + py[b].scale(c)
        for m, c in (px[a] * inner).terms.items():
            if m in acc:
                acc[m] = acc[m] + c
            else:
                acc[m] = c
    return Poly({m: c for m, c in acc.items()})


def exact_div(p: Poly, q: Poly) -> Poly:
    """Return ``r`` with ``q*r == p``; raise :class:`NotDivisible` otherwise."""
    p, q = Poly.coerce(p), Poly.coerce(q)
    if not q.terms:
        raise DivisionByZeroPoly("division by the zero polynomial")
    quot, rem = divmod_grlex(p, q)
    if rem.terms:
        raise NotDivisible(p, q, rem)
    return quot


def divmod_grlex(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    """Multivariate division by a single divisor under graded-lex order."""
    if not q.terms:
        raise DivisionByZeroPoly("division by the zero polynomial")
    lm = q.leading_monomial()
    lc_inv = 1 / q.terms[lm]
    r = dict(p.terms)
    quot: dict = {}
    rem: dict = {}
    qt = list(q.terms.items())
    while r:
        m = max(r, key=grlex_key)
        c = r[m]
        if m[0] >= lm[0] and m[1] >= lm[1]:
            ex, ey = m[0] - lm[0], m[1] - lm[1]
            f = c * lc_inv
            quot[(ex, ey)] = f
            for (a, b), v in qt:
                k = (a + ex, b + ey)
                nv = r.get(k, _ZERO) - v * f
                if _is_zero(nv):
                    r.pop(k, None)
                else:
                    r[k] = nv
            r.pop(m, None)
        else:
            rem[m] = c
            del r[m]
    return Poly._wrap(quot), Poly._wrap(rem)


# univariate dense helpers (low degree first), used for gcd in K[y][x]

def _ut(a: list) -> list:
    while a and _is_zero(a[-1]):
        a.pop()
    return a


def _usub(a, b):
    n = max(len(a), len(b))
    return _ut([(a[i] if i < len(a) else _ZERO) - (b[i] if i < len(b) else _ZERO) for i in range(n)])


def _umul(a, b):
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if _is_zero(u):
            continue
        for j, v in enumerate(b):
            out[i + j] = out[i + j] + u * v
    return _ut(out)


def _udivmod(a, b):
    a = list(a)
    inv = 1 / b[-1]
    q = [_ZERO] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        f = a[-1] * inv
        s = len(a) - len(b)
        q[s] = f
        for i, v in enumerate(b):
            a[s + i] = a[s + i] - f * v
        a.pop()
        _ut(a)
    return _ut(q), a


def _umonic(a):
    if not a:
        return a
    inv = 1 / a[-1]
    return [c * inv for c in a]


def _ugcd(a, b):
    while b:
        a, b = b, _udivmod(a, b)[1]
    return _umonic(a)


def _to_rec(p: Poly) -> list[list]:
    """Dense list over powers of x of dense lists over powers of y."""
    out = [[] for _ in range(p.deg_x() + 1)]
    for (a, b), c in p.terms.items():
        row = out[a]
        if len(row) <= b:
            row.extend([_ZERO] * (b + 1 - len(row)))
        row[b] = c
    return out


def _from_rec(r: list[list]) -> Poly:
    return Poly._wrap({(a, b): c for a, row in enumerate(r) for b, c in enumerate(row) if not _is_zero(c)})


def _rtrim(r):
    while r and not r[-1]:
        r.pop()
    return r


def _content(r):
    g: list = []
    for c in r:
        if c:
            g = _ugcd(g, c) if g else _umonic(c)
            if len(g) == 1:
                break
    return g


def _pp(r):
    g = _content(r)
    if len(g) <= 1:
        return r
    return [_udivmod(c, g)[0] if c else [] for c in r]


def _prem(a, b):
    # pseudo-remainder in K[y][x]
    r = [list(c) for c in a]
    lb = b[-1]
    db = len(b) - 1
    while len(r) - 1 >= db and r:
        lr = r[-1]
        s = len(r) - 1 - db
        r = [_umul(c, lb) for c in r]
        for i, c in enumerate(b):
            r[s + i] = _usub(r[s + i], _umul(lr, c))
        r.pop()
        _rtrim(r)
    return r


def gcd_bivariate(p: Poly, q: Poly) -> Poly:
    """gcd in K[x, y], normalized to graded-lex leading coefficient 1."""
    p, q = Poly.coerce(p), Poly.coerce(q)
    if not p.terms and not q.terms:
        raise BothZero("gcd(0, 0) is undefined")
    if not p.terms:
        return q.monic()
    if not q.terms:
        return p.monic()
    if p.is_constant() or q.is_constant():
        return Poly._wrap({(0, 0): _ONE})
    a, b = _to_rec(p), _to_rec(q)
    ca, cb = _content(a), _content(b)
    cont = _ugcd(ca, cb)
    a, b = _pp(a), _pp(b)
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1:
        r = _prem(a, b)
        a, b = b, _pp(r)
        if not b:
            break
    if len(b) == 1:
        g = [[_ONE]]
    else:
        g = _pp(a)
    g = [_umul(c, cont) for c in g]
    return _from_rec(g).monic()


gcd = gcd_bivariate


class LaurentX:
    """Laurent polynomial in ``x`` with scalar coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, Scalar] | None = None):
        self.terms = {k: as_scalar(v) for k, v in (terms or {}).items() if not _is_zero(as_scalar(v))}

    def __mul__(self, other: LaurentX) -> LaurentX:
        out: dict = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                out[i + j] = out.get(i + j, _ZERO) + a * b
        return LaurentX(out)

    def __add__(self, other: LaurentX) -> LaurentX:
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, _ZERO) + v
        return LaurentX(out)

    def __eq__(self, other):
        if not isinstance(other, LaurentX):
            return NotImplemented
        return self.terms.keys() == other.terms.keys() and all(
            v == other.terms[k] for k, v in self.terms.items())

    __hash__ = None

    def __repr__(self):
        body = " + ".join(f"({v})*x^{k}" for k, v in sorted(self.terms.items(), reverse=True))
        return f"LaurentX({body or '0'})"


def laurent_substitute(p: Poly, c) -> LaurentX:
    """``p(x, c/x)`` as a Laurent polynomial."""
    c = as_scalar(c)
    if _is_zero(c):
        raise ValueError("laurent_substitute needs c != 0")
    out: dict = {}
    pw: dict[int, Scalar] = {}
    for (a, b), v in p.terms.items():
        if b not in pw:
            pw[b] = c ** b
        out[a - b] = out.get(a - b, _ZERO) + v * pw[b]
    return LaurentX(out)


def laurent_is_unit(L: LaurentX) -> tuple[Scalar, int] | None:
    """``(alpha, k)`` when ``L == alpha*x**k``, else None."""
    if len(L.terms) != 1:
        return None
    (k, alpha), = L.terms.items()
    return alpha, k


def format_poly(p: Poly) -> str:
    from .parse import format_poly as _fmt
    return _fmt(p)


X = Poly.x()
Y = Poly.y()
ONE = Poly.const(1)
ZERO = Poly()


def poly_sum(items: Iterable[Poly]) -> Poly:
    acc = Poly._wrap({})
    for p in items:
        acc = acc + p
    return acc
