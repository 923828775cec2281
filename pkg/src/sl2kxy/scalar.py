"""Exact arithmetic in Q(sqrt(d1), ..., sqrt(dt)).

Rationals are plain :class:`fractions.Fraction` values.  Irrational elements
are :class:`QuadExt` instances ``a + b*sqrt(d)`` where ``d`` is the top
radicand of the element's :class:`Tower` and ``a``, ``b`` live one level
below.  Elements are always stored at the lowest level that holds them, so a
``QuadExt`` is never rational and ``b`` is never zero.

Towers grow by value: adjoining a radicand returns a new ``Tower``.  Elements
built over different towers are combined over the join of the two towers.
"""

from __future__ import annotations

import cmath
import math
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Union

from .errors import SqrtUnavailable, TowerDepthExceeded

MAX_TOWER_DEPTH = 8
_depth_limit: ContextVar[int] = ContextVar("tower_depth_limit", default=MAX_TOWER_DEPTH)


@contextmanager
def depth_limit(n: int):
    """Temporarily change the tower depth cap used by :func:`sqrt_adjoin`."""
    token = _depth_limit.set(n)
    try:
        yield
    finally:
        _depth_limit.reset(token)


def squarefree_part(n: int) -> tuple[int, int]:
    """Return ``(c, d)`` with ``n == c*c*d`` and ``d`` square-free (sign kept in ``d``)."""
    if n == 0:
        return 0, 0
    sign = -1 if n < 0 else 1
    n = abs(n)
    c = d = 1
    p = 2
    while p * p <= n and p < 100_000:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        c *= p ** (e // 2)
        if e % 2:
            d *= p
        p += 1 if p == 2 else 2
    r = math.isqrt(n)
    if r * r == n:
        c *= r
    else:
        d *= n
    return c, sign * d


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class Tower:
    """An ordered list of square-free integer radicands."""

    radicands: tuple[int, ...] = ()

    def __len__(self):
        return len(self.radicands)

    @property
    def parent(self) -> Tower:
        return _tower(self.radicands[:-1])

    @property
    def top(self) -> int:
        return self.radicands[-1]

    def is_prefix_of(self, other: Tower) -> bool:
        n = len(self.radicands)
        return other.radicands[:n] == self.radicands

    def adjoin(self, d: int) -> Tower:
        if len(self.radicands) >= _depth_limit.get():
            raise TowerDepthExceeded(
                f"adjoining sqrt({d}) would exceed the tower depth cap {_depth_limit.get()}")
        return _tower(self.radicands + (d,))

    def join(self, other: Tower) -> Tower:
        return _join(self, other)

    def root_of(self, d: int) -> Scalar | None:
        """Principal square root of the integer ``d`` inside this field, if present."""
        return _root_of(self, d)


@lru_cache(maxsize=None)
def _tower(radicands: tuple[int, ...]) -> Tower:
    return Tower(radicands)


QQ = _tower(())


def _join(t1: Tower, t2: Tower) -> Tower:
    t = _join_cached(t1, t2)
    if len(t.radicands) > _depth_limit.get():
        raise TowerDepthExceeded(f"joined tower {t.radicands} exceeds the depth cap {_depth_limit.get()}")
    return t


@lru_cache(maxsize=4096)
def _join_cached(t1: Tower, t2: Tower) -> Tower:
    if t1.is_prefix_of(t2):
        return t2
    if t2.is_prefix_of(t1):
        return t1
    out = t1
    for d in t2.radicands:
        if _root_of(out, d) is None:
            out = _tower(out.radicands + (d,))
    return out


def _approx(s) -> complex:
    if isinstance(s, Fraction):
        return complex(float(s))
    return _approx(s.a) + _approx(s.b) * cmath.sqrt(s.tower.top)


@lru_cache(maxsize=4096)
def _root_of(t: Tower, d: int):
    # radicands are independent modulo squares, so sqrt(d) lies in the field iff
    # d times a product of radicands is a rational square
    rads = t.radicands
    for size in range(len(rads) + 1):
        for idx in combinations(range(len(rads)), size):
            prod = d
            for i in idx:
                prod *= rads[i]
            if prod < 0:
                continue
            r = math.isqrt(prod)
            if r * r != prod:
                continue
            # sqrt(d) = r / prod(sqrt(d_i)) = r * prod(sqrt(d_i)) / prod(d_i)
            denom = 1
            root: Scalar = Fraction(r)
            for i in idx:
                denom *= rads[i]
                root = root * _gen(_tower(rads[: i + 1]))
            root = root / denom
            want = cmath.sqrt(d)
            if abs(_approx(root) - want) > abs(_approx(root) + want):
                root = -root
            return root
    return None


def _gen(t: Tower) -> QuadExt:
    """sqrt of the top radicand of ``t``."""
    return QuadExt._raw(Fraction(0), Fraction(1), t)


def tower_of(s) -> Tower:
    return s.tower if isinstance(s, QuadExt) else QQ


def as_scalar(v) -> Scalar:
    if isinstance(v, (Fraction, QuadExt)):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        from .parse import parse_scalar
        return parse_scalar(v)
    raise TypeError(f"cannot interpret {v!r} as a scalar")


def embed(s, t: Tower):
    """Re-express ``s`` over the tower ``t`` (which must contain it)."""
    st = tower_of(s)
    if st.is_prefix_of(t):
        return s
    root = t.root_of(st.top)
    if root is None:
        raise ValueError(f"sqrt({st.top}) is not in the field {t.radicands}")
    return _add(embed(s.a, t), _mul(embed(s.b, t), root, t), t)


def _parts(s, t: Tower):
    if isinstance(s, QuadExt) and len(s.tower) == len(t):
        return s.a, s.b
    return s, Fraction(0)


def _make(a, b, t: Tower):
    if isinstance(b, Fraction) and not b:
        return a
    return QuadExt._raw(a, b, t)


def _add(u, v, t):
    if not t.radicands or (isinstance(u, Fraction) and isinstance(v, Fraction)):
        return u + v
    ua, ub = _parts(u, t)
    va, vb = _parts(v, t)
    p = t.parent
    return _make(_add(ua, va, p), _add(ub, vb, p), t)


def _neg(u):
    if isinstance(u, Fraction):
        return -u
    return QuadExt._raw(_neg(u.a), _neg(u.b), u.tower)


def _mul(u, v, t):
    if isinstance(u, Fraction) and isinstance(v, Fraction):
        return u * v
    if isinstance(u, Fraction):
        if not u:
            return u
        return _scale(v, u)
    if isinstance(v, Fraction):
        if not v:
            return v
        return _scale(u, v)
    ua, ub = _parts(u, t)
    va, vb = _parts(v, t)
    p = t.parent
    d = Fraction(t.top)
    a = _add(_mul(ua, va, p), _mul(_mul(ub, vb, p), d, p), p)
    b = _add(_mul(ua, vb, p), _mul(ub, va, p), p)
    return _make(a, b, t)


def _scale(u, q: Fraction):
    if isinstance(u, Fraction):
        return u * q
    return QuadExt._raw(_scale(u.a, q), _scale(u.b, q), u.tower)


def _inv(u):
    if isinstance(u, Fraction):
        return 1 / u
    t = u.tower
    p = t.parent
    a, b = u.a, u.b
    norm = _add(_mul(a, a, p), _neg(_mul(_mul(b, b, p), Fraction(t.top), p)), p)
    ninv = _inv(norm)
    return _make(_mul(a, ninv, p), _neg(_mul(b, ninv, p)), t)


def _coerce(u, v):
    if isinstance(v, int):
        v = Fraction(v)
    elif not isinstance(v, (Fraction, QuadExt)):
        return None
    t = _join(tower_of(u), tower_of(v))
    return embed(u, t), embed(v, t), t


class QuadExt:
    """An irrational element ``a + b*sqrt(d)`` of a quadratic extension tower."""

    __slots__ = ("a", "b", "tower")

    @classmethod
    def _raw(cls, a, b, tower):
        obj = object.__new__(cls)
        obj.a = a
        obj.b = b
        obj.tower = tower
        return obj

    def __init__(self, *_):
        raise TypeError("use sqrt_adjoin or arithmetic to build QuadExt values")

    @property
    def level(self) -> int:
        return len(self.tower)

    def __add__(self, other):
        c = _coerce(self, other)
        if c is None:
            return NotImplemented
        return _add(*c)

    __radd__ = __add__

    def __neg__(self):
        return _neg(self)

    def __pos__(self):
        return self

    def __sub__(self, other):
        c = _coerce(self, other)
        if c is None:
            return NotImplemented
        u, v, t = c
        return _add(u, _neg(v), t)

    def __rsub__(self, other):
        c = _coerce(self, other)
        if c is None:
            return NotImplemented
        u, v, t = c
        return _add(v, _neg(u), t)

    def __mul__(self, other):
        c = _coerce(self, other)
        if c is None:
            return NotImplemented
        return _mul(*c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = _coerce(self, other)
        if c is None:
            return NotImplemented
        u, v, t = c
        if isinstance(v, Fraction) and not v:
            raise ZeroDivisionError("division by zero scalar")
        return _mul(u, _inv(v), t)

    def __rtruediv__(self, other):
        c = _coerce(self, other)
        if c is None:
            return NotImplemented
        u, v, t = c
        return _mul(v, _inv(u), t)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return _inv(self) ** (-n)
        result: Scalar = Fraction(1)
        base: Scalar = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        c = _coerce(self, other)
        if c is None:
            return NotImplemented
        u, v, t = c
        diff = _add(u, _neg(v), t)
        return isinstance(diff, Fraction) and not diff

    def __hash__(self):
        # values equal across different towers must hash alike
        return hash("QuadExt")

    def __bool__(self):
        return True

    def __repr__(self):
        return f"QuadExt({format_scalar(self)})"

    __str__ = lambda self: format_scalar(self)


Scalar = Union[Fraction, QuadExt]


def is_rational(s) -> bool:
    return isinstance(s, (int, Fraction))


def lead_sign(s) -> int:
    """Sign of the leading coefficient: top-level radical coefficient first."""
    while isinstance(s, QuadExt):
        s = s.b
    return (s > 0) - (s < 0)


def _sqrt_in(s, t: Tower):
    """A square root of ``s`` inside the field ``t``, or None."""
    if not t.radicands:
        return _rational_sqrt(s) if isinstance(s, Fraction) else None
    if isinstance(s, Fraction) and not s:
        return s
    p = t.parent
    a, b = _parts(s, t)
    d = Fraction(t.top)
    if isinstance(b, Fraction) and not b:
        r = _sqrt_in(a, p)
        if r is not None:
            return r
        r = _sqrt_in(_scale(a, 1 / d), p)
        if r is not None:
            return _make(Fraction(0), r, t)
        return None
    # (u + v sqrt d)^2 = s  <=>  u^2 is a root of z^2 - a z + d b^2 / 4
    n = _sqrt_in(_add(_mul(a, a, p), _neg(_scale(_mul(b, b, p), d)), p), p)
    if n is None:
        return None
    for z in (_add(a, n, p), _add(a, _neg(n), p)):
        u = _sqrt_in(_scale(z, Fraction(1, 2)), p)
        if u is not None and not (isinstance(u, Fraction) and not u):
            v = _mul(b, _inv(_scale(u, Fraction(2))), p)
            return _make(u, v, t)
    return None


def sqrt_adjoin(s, tower: Tower | None = None) -> tuple[Scalar, Tower]:
    """Return ``(r, tower')`` with ``r*r == s``.

    An existing level is reused whenever ``s`` already has a root in the
    field; otherwise a single radicand is appended.  The root returned is the
    one whose leading coefficient (see :func:`lead_sign`) is positive.
    """
    s = as_scalar(s)
    t = _join(tower or QQ, tower_of(s))
    s = embed(s, t)
    if isinstance(s, Fraction) and not s:
        return s, t
    r = _sqrt_in(s, t)
    if r is None:
        r, t = _adjoin_for(s, t)
    if lead_sign(r) < 0:
        r = _neg(r)
    return r, t


def _adjoin_for(s, t: Tower):
    if isinstance(s, Fraction):
        c, d = squarefree_part(s.numerator * s.denominator)
        t2 = t.adjoin(d)
        return _make(Fraction(0), Fraction(c, s.denominator), t2), t2
    # s = d * v^2 with d rational is the only way a root can sit one level up
    for d in _candidate_radicands():
        v = _sqrt_in(s * Fraction(1, d), t)
        if v is not None:
            t2 = t.adjoin(d)
            return _mul(v, _gen(t2), t2), t2
    raise SqrtUnavailable(f"no quadratic extension of {t.radicands} contains sqrt({format_scalar(s)})")


def _candidate_radicands():
    primes = [p for p in range(2, 60) if all(p % q for q in range(2, p))]
    yield -1
    for p in primes:
        yield p
        yield -p
    for p, q in combinations(primes[:8], 2):
        yield p * q
        yield -p * q


def sqrt(s) -> Scalar:
    """Square root of ``s``, adjoining a radicand if needed."""
    return sqrt_adjoin(s)[0]


def format_scalar(s) -> str:
    """Serialize in the shared grammar, e.g. ``(1/3+2/3*sqrt(2))``."""
    if isinstance(s, int):
        s = Fraction(s)
    if isinstance(s, Fraction):
        return str(s)
    head = "" if (isinstance(s.a, Fraction) and not s.a) else format_scalar(s.a)
    b = s.b
    rad = f"sqrt({s.tower.top})"
    if isinstance(b, Fraction):
        if b == 1:
            tail = rad
        elif b == -1:
            tail = "-" + rad
        else:
            tail = f"{b}*{rad}"
    else:
        tail = f"{format_scalar(b)}*{rad}"
    if head and not tail.startswith("-"):
        tail = "+" + tail
    return f"({head}{tail})"
