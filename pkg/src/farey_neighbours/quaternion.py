"""Hurwitz quaternions and Farey pairs on the right projective line.

A point ``[x : y]`` stands for ``x y^{-1}``; matrices act on columns, so
``[[a, b], [c, d]]`` sends infinity to ``a c^{-1}`` and 0 to ``b d^{-1}``.
The Hurwitz order is norm-Euclidean, which turns the Farey predicate into a
finite reduction: bring ``x`` to infinity with elementary matrices and check
that the image of ``y`` is an integral point.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np


def _frac(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    return v


class HurwitzQuaternion:
    """``c0 + c1 i + c2 j + c3 k`` with rational coordinates."""

    __slots__ = ("c",)

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        self.c = tuple(_frac(Fraction(v)) if not isinstance(v, int) else v
                       for v in (c0, c1, c2, c3))

    @classmethod
    def from_doubled(cls, d0, d1, d2, d3) -> "HurwitzQuaternion":
        return cls(*(Fraction(v, 2) for v in (d0, d1, d2, d3)))

    @property
    def doubled(self) -> tuple:
        return tuple(_frac(2 * Fraction(v)) for v in self.c)

    def in_order(self) -> bool:
        d = self.doubled
        if not all(isinstance(v, int) for v in d):
            return False
        return len({v % 2 for v in d}) == 1

    def _coerce(self, other):
        if isinstance(other, HurwitzQuaternion):
            return other
        if isinstance(other, (int, Fraction)):
            return HurwitzQuaternion(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return HurwitzQuaternion(*(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        return HurwitzQuaternion(*(-a for a in self.c))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return HurwitzQuaternion(*(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a1, b1, c1, d1 = self.c
        a2, b2, c2, d2 = o.c
        return HurwitzQuaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self

    def conj(self) -> "HurwitzQuaternion":
        a, b, c, d = self.c
        return HurwitzQuaternion(a, -b, -c, -d)

    def norm(self):
        return _frac(Fraction(sum(v * v for v in self.c)))

    def trace(self):
        return _frac(Fraction(2 * self.c[0]))

    def inverse(self) -> "HurwitzQuaternion":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero quaternion")
        return HurwitzQuaternion(*(Fraction(v) / n for v in self.conj().c))

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return any(self.c)

    def __repr__(self):
        return "H(" + ", ".join(str(v) for v in self.c) + ")"


Q = HurwitzQuaternion
ONE, ZERO = Q(1), Q(0)
HALF = Q.from_doubled(1, 1, 1, 1)


def _round_half_up(v) -> int:
    return math.floor(Fraction(v) + Fraction(1, 2))


def nearest_in_order(v: HurwitzQuaternion) -> HurwitzQuaternion:
    """A Hurwitz point ``w`` minimising ``n(v - w)``; Lipschitz points win ties."""
    lip = Q(*(_round_half_up(c) for c in v.c))
    deep = HALF + Q(*(_round_half_up(c - Fraction(1, 2)) for c in v.c))
    return lip if (v - lip).norm() <= (v - deep).norm() else deep


@lru_cache(maxsize=None)
def _elements_of_norm(m: int) -> tuple:
    """Doubled coordinate tuples of all order elements of norm ``m``."""
    target = 4 * m
    r = math.isqrt(target)
    out = []
    for d0 in range(-r, r + 1):
        s0 = target - d0 * d0
        r1 = math.isqrt(s0)
        for d1 in range(-r1, r1 + 1):
            if (d1 - d0) % 2:
                continue
            s1 = s0 - d1 * d1
            r2 = math.isqrt(s1)
            for d2 in range(-r2, r2 + 1):
                if (d2 - d0) % 2:
                    continue
                s2 = s1 - d2 * d2
                d3 = math.isqrt(s2)
                if d3 * d3 != s2 or (d3 - d0) % 2:
                    continue
                out.append((d0, d1, d2, d3))
                if d3:
                    out.append((d0, d1, d2, -d3))
    return tuple(sorted(out))


def elements_of_norm(m: int) -> list[HurwitzQuaternion]:
    return [Q.from_doubled(*d) for d in _elements_of_norm(m)]


def units() -> list[HurwitzQuaternion]:
    return elements_of_norm(1)


@lru_cache(maxsize=None)
def right_unit_classes(m: int) -> tuple:
    """One representative of each class ``q O^x`` among elements of norm ``m``."""
    us = units()
    seen, reps = set(), []
    for d in _elements_of_norm(m):
        if d in seen:
            continue
        q = Q.from_doubled(*d)
        reps.append(q)
        for u in us:
            seen.add((q * u).doubled)
    return tuple(reps)


# -- matrices ----------------------------------------------------------------

@dataclass(frozen=True)
class DieudonneDet:
    squared: Fraction

    @property
    def value(self) -> float:
        return math.sqrt(self.squared)

    @property
    def exact_root(self) -> Optional[Fraction]:
        n, d = self.squared.numerator, self.squared.denominator
        rn, rd = math.isqrt(n), math.isqrt(d)
        return Fraction(rn, rd) if rn * rn == n and rd * rd == d else None


@dataclass(frozen=True)
class QuatMatrix:
    a: HurwitzQuaternion
    b: HurwitzQuaternion
    c: HurwitzQuaternion
    d: HurwitzQuaternion

    @classmethod
    def identity(cls) -> "QuatMatrix":
        return cls(ONE, ZERO, ZERO, ONE)

    @classmethod
    def elementary(cls, w: HurwitzQuaternion) -> "QuatMatrix":
        """``[[w, 1], [1, 0]]``, one step of the Euclidean chain."""
        return cls(w, ONE, ONE, ZERO)

    def __mul__(self, o: "QuatMatrix") -> "QuatMatrix":
        return QuatMatrix(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                          self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def act(self, x: HurwitzQuaternion, y: HurwitzQuaternion):
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def in_order(self) -> bool:
        return all(e.in_order() for e in self.entries())

    def projectively_equal(self, other: "QuatMatrix") -> bool:
        return self.entries() == other.entries() or \
            self.entries() == tuple(-e for e in other.entries())


def dieudonne_det(M: QuatMatrix) -> DieudonneDet:
    a, b, c, d = M.entries()
    sq = (a * d).norm() + (b * c).norm() - (a * c.conj() * d * b.conj()).trace()
    return DieudonneDet(Fraction(sq))


def dieudonne_det_alt(M: QuatMatrix) -> DieudonneDet:
    """The form ``n(c a c^{-1} d - c b)``, valid when ``c != 0``."""
    a, b, c, d = M.entries()
    if not c:
        raise ZeroDivisionError("alternate form needs c != 0")
    return DieudonneDet(Fraction((c * a * c.inverse() * d - c * b).norm()))


# -- Euclidean reduction -------------------------------------------------------

@dataclass(frozen=True)
class Reduction:
    g: HurwitzQuaternion
    steps: tuple
    matrix: QuatMatrix

    def inverse_apply(self, x: HurwitzQuaternion, y: HurwitzQuaternion):
        """Apply ``matrix^{-1}`` to the column ``(x, y)``."""
        for w in self.steps:
            x, y = y, x - w * y
        return x, y


DEFAULT_STEP_BOUND = 10 ** 4


def euclidean_reduce(p: HurwitzQuaternion, q: HurwitzQuaternion,
                     step_bound: int = DEFAULT_STEP_BOUND) -> Reduction:
    """Chain ``p = w q + r`` with ``n(r) <= n(q)/2`` down to ``(g, 0)``.

    Returns ``g``, the quotients ``w`` and ``M`` = product of
    ``[[w, 1], [1, 0]]`` so that ``(p, q) = M (g, 0)``.
    """
    if not p and not q:
        raise ValueError("(0, 0) cannot be reduced")
    steps = []
    M = QuatMatrix.identity()
    while q:
        if len(steps) >= step_bound:
            raise RuntimeError("Euclidean reduction did not terminate")
        w = nearest_in_order(p * q.inverse())
        r = p - w * q
        assert 2 * r.norm() <= q.norm()
        steps.append(w)
        M = M * QuatMatrix.elementary(w)
        p, q = q, r
    return Reduction(p, tuple(steps), M)


def _integral_rep(x, y):
    """Scale a right-projective pair ``(x, y)`` into the order."""
    den = 1
    for e in (x, y):
        for v in e.c:
            den = math.lcm(den, Fraction(v).denominator)
    return x * den, y * den


def _as_pair(point):
    if point == "inf":
        return ONE, ZERO
    if isinstance(point, tuple):
        return point
    return point, ONE


def same_point(x, y) -> bool:
    (p, q), (r, s) = _as_pair(x), _as_pair(y)
    if not q or not s:
        return not q and not s
    return p * q.inverse() == r * s.inverse()


def quat_farey_witness(x, y) -> Optional[QuatMatrix]:
    """``gamma`` in SL2(O) with ``gamma inf = x`` and ``gamma 0 = y``, or None.

    Points are ``'inf'``, a quaternion, or a pair ``(p, q)`` meaning ``p q^{-1}``.
    """
    x, y = _as_pair(x), _as_pair(y)
    if same_point(x, y):
        raise ValueError("a Farey pair needs two distinct points")
    p, q = _integral_rep(*x)
    red = euclidean_reduce(p, q)
    r, s = red.inverse_apply(*y)
    if not s:
        return None
    t = r * s.inverse()
    if not t.in_order():
        return None
    M = red.matrix
    return M * QuatMatrix(ONE, t, ZERO, ONE)


def is_quat_farey(x, y) -> bool:
    return quat_farey_witness(x, y) is not None


# -- counting ----------------------------------------------------------------

def right_coprime(q: HurwitzQuaternion, s: HurwitzQuaternion) -> bool:
    """Whether the right ideal ``qO + sO`` is the whole order."""
    if math.gcd(q.norm(), s.norm()) == 1:
        return True
    # right ideal gcd: reduce conjugates on the left
    return euclidean_reduce(q.conj(), s.conj()).g.norm() == 1


def _threshold(epsilon) -> Fraction:
    eps = Fraction(epsilon)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    return eps


MAX_NORM_PRODUCT = 64


def count_quat_farey_pairs(epsilon, max_norm: int = MAX_NORM_PRODUCT) -> int:
    """Farey pairs modulo translation by O with ``n(beta - alpha) >= epsilon``.

    Pairs come from unimodular bottom rows ``(q, s)`` with gap
    ``1/(n(q) n(s))``; every pair arises from ``24 * 24 * 2 / 24 = 48`` rows
    per translation class, and rows are enumerated up to right units.
    """
    eps = _threshold(epsilon)
    if eps > 1:
        return 0
    X = int(1 / eps)
    if X > max_norm:
        raise ValueError(f"1/epsilon = {X} exceeds the scale bound {max_norm}")
    classes = 0
    for nq in range(1, X + 1):
        for q in right_unit_classes(nq):
            for ns in range(1, X // nq + 1):
                for s in right_unit_classes(ns):
                    if right_coprime(q, s):
                        classes += 1
    rows = classes * 24 * 24
    assert rows % 48 == 0
    return rows // 48


def canonical_mod_order(v: HurwitzQuaternion) -> tuple:
    """Representative of ``v + O`` as a coordinate tuple."""
    lip = tuple(Fraction(c) - math.floor(c) for c in v.c)
    shifted = tuple(Fraction(c) - Fraction(1, 2) for c in v.c)
    deep = tuple(c - math.floor(c) for c in shifted)
    return min(lip, deep)


def _pair_key(a: HurwitzQuaternion, b: HurwitzQuaternion) -> tuple:
    def key(u, v):
        base = canonical_mod_order(u)
        shift = Q(*base) - u
        return base + (v + shift).c
    return min(key(a, b), key(b, a))


def brute_force_pair_classes(epsilon) -> set:
    """Translation classes of Farey pairs with gap at least ``epsilon``, by point search.

    Points ``p q^{-1}`` with ``n(q) <= 1/epsilon`` are listed near the
    unit cell and every pair with gap in ``[epsilon, 1]`` is tested with
    :func:`is_quat_farey`; independent of the row-counting formula.
    """
    eps = _threshold(epsilon)
    X = int(1 / eps)
    base = {}
    for nq in range(1, X + 1):
        for q in right_unit_classes(nq):
            qi = q.inverse()
            # p ranges over order points with p q^{-1} in a window around the cell
            for n in range(0, 16 * nq + 1):
                for p in elements_of_norm(n):
                    v = p * qi
                    if all(-1 <= c <= 2 for c in v.c):
                        base.setdefault(v, (p, q))
    pts = list(base)
    cell = [v for v in pts if canonical_mod_order(v) == tuple(Fraction(c) for c in v.c)]
    found = set()
    for u in cell:
        for v in pts:
            if u == v:
                continue
            gap = (v - u).norm()
            if gap < eps or gap > 1:
                continue
            if is_quat_farey(base[u], base[v]):
                found.add(_pair_key(u, v))
    return found


def random_sl2(rng: random.Random, length: int = 4, coord: int = 2) -> QuatMatrix:
    """Product of elementary matrices with random Hurwitz quotients."""
    M = QuatMatrix.identity()
    for _ in range(length):
        d = [rng.randint(-coord, coord) * 2 for _ in range(4)]
        if rng.random() < 0.5:
            d = [v + 1 for v in d]
        M = M * QuatMatrix.elementary(Q.from_doubled(*d))
    return M


def random_quaternion(rng: random.Random, max_norm: int = 100) -> HurwitzQuaternion:
    while True:
        r = math.isqrt(4 * max_norm)
        d = [rng.randint(-r, r) for _ in range(4)]
        if len({v % 2 for v in d}) == 1:
            q = Q.from_doubled(*d)
            if q.norm() <= max_norm:
                return q


def brute_force_farey(x, y, entry_bound: int = 64) -> bool:
    """Search SL2(O) matrices with entries of norm at most ``entry_bound``.

    With doubled coordinates ``D``, ``8 Det^2 = 8 n(a) n(d) + 8 n(b) n(c) - Re(D(a c^) D(d b^))``
    where ``^`` is conjugation, so every column pair is checked at once as
    an integer matrix product.
    """
    cols_x = _columns_for(_as_pair(x), entry_bound)
    cols_y = _columns_for(_as_pair(y), entry_bound)
    if not cols_x or not cols_y:
        return False
    P = np.array([_mul_doubled(a.doubled, c.conj().doubled) for a, c in cols_x], dtype=np.int64)
    R = np.array([_mul_doubled(d.doubled, b.conj().doubled) for b, d in cols_y], dtype=np.int64)
    na = np.array([a.norm() for a, _ in cols_x], dtype=np.int64)
    nc = np.array([c.norm() for _, c in cols_x], dtype=np.int64)
    nb = np.array([b.norm() for b, _ in cols_y], dtype=np.int64)
    nd = np.array([d.norm() for _, d in cols_y], dtype=np.int64)
    re = P[:, :1] @ R[:, :1].T - P[:, 1:] @ R[:, 1:].T
    det8 = 8 * np.outer(na, nd) + 8 * np.outer(nc, nb) - re
    return bool((det8 == 8).any())


def _mul_doubled(x: tuple, y: tuple) -> tuple:
    """Coordinatewise product formula applied to doubled coordinates."""
    a1, b1, c1, d1 = x
    a2, b2, c2, d2 = y
    return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)


def _columns_for(point, bound):
    """Integral columns ``(a, c)`` representing ``point``, up to right units."""
    p, q = _integral_rep(*point)
    out = []
    if not q:
        for n in range(1, bound + 1):
            for a in right_unit_classes(n):
                out.append((a, ZERO))
        return out
    # a = p q^{-1} c, so 4 n(q) * doubled(a) = D(p) D(conj q) D(c)
    nq, np_ = q.norm(), p.norm()
    pq = _mul_doubled(p.doubled, q.conj().doubled)
    for n in range(1, bound + 1):
        if np_ * n % nq or np_ * n // nq > bound:
            continue
        for c in right_unit_classes(n):
            raw = _mul_doubled(pq, c.doubled)
            if any(v % (4 * nq) for v in raw):
                continue
            d = tuple(v // (4 * nq) for v in raw)
            if len({v % 2 for v in d}) == 1:
                out.append((Q.from_doubled(*d), c))
    return out
