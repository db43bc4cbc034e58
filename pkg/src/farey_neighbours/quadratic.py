"""Exact arithmetic in imaginary quadratic fields and their rings of integers.

Elements are written ``x + y*omega`` with ``omega = sqrt(f)`` when
``f = 2, 3 (mod 4)`` and ``omega = (1 + sqrt(f))/2`` otherwise, so that the
ring of integers is ``Z + Z*omega``.  Coordinates are ints for integral
elements and may become Fractions after division.

Ideals are stored by the Hermite normal form of their Z-basis,
``{a, b + c*omega}`` with ``a, c > 0`` and ``0 <= b < a``; the norm is ``a*c``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache

import numpy as np


def _is_squarefree(n: int) -> bool:
    n = abs(n)
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 1
    return True


@dataclass(frozen=True)
class QuadField:
    f: int

    def __post_init__(self):
        if self.f >= 0 or not _is_squarefree(self.f):
            raise ValueError(f"f = {self.f} must be a negative square-free integer")

    @property
    def D(self) -> int:
        return 4 * self.f if self.f % 4 in (2, 3) else self.f

    @property
    def omega_kind(self) -> str:
        return "sqrt" if self.f % 4 in (2, 3) else "half"

    @property
    def omega_trace(self) -> int:
        return 0 if self.omega_kind == "sqrt" else 1

    @property
    def omega_norm(self) -> int:
        return -self.f if self.omega_kind == "sqrt" else (1 - self.f) // 4

    @property
    def unit_count(self) -> int:
        return {-4: 4, -3: 6}.get(self.D, 2)

    def __call__(self, x=0, y=0) -> "QuadNumber":
        return QuadNumber(self, x, y)

    @property
    def one(self) -> "QuadNumber":
        return QuadNumber(self, 1, 0)

    @property
    def zero(self) -> "QuadNumber":
        return QuadNumber(self, 0, 0)

    @property
    def omega(self) -> "QuadNumber":
        return QuadNumber(self, 0, 1)

    @property
    def sqrt_f(self) -> "QuadNumber":
        """The element sqrt(f), integral in every case."""
        return self.omega if self.omega_kind == "sqrt" else QuadNumber(self, -1, 2)

    def units(self) -> list["QuadNumber"]:
        return elements_of_norm(self, 1)

    def from_sqrt_basis(self, u, v) -> "QuadNumber":
        """The element ``u + v*sqrt(f)``."""
        return self(u) + self.sqrt_f * v

    def __str__(self):
        return f"Q(sqrt({self.f}))"


def _frac(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    return v


class QuadNumber:
    """Element ``x + y*omega`` of an imaginary quadratic field."""

    __slots__ = ("field", "x", "y")

    def __init__(self, field: QuadField, x=0, y=0):
        self.field = field
        self.x = _frac(x)
        self.y = _frac(y)

    def _coerce(self, other):
        if isinstance(other, QuadNumber):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadNumber(self.field, other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNumber(self.field, self.x + o.x, self.y + o.y)

    __radd__ = __add__

    def __neg__(self):
        return QuadNumber(self.field, -self.x, -self.y)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNumber(self.field, self.x - o.x, self.y - o.y)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        t, n = self.field.omega_trace, self.field.omega_norm
        bd = self.y * o.y
        return QuadNumber(self.field, self.x * o.x - n * bd,
                          self.x * o.y + self.y * o.x + t * bd)

    __rmul__ = __mul__

    def conj(self) -> "QuadNumber":
        return QuadNumber(self.field, self.x + self.field.omega_trace * self.y, -self.y)

    def norm(self):
        t, n = self.field.omega_trace, self.field.omega_norm
        return _frac(self.x * self.x + t * self.x * self.y + n * self.y * self.y)

    def trace(self):
        return _frac(2 * self.x + self.field.omega_trace * self.y)

    def inverse(self) -> "QuadNumber":
        nm = self.norm()
        if nm == 0:
            raise ZeroDivisionError("inverse of zero")
        c = self.conj()
        return QuadNumber(self.field, Fraction(c.x) / nm, Fraction(c.y) / nm)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        out = self.field.one
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, QuadNumber) else other
        if o is None or not isinstance(o, QuadNumber):
            return NotImplemented
        return self.field == o.field and self.x == o.x and self.y == o.y

    def __hash__(self):
        return hash((self.field.f, self.x, self.y))

    def __bool__(self):
        return self.x != 0 or self.y != 0

    def is_integral(self) -> bool:
        return isinstance(self.x, int) and isinstance(self.y, int)

    def coords(self):
        return (self.x, self.y)

    def sqrt_basis(self):
        """``(u, v)`` with value ``u + v*sqrt(f)``."""
        if self.field.omega_kind == "sqrt":
            return (self.x, self.y)
        return (_frac(self.x + Fraction(self.y, 2)), _frac(Fraction(self.y, 2)))

    def __complex__(self):
        u, v = self.sqrt_basis()
        return complex(float(u), float(v) * math.sqrt(-self.field.f))

    def sort_key(self):
        return (Fraction(self.x), Fraction(self.y))

    def __repr__(self):
        u, v = self.sqrt_basis()
        if v == 0:
            return str(u)
        tail = f"{'+' if v > 0 else '-'}{abs(v) if abs(v) != 1 else ''}√{self.field.f}"
        return f"{u}{tail}" if u != 0 else tail.lstrip("+")


def _rational_sqrt(q):
    q = Fraction(q)
    if q < 0:
        return None
    a, b = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def sqrt_in_field(z: QuadNumber):
    """A square root of ``z`` inside the field, or None."""
    F = z.field
    if not z:
        return F.zero
    u, v = (Fraction(c) for c in z.sqrt_basis())
    M = _rational_sqrt(u * u - F.f * v * v)
    if M is None:
        return None
    s = _rational_sqrt((u + M) / 2)
    r = _rational_sqrt((M - u) / (-2 * F.f))
    if s is None or r is None:
        return None
    if s * r * 2 != v:
        r = -r
    w = F.from_sqrt_basis(s, r)
    return w if w * w == z else None


# -- Z-lattices in the (1, omega) basis ------------------------------------

def hnf(vectors) -> tuple[int, int, int]:
    """HNF ``(a, b, c)`` of the full-rank Z-span of integer pairs ``(x, y)``."""
    vecs = [(int(x), int(y)) for x, y in vectors]
    # combine into one vector with minimal positive y
    wx, wy = 0, 0
    for x, y in vecs:
        if y == 0:
            continue
        if wy == 0:
            wx, wy = x, y
            continue
        g, s, t = _ext_gcd(wy, y)
        wx, wy = s * wx + t * x, g
    if wy < 0:
        wx, wy = -wx, -wy
    if wy == 0:
        raise ValueError("lattice is not of full rank")
    a = 0
    for x, y in vecs:
        a = math.gcd(a, x - (y // wy) * wx)
    if a == 0:
        raise ValueError("lattice is not of full rank")
    return a, wx % a, wy


def _ext_gcd(a: int, b: int):
    old_r, r, old_s, s, old_t, t = a, b, 1, 0, 0, 1
    while r:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_s, s = s, old_s - qt * s
        old_t, t = t, old_t - qt * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


@dataclass(frozen=True)
class QuadIdeal:
    """Nonzero integral ideal with Z-basis ``{a, b + c*omega}`` in HNF."""

    field: QuadField
    a: int
    b: int
    c: int
    norm: int = dc_field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "norm", self.a * self.c)

    @property
    def hnf(self):
        return ((self.a, 0), (self.b, self.c))

    def basis(self) -> tuple[QuadNumber, QuadNumber]:
        return self.field(self.a, 0), self.field(self.b, self.c)

    def contains(self, z: QuadNumber) -> bool:
        if not z.is_integral():
            return False
        if z.y % self.c:
            return False
        k = z.y // self.c
        return (z.x - k * self.b) % self.a == 0

    def is_module(self) -> bool:
        w = self.field.omega
        return all(self.contains(e * w) for e in self.basis())

    def conj(self) -> "QuadIdeal":
        return _ideal_from_lattice(self.field, [e.conj() for e in self.basis()])

    def __mul__(self, other: "QuadIdeal") -> "QuadIdeal":
        return ideal_product(self, other)

    def __str__(self):
        b1, b2 = self.basis()
        return f"<{b1}, {b2}>"


def _ideal_from_lattice(F: QuadField, elements) -> QuadIdeal:
    a, b, c = hnf([(e.x, e.y) for e in elements])
    return QuadIdeal(F, a, b, c)


def ideal_from_generators(*gens: QuadNumber) -> QuadIdeal:
    """The O_K-ideal generated by integral elements (not all zero)."""
    gens = [g for g in gens if g]
    if not gens:
        raise ValueError("the zero ideal is not supported")
    F = gens[0].field
    if not all(g.is_integral() for g in gens):
        raise ValueError("generators must be integral")
    w = F.omega
    return _ideal_from_lattice(F, [e for g in gens for e in (g, g * w)])


def ideal_product(I: QuadIdeal, J: QuadIdeal) -> QuadIdeal:
    return _ideal_from_lattice(I.field, [e * f for e in I.basis() for f in J.basis()])


def unit_ideal(F: QuadField) -> QuadIdeal:
    return QuadIdeal(F, 1, 0, 1)


def elements_of_norm(F: QuadField, m: int) -> list[QuadNumber]:
    """Every element of O_K of norm exactly ``m``, in a deterministic order."""
    if m == 0:
        return [F.zero]
    out = []
    t, absD = F.omega_trace, -F.D
    ymax = math.isqrt(4 * m // absD) if absD else 0
    for y in range(-ymax, ymax + 1):
        rest = 4 * m - absD * y * y
        if rest < 0:
            continue
        s = math.isqrt(rest)
        if s * s != rest:
            continue
        for sgn in sorted({s, -s}):
            two_x = sgn - t * y
            if two_x % 2 == 0:
                out.append(F(two_x // 2, y))
    out.sort(key=lambda z: (abs(z.x), abs(z.y), z.x < 0, z.y < 0))
    return out


def is_principal(I: QuadIdeal):
    """A generator of ``I`` if it is principal, else None (exhaustive search)."""
    for g in elements_of_norm(I.field, I.norm):
        if ideal_from_generators(g) == I:
            return g
    return None


def same_class(I: QuadIdeal, J: QuadIdeal) -> bool:
    return is_principal(ideal_product(I, J.conj())) is not None


def minkowski_bound(F: QuadField) -> int:
    return int(math.floor(2 / math.pi * math.sqrt(-F.D)))


def ideals_of_norm_at_most(F: QuadField, bound: int) -> list[QuadIdeal]:
    out = []
    for a in range(1, bound + 1):
        for c in range(1, bound // a + 1):
            if a % c:
                continue
            for b in range(0, a, c):
                I = QuadIdeal(F, a, b, c)
                if I.is_module():
                    out.append(I)
    out.sort(key=lambda I: (I.norm, I.a, I.b, I.c))
    return out


DEFAULT_F_BOUND = 10 ** 4


@lru_cache(maxsize=None)
def _class_group(f: int):
    F = QuadField(f)
    reps: list[QuadIdeal] = []
    for I in ideals_of_norm_at_most(F, max(1, minkowski_bound(F))):
        if not any(same_class(I, J) for J in reps):
            reps.append(I)
    return len(reps), tuple(reps)


def class_group(F: QuadField, bound: int = DEFAULT_F_BOUND):
    """``(h, representatives)``; representatives have minimal norm in their class."""
    if -F.f > bound:
        raise ValueError(f"|f| = {-F.f} exceeds the supported bound {bound}")
    h, reps = _class_group(F.f)
    return h, list(reps)


def class_index(I: QuadIdeal) -> int:
    """Index of the class of ``I`` in ``class_group(I.field)`` representatives."""
    _, reps = class_group(I.field)
    for k, J in enumerate(reps):
        if same_class(I, J):
            return k
    raise AssertionError("ideal class not found among representatives")


def reduced_form_count(D: int) -> int:
    """Number of reduced primitive positive definite forms of discriminant D."""
    h = 0
    a = 1
    while 3 * a * a <= -D:
        for b in range(-a + 1, a + 1):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if math.gcd(math.gcd(a, b), c) == 1:
                h += 1
        a += 1
    return h


def jacobi(a: int, n: int) -> int:
    if n <= 0 or n % 2 == 0:
        raise ValueError("n must be odd and positive")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def kronecker(D: int, n: int) -> int:
    """Kronecker symbol ``(D / n)`` for ``n >= 1``."""
    result = 1
    while n % 2 == 0:
        n //= 2
        if D % 2 == 0:
            return 0
        if D % 8 in (3, 5):
            result = -result
    return result * jacobi(D, n) if n > 1 else result


def zeta_K_2(F: QuadField, tol: float = 1e-10) -> float:
    """``zeta_K(2) = zeta(2) L(2, chi_D)`` by partial sums with an Abel tail bound."""
    if tol < 1e-10:
        raise ValueError("tol must be at least 1e-10")
    m = -F.D
    chi = np.array([kronecker(F.D, k) if k else 0 for k in range(m)], dtype=np.float64)
    # |sum_{k>N} chi(k)/k^2| <= 2B/(N+1)^2 with B the largest partial sum
    B = float(np.abs(np.cumsum(chi)).max()) or 1.0
    N = int(math.ceil(math.sqrt(2 * B / tol)))
    k = np.arange(1, N + 1, dtype=np.float64)
    terms = chi[np.arange(1, N + 1) % m] / (k * k)
    return math.pi ** 2 / 6 * math.fsum(terms)
