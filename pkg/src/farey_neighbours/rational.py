"""Farey neighbours over the rationals.

Pairs are generated from ordered coprime denominators ``(q, s)`` with
``q * s <= N``: for each such pair there is exactly one solution of
``p*s - q*r = 1`` with ``0 < p <= q`` and ``0 <= r < s``, giving the pair
``{r/s, p/q}`` inside ``[0, 1]`` with gap ``1/(q*s)``.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterator

import numpy as np

from .moebius import MoebiusMatrix

STRICT = "strict_plus_one"
ABSOLUTE = "absolute"

# pure Python path below this N, numpy above
_SMALL_N = 2000


@total_ordering
@dataclass(frozen=True)
class Rational:
    """Reduced fraction; ``Rational(1, 0)`` is the point at infinity."""

    num: int
    den: int

    def __post_init__(self):
        if self.den < 0:
            raise ValueError("denominator must be non-negative")
        if self.den == 0:
            if self.num != 1:
                raise ValueError("infinity is encoded as 1/0")
        elif math.gcd(self.num, self.den) != 1:
            raise ValueError(f"{self.num}/{self.den} is not reduced")

    @classmethod
    def of(cls, value) -> "Rational":
        """Build from an int, a Fraction, a ``(p, q)`` tuple, or the string 'inf'."""
        if isinstance(value, Rational):
            return value
        if value == "inf" or value is math.inf:
            return INF
        if isinstance(value, tuple):
            p, q = value
            if q == 0:
                return INF
            g = math.gcd(p, q)
            if q < 0:
                g = -g
            return cls(p // g, q // g)
        fr = Fraction(value)
        return cls(fr.numerator, fr.denominator)

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def to_fraction(self) -> Fraction:
        if self.is_infinite:
            raise ValueError("infinity has no Fraction value")
        return Fraction(self.num, self.den)

    def __lt__(self, other: "Rational") -> bool:
        if self.is_infinite:
            return False
        if other.is_infinite:
            return True
        return self.num * other.den < other.num * self.den

    def __str__(self):
        if self.is_infinite:
            return "inf"
        return str(self.num) if self.den == 1 else f"{self.num}/{self.den}"


INF = Rational(1, 0)


@dataclass(frozen=True)
class FareyPair:
    lo: Rational
    hi: Rational
    gap_num: int
    gap_den: int

    @classmethod
    def from_quadruple(cls, p: int, q: int, r: int, s: int) -> "FareyPair":
        """Pair ``{r/s, p/q}`` with ``p*s - q*r = 1`` and both denominators positive."""
        return cls(Rational(r, s), Rational(p, q), 1, q * s)

    @property
    def gap(self) -> Fraction:
        return Fraction(self.gap_num, self.gap_den)

    def key(self):
        """Canonical ``(q, s, p)`` ordering key."""
        return (self.hi.den, self.lo.den, self.hi.num)


def is_farey_pair_q(a, b) -> bool:
    """Decide ``|ps - qr| = 1`` for the reduced representatives of ``a`` and ``b``."""
    a, b = Rational.of(a), Rational.of(b)
    if a == b:
        raise ValueError("a Farey pair needs two distinct points")
    return abs(a.num * b.den - a.den * b.num) == 1


def _modinv_array(a: np.ndarray, m: np.ndarray) -> np.ndarray:
    """Inverse of ``a`` modulo ``m`` elementwise; requires gcd(a, m) = 1.

    Returns values in ``[0, m)`` (so 0 when ``m == 1``).
    """
    old_r, r = a % m, m.copy()
    old_s, s = np.ones_like(a), np.zeros_like(a)
    active = r != 0
    while active.any():
        safe_r = np.where(active, r, 1)
        quo = old_r // safe_r
        new_r = np.where(active, old_r - quo * r, r)
        new_s = np.where(active, old_s - quo * s, s)
        old_r = np.where(active, r, old_r)
        old_s = np.where(active, s, old_s)
        r, s = new_r, new_s
        active = r != 0
    return old_s % m


def _chunk_arrays(N: int, q_lo: int, q_hi: int):
    """Quadruples for q in [q_lo, q_hi) as arrays (p, q, r, s), sorted by (q, s)."""
    qs = np.arange(q_lo, q_hi, dtype=np.int64)
    counts = N // qs
    q = np.repeat(qs, counts)
    starts = np.cumsum(counts) - counts
    s = np.arange(q.size, dtype=np.int64) - np.repeat(starts, counts) + 1
    keep = np.gcd(q, s) == 1
    q, s = q[keep], s[keep]
    p = _modinv_array(s, q)
    p = np.where(p == 0, q, p)
    r = (p * s - 1) // q
    return p, q, r, s


def _q_partition(N: int, parts: int):
    """Split [1, N] into q-ranges of roughly equal work (work ~ N/q)."""
    target = max(1, int(N * (math.log(N) + 1) / max(parts, 1)))
    bounds, acc, lo = [], 0, 1
    for q in range(1, N + 1):
        acc += N // q
        if acc >= target:
            bounds.append((lo, q + 1))
            lo, acc = q + 1, 0
    if lo <= N:
        bounds.append((lo, N + 1))
    return bounds


def farey_pair_arrays(N: int, level: int | None = None, threads: int = 1):
    """All Farey quadruples ``(p, q, r, s)`` in [0, 1] with ``q*s <= N`` as int64 arrays.

    Rows are in canonical ``(q, s)`` order; the result does not depend on
    ``threads``.
    """
    _check_params(N, level)
    chunks = _q_partition(N, 8 * max(threads, 1) if N > 10**4 else 1)
    if threads > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda b: _chunk_arrays(N, *b), chunks))
    else:
        parts = [_chunk_arrays(N, *b) for b in chunks]
    p, q, r, s = (np.concatenate([part[i] for part in parts]) for i in range(4))
    if level is not None:
        keep = (q % level == 0) | (s % level == 0)
        p, q, r, s = p[keep], q[keep], r[keep], s[keep]
    return p, q, r, s


def _check_params(N: int, level: int | None):
    if N < 1:
        raise ValueError("N must be at least 1")
    if level is not None and level < 2:
        raise ValueError("level must be at least 2")


def iter_farey_quadruples(N: int, level: int | None = None) -> Iterator[tuple]:
    """Pure Python generator of ``(p, q, r, s)`` in canonical order."""
    _check_params(N, level)
    for q in range(1, N + 1):
        for s in range(1, N // q + 1):
            if math.gcd(q, s) != 1:
                continue
            if level is not None and q % level and s % level:
                continue
            p = pow(s, -1, q) if q > 1 else 1
            if p == 0:
                p = q
            yield p, q, (p * s - 1) // q, s


def enumerate_farey_pairs(N: int, level: int | None = None, threads: int = 1) -> list[FareyPair]:
    """Farey pairs with both endpoints in [0, 1] and gap at least ``1/N``.

    With ``level`` the result is restricted to the Gamma_0(level)-orbit of
    ``{0, inf}``.  Returned in canonical ``(q, s, p)`` order.
    """
    if N <= _SMALL_N:
        return [FareyPair.from_quadruple(*t) for t in iter_farey_quadruples(N, level)]
    p, q, r, s = farey_pair_arrays(N, level, threads)
    return [FareyPair.from_quadruple(int(a), int(b), int(c), int(d))
            for a, b, c, d in zip(p, q, r, s)]


def count_farey_pairs(N: int, level: int | None = None, threads: int = 1) -> int:
    if N <= _SMALL_N:
        return sum(1 for _ in iter_farey_quadruples(N, level))
    return int(farey_pair_arrays(N, level, threads)[0].size)


def omega_table(N: int) -> np.ndarray:
    """Number of distinct prime factors of 0..N (index 0 and 1 are 0)."""
    omega = np.zeros(N + 1, dtype=np.int64)
    is_comp = np.zeros(N + 1, dtype=bool)
    for p in range(2, N + 1):
        if not is_comp[p]:
            omega[p::p] += 1
            is_comp[p * p::p] = True
    return omega


def divisor_power_sums(N: int) -> np.ndarray:
    """Cumulative sums ``S[n] = sum_{m <= n} 2**omega(m)`` for n = 0..N."""
    terms = np.left_shift(1, omega_table(N))
    terms[0] = 0
    return np.cumsum(terms)


def count_gcd_quadruples(N: int, sign_mode: str = STRICT) -> int:
    """Number of ``(p, q, r, s)`` with ``0 <= p <= q``, ``0 <= r <= s``, ``0 < qs <= N``.

    Strict mode requires ``ps - qr = 1``, absolute mode ``|ps - qr| = 1``.
    Uses the closed enumeration: one strict solution per ordered coprime
    ``(q, s)``, and the sign flip doubles it.
    """
    if N < 1:
        raise ValueError("N must be at least 1")
    strict = int(divisor_power_sums(N)[N])
    if sign_mode == STRICT:
        return strict
    if sign_mode == ABSOLUTE:
        return 2 * strict
    raise ValueError(f"unknown sign mode {sign_mode!r}")


def naive_gcd_quadruples(N: int, sign_mode: str = STRICT) -> list[tuple]:
    """Brute-force iteration over every candidate quadruple (oracle)."""
    out = []
    for q in range(1, N + 1):
        for s in range(1, N // q + 1):
            for p in range(q + 1):
                for r in range(s + 1):
                    det = p * s - q * r
                    if det == 1 or (sign_mode == ABSOLUTE and det == -1):
                        out.append((p, q, r, s))
    return out


def r_prim(n: int) -> int:
    """Number of coprime ``(c, d)`` in Z^2 with ``c^2 + d^2 = n``."""
    if n < 1:
        raise ValueError("n must be positive")
    count = 0
    c = 0
    while c * c <= n:
        d2 = n - c * c
        d = math.isqrt(d2)
        if d * d == d2 and math.gcd(c, d) == 1:
            # sign and axis multiplicity of (c, d)
            count += (2 if c else 1) * (2 if d else 1)
        c += 1
    return count


def r_prim_table(N: int) -> np.ndarray:
    """``table[n] = r_prim(n)`` for n = 0..N, by one pass over the quarter disc."""
    table = np.zeros(N + 1, dtype=np.int64)
    top = math.isqrt(N)
    c = np.arange(1, top + 1, dtype=np.int64)
    cc, dd = np.meshgrid(c, c, indexing="ij")
    n = cc * cc + dd * dd
    keep = (n <= N) & (np.gcd(cc, dd) == 1)
    # each coprime (c, d) with c, d >= 1 stands for its four sign images
    table += 4 * np.bincount(n[keep], minlength=N + 1)
    if N >= 1:
        table[1] += 4
    return table


def sum_r_prim(N: int) -> int:
    if N < 1:
        return 0
    return int(r_prim_table(N).sum())


def orbit_point(c: int, d: int):
    """Horizontal coordinate ``R(c, d)`` in [0, 1) and the matrix ``[[a, b], [c, d]]``.

    ``(a, b)`` is the unique solution of ``ad - bc = 1`` putting
    ``Re(gamma . i) = (ac + bd) / (c^2 + d^2)`` in [0, 1).
    """
    if (c, d) == (0, 0) or math.gcd(c, d) != 1:
        raise ValueError(f"({c}, {d}) is not a coprime pair")
    g, x, y = _ext_gcd(d, -c)
    if g < 0:
        x, y = -x, -y
    a, b = x, y  # a*d - b*c = 1
    n = c * c + d * d
    k = -((a * c + b * d) // n)
    a, b = a + k * c, b + k * d
    return Rational.of((a * c + b * d, n)), MoebiusMatrix(a, b, c, d)


def _ext_gcd(a: int, b: int):
    old_r, r, old_s, s, old_t, t = a, b, 1, 0, 0, 1
    while r:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_s, s = s, old_s - qt * s
        old_t, t = t, old_t - qt * t
    return old_r, old_s, old_t


def primitive_representations(n: int) -> list[tuple]:
    out = []
    top = math.isqrt(n)
    for c in range(-top, top + 1):
        d2 = n - c * c
        d = math.isqrt(d2)
        if d * d != d2:
            continue
        for dd in {d, -d}:
            if math.gcd(c, dd) == 1:
                out.append((c, dd))
    return sorted(out)


def reciprocity_index_q(x) -> int:
    """Reciprocity index of the modular symbol from infinity to ``x``: 1 or 2."""
    x = Rational.of(x)
    if x.is_infinite:
        raise ValueError("x must be finite")
    p, q = x.num % x.den, x.den
    target = Rational.of((p, q))
    for c, d in primitive_representations(q):
        if orbit_point(c, d)[0] == target:
            return 1
    return 2


def max_height_index(T: float) -> int:
    """Largest integer n >= 0 with ``2 ln n <= T`` (0 if none), robust at ties."""
    if T < 0:
        raise ValueError("T must be non-negative")
    n = int(math.floor(math.exp(T / 2)))
    while 2 * math.log(n + 1) <= T:
        n += 1
    while n >= 1 and 2 * math.log(n) > T:
        n -= 1
    return n


def totient_table(N: int) -> np.ndarray:
    phi = np.arange(N + 1, dtype=np.int64)
    for p in range(2, N + 1):
        if phi[p] == p:
            phi[p::p] -= phi[p::p] // p
    return phi


def reciprocal_orbit_points(n_max: int) -> set:
    """Points ``(Re z, 1/Im z)`` of the orbit of i with ``0 <= Re z < 1``, ``Im z >= 1/n_max``."""
    points = set()
    top = math.isqrt(n_max)
    for c in range(-top, top + 1):
        for d in range(-top, top + 1):
            n = c * c + d * d
            if 0 < n <= n_max and math.gcd(c, d) == 1:
                points.add((orbit_point(c, d)[0], n))
    return points


def count_modular_symbols(T: float, mode: str = "all") -> int:
    """Count degree one modular symbols of complexity at most ``T``.

    ``all``: orbits of ordered pairs with horoball distance ``<= T``, i.e.
    ``sum_{q <= e^{T/2}} phi(q)``.  ``reciprocal``: orbit points of i with
    ``0 <= Re z < 1`` and ``Im z`` in ``[e^{-T/2}, 1]``.
    """
    n = max_height_index(T)
    if mode == "all":
        return int(totient_table(n)[1:].sum()) if n else 0
    if mode == "reciprocal":
        return len(reciprocal_orbit_points(n))
    raise ValueError(f"unknown mode {mode!r}")


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def hecke_index(L: int) -> int:
    """``[PSL2(Z) : Gamma_0(L)] = L prod_{p | L} (1 + 1/p)``."""
    if L < 1:
        raise ValueError("L must be positive")
    idx = Fraction(L)
    for p in _prime_factors(L):
        idx *= Fraction(p + 1, p)
    return int(idx)


def hecke_index_by_cosets(L: int) -> int:
    """Count points of the projective line over Z/L (cosets of Gamma_0(L))."""
    if L == 1:
        return 1
    units = [u for u in range(L) if math.gcd(u, L) == 1]
    seen, classes = set(), 0
    for c in range(L):
        for d in range(L):
            if math.gcd(math.gcd(c, d), L) != 1 or (c, d) in seen:
                continue
            classes += 1
            for u in units:
                seen.add((u * c % L, u * d % L))
    return classes


@dataclass(frozen=True)
class FordCircle:
    """Ford horoball at ``center`` (diameter ``1/q^2``), or the height-1 horoball at infinity."""

    center: Rational

    @property
    def is_infinite(self) -> bool:
        return self.center.is_infinite

    @property
    def diameter(self) -> Fraction:
        if self.is_infinite:
            return Fraction(1)
        return Fraction(1, self.center.den ** 2)

    def gap_squared(self, other: "FordCircle") -> Fraction:
        return (self.center.to_fraction() - other.center.to_fraction()) ** 2
