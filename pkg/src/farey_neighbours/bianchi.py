"""Farey neighbours over imaginary quadratic fields.

Points of the projective line over K are homogeneous pairs ``(a, b)`` of
integers of K.  Two points are K-Farey neighbours when
``(aO + bO)(cO + dO) = (ad - bc)O``; this is decided by comparing Hermite
normal forms.  Canonical horoballs have diameter ``N(aO + bO) / N(b)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .moebius import MoebiusMatrix
from .quadratic import (
    QuadField,
    QuadIdeal,
    QuadNumber,
    class_group,
    elements_of_norm,
    ideal_from_generators,
    ideal_product,
    is_principal,
    kronecker,
    same_class,
    sqrt_in_field,
)

DEFAULT_SEARCH_BOUND = 10 ** 4
DEFAULT_PRIME_BOUND = 10 ** 4

FOUND, OBSTRUCTED, EXHAUSTED = "found", "obstructed", "exhausted"


class OverlapError(ArithmeticError):
    """Two canonical horoballs with overlapping interiors (cannot happen for correct data)."""


class SearchExhausted(RuntimeError):
    pass


class ProjectivePoint:
    """The point ``a/b`` of P^1(K), with ``a, b`` integral and not both zero."""

    __slots__ = ("a", "b", "_ideal")

    def __init__(self, a: QuadNumber, b: QuadNumber):
        if not a and not b:
            raise ValueError("(0, 0) is not a projective point")
        if not (a.is_integral() and b.is_integral()):
            raise ValueError("representatives must be integral")
        self.a, self.b = a, b
        self._ideal = None

    @classmethod
    def infinity(cls, F: QuadField) -> "ProjectivePoint":
        return cls(F.one, F.zero)

    @classmethod
    def of(cls, F: QuadField, value) -> "ProjectivePoint":
        """From ``'inf'``, an int/Fraction, a field element or a pair ``(a, b)``."""
        if isinstance(value, ProjectivePoint):
            return value
        if isinstance(value, str) and value == "inf":
            return cls.infinity(F)
        if isinstance(value, tuple):
            a, b = (v if isinstance(v, QuadNumber) else F(v) for v in value)
            return cls(a, b)
        z = value if isinstance(value, QuadNumber) else F(value)
        den = math.lcm(Fraction(z.x).denominator, Fraction(z.y).denominator)
        return cls(z * den, F(den))

    @property
    def field(self) -> QuadField:
        return self.a.field

    @property
    def is_infinite(self) -> bool:
        return not self.b

    @property
    def ideal(self) -> QuadIdeal:
        if self._ideal is None:
            self._ideal = ideal_from_generators(self.a, self.b)
        return self._ideal

    def value(self) -> Optional[QuadNumber]:
        return None if self.is_infinite else self.a / self.b

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.a * other.b == self.b * other.a

    def __hash__(self):
        v = self.value()
        return hash(("inf",) if v is None else (v.x, v.y))

    def __repr__(self):
        v = self.value()
        return "inf" if v is None else repr(v)

    def coords(self):
        """JSON-friendly ``[[ax, ay], [bx, by]]`` over the basis (1, omega)."""
        return [_coord(self.a), _coord(self.b)]


def _coord(z: QuadNumber):
    return [str(c) for c in z.coords()]


def _act(M: MoebiusMatrix, x: ProjectivePoint) -> ProjectivePoint:
    u, v = M.act(x.a, x.b)
    return ProjectivePoint.of(x.field, (u, v)) if u.is_integral() and v.is_integral() \
        else _from_homogeneous(x.field, u, v)


def _from_homogeneous(F: QuadField, u: QuadNumber, v: QuadNumber) -> ProjectivePoint:
    if not v:
        return ProjectivePoint.infinity(F)
    return ProjectivePoint.of(F, u / v)


def act(M: MoebiusMatrix, x: ProjectivePoint) -> ProjectivePoint:
    """Homography action on P^1(K) (matrix entries may lie in K)."""
    return _act(M, x)


def is_k_farey(x: ProjectivePoint, y: ProjectivePoint) -> bool:
    if x == y:
        raise ValueError("a Farey pair needs two distinct points")
    delta = x.a * y.b - x.b * y.a
    return ideal_product(x.ideal, y.ideal) == ideal_from_generators(delta)


@dataclass(frozen=True)
class HoroballSpec:
    center: ProjectivePoint
    diameter: Fraction

    @property
    def is_infinite(self) -> bool:
        return self.center.is_infinite

    def gap_squared(self, other: "HoroballSpec") -> Fraction:
        """Squared Euclidean distance between the two base points, ``N(x - y)``."""
        x, y = self.center, other.center
        num = (x.a * y.b - x.b * y.a).norm()
        return Fraction(num, (x.b * y.b).norm())


def canonical_horoball(x: ProjectivePoint) -> HoroballSpec:
    if x.is_infinite:
        return HoroballSpec(x, Fraction(1))
    return HoroballSpec(x, Fraction(x.ideal.norm, x.b.norm()))


def horoballs_tangent(h1: HoroballSpec, h2: HoroballSpec) -> bool:
    """Exact tangency of two canonical horoballs; raises OverlapError on overlap."""
    if h1.center == h2.center:
        raise ValueError("horoballs must have distinct centers")
    if h1.is_infinite or h2.is_infinite:
        d = h2.diameter if h1.is_infinite else h1.diameter
        if d > 1:
            raise OverlapError(f"horoball of diameter {d} meets the interior of B_inf")
        return d == 1
    gap2, prod = h1.gap_squared(h2), h1.diameter * h2.diameter
    if gap2 < prod:
        raise OverlapError(f"N(x - y) = {gap2} < {prod}")
    return gap2 == prod


# -- Bezout completion in O_K ----------------------------------------------

def _lattice_solve(vectors, target):
    """Integer coefficients ``k`` with ``sum k_i v_i = target``, or None."""
    n = len(vectors)
    basis = [(x, y, [int(i == j) for j in range(n)]) for i, (x, y) in enumerate(vectors)]
    w = None
    flat = []
    for x, y, co in basis:
        if y == 0:
            flat.append((x, co))
            continue
        if w is None:
            w = (x, y, co)
            continue
        wx, wy, wc = w
        g, s, t = _xgcd(wy, y)
        # kernel vector of the combination keeps the lattice intact
        kx = (y // g) * wx - (wy // g) * x
        kc = [(y // g) * a - (wy // g) * b for a, b in zip(wc, co)]
        flat.append((kx, kc))
        w = (s * wx + t * x, g, [s * a + t * b for a, b in zip(wc, co)])
    if w is None:
        return None
    wx, wy, wc = w
    ax, ac = 0, [0] * n
    for x, co in flat:
        g, s, t = _xgcd(ax, x)
        ax, ac = g, [s * a + t * b for a, b in zip(ac, co)]
    tx, ty = target
    if ty % wy:
        return None
    k = ty // wy
    rem = tx - k * wx
    if ax == 0:
        return [k * c for c in wc] if rem == 0 else None
    if rem % ax:
        return None
    return [k * c + (rem // ax) * d for c, d in zip(wc, ac)]


def _xgcd(a: int, b: int):
    old_r, r, old_s, s, old_t, t = a, b, 1, 0, 0, 1
    while r:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_s, s = s, old_s - qt * s
        old_t, t = t, old_t - qt * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def bezout_complete(p: QuadNumber, q: QuadNumber) -> MoebiusMatrix:
    """``[[p, r], [q, s]]`` with determinant 1, for coprime integral ``p, q``."""
    F = p.field
    w = F.omega
    gens = [p, p * w, q, q * w]
    k = _lattice_solve([(g.x, g.y) for g in gens], (1, 0))
    if k is None:
        raise ValueError(f"{p} and {q} are not coprime")
    s = F(k[0], k[1])
    r = -F(k[2], k[3])
    M = MoebiusMatrix(p, r, q, s)
    assert M.det() == F.one
    return M


def _unimodular_rep(x: ProjectivePoint):
    """Integral coprime representative of a point whose ideal class is principal."""
    g = is_principal(x.ideal)
    if g is None:
        return None
    return x.a / g, x.b / g


# -- pointwise stabilisers and exchanging involutions --------------------------

def _rep_matrix(x: ProjectivePoint, y: ProjectivePoint) -> MoebiusMatrix:
    """Matrix over O_K sending inf to x and 0 to y (not of determinant 1)."""
    return MoebiusMatrix(x.a, y.a, x.b, y.b)


def _rotation_candidates(F: QuadField):
    """``(cos theta, i sin theta)`` for theta in {pi/2, pi/3, 2pi/3} when it lies in K."""
    out = []
    if F.f == -1:
        out.append((Fraction(0), F.sqrt_f))
    if F.f == -3:
        half_root = F.sqrt_f * Fraction(1, 2)
        out.append((Fraction(1, 2), half_root))
        out.append((Fraction(-1, 2), half_root))
    return out


def pointwise_stabilizer_order(x: ProjectivePoint, y: ProjectivePoint, bound=None) -> int:
    """Order of the pointwise stabiliser in PSL2(O_K) of the geodesic from x to y.

    Such elements are ``C M(theta) C^{-1}``; integrality forces
    ``2 cos theta`` into Z, leaving finitely many theta to test exactly.
    """
    if x == y:
        raise ValueError("x and y must be distinct")
    F = x.field
    C = _rep_matrix(x, y)
    det = C.det()
    J = (C * MoebiusMatrix(F.one, F.zero, F.zero, -F.one) * C.adjugate()).scale(det.inverse())
    order = 1
    for cos, isin in _rotation_candidates(F):
        g = J.scale(isin)
        g = MoebiusMatrix(g.a + cos, g.b, g.c, g.d + cos)
        if all(e.is_integral() for e in g.entries()):
            order += 1
    return order


def search_exchanging_involution(x: ProjectivePoint, y: ProjectivePoint,
                                 bound: int = DEFAULT_SEARCH_BOUND):
    """``(status, E)`` with status in {found, obstructed, exhausted}.

    Looks for ``E = [[e, g], [h, -e]]`` in PSL2(O_K) with ``E x = y``, over
    ``e`` of norm at most ``bound``; ``g`` then solves a quadratic over K.
    """
    if x == y:
        raise ValueError("x and y must be distinct")
    if not same_class(x.ideal, y.ideal):
        return OBSTRUCTED, None
    F = x.field
    a, b, c, d = x.a, x.b, y.a, y.b
    P, Q, R = a * d + b * c, b * d, a * c
    for n in range(bound + 1):
        for e in elements_of_norm(F, n):
            for g, h in _solve_involution(F, e, P, Q, R):
                E = MoebiusMatrix(e, g, h, -e)
                if _act(E, x) == y and _act(E, y) == x:
                    return FOUND, E
    return EXHAUSTED, None


def _solve_involution(F, e, P, Q, R):
    minus = -(F.one + e * e)
    out = []
    if Q and R:
        disc = (e * P) * (e * P) - 4 * Q * R * (F.one + e * e)
        w = sqrt_in_field(disc)
        if w is None:
            return out
        for root in (w, -w):
            g = (root - e * P) / (2 * Q)
            if not g.is_integral():
                continue
            h = (e * P + g * Q) / R
            if h.is_integral():
                out.append((g, h))
    elif R:
        h = e * P / R
        if h and h.is_integral():
            g = minus / h
            if g.is_integral():
                out.append((g, h))
    elif Q:
        g = -(e * P) / Q
        if g and g.is_integral():
            h = minus / g
            if h.is_integral():
                out.append((g, h))
    elif not e:
        for g in sorted(F.units(), key=lambda u: (u.x, u.y)):
            out.append((g, minus / g))
    return out


def find_exchanging_involution(x, y, bound: int = DEFAULT_SEARCH_BOUND):
    """An order-2 element of PSL2(O_K) exchanging x and y, or None.

    None means either a proved class obstruction or an exhausted search; use
    :func:`search_exchanging_involution` to tell them apart.
    """
    return search_exchanging_involution(x, y, bound)[1]


# -- witnesses ---------------------------------------------------------------

@dataclass(frozen=True)
class FareyWitness:
    field: QuadField
    alpha: ProjectivePoint
    beta: ProjectivePoint
    C: MoebiusMatrix
    E: Optional[MoebiusMatrix]
    iota: Optional[int]
    m: int
    source: str = "construct"
    p0: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "p0": self.p0,
            "alpha": self.alpha.coords(),
            "beta": self.beta.coords(),
            "class_norm": self.alpha.ideal.norm,
            "C": _matrix_coords(self.C),
            "E": None if self.E is None else _matrix_coords(self.E),
            "iota": self.iota,
            "m": self.m,
        }


def _matrix_coords(M: MoebiusMatrix):
    return [[_coord(M.a), _coord(M.b)], [_coord(M.c), _coord(M.d)]]


def _verify_involution(E: MoebiusMatrix, alpha, beta) -> None:
    if not all(e.is_integral() for e in E.entries()):
        raise AssertionError("E has non-integral entries")
    if E.det() != alpha.field.one:
        raise AssertionError("E does not have determinant 1")
    if not (E * E).is_scalar():
        raise AssertionError("E is not an involution")
    if _act(E, alpha) != beta or _act(E, beta) != alpha:
        raise AssertionError("E does not exchange alpha and beta")


def _iota_for(alpha, beta, bound):
    status, E = search_exchanging_involution(alpha, beta, bound)
    if status == FOUND:
        return 1, E
    if status == OBSTRUCTED:
        return 2, None
    return None, None


def _odd_primes(limit: int):
    for p in range(3, limit + 1, 2):
        if all(p % k for k in range(3, math.isqrt(p) + 1, 2)):
            yield p


def _prime_candidates(F: QuadField, prime_bound: int):
    """``(p0, a0)`` candidates for the neighbour construction, in search order."""
    sf = F.sqrt_f
    for p0 in _odd_primes(prime_bound):
        if F.D % p0 == 0:
            yield p0, 0
            continue
        if kronecker(F.D, p0) != 1:
            continue
        for a0 in range(1, p0):
            if (a0 * a0 - F.f) % p0:
                continue
            if (F(a0) + sf).norm() % (p0 * p0) == 0:
                a0 += p0
            yield p0, a0


def construct_k_farey(target: ProjectivePoint, prime_bound: int = DEFAULT_PRIME_BOUND,
                      search_bound: int = DEFAULT_SEARCH_BOUND) -> FareyWitness:
    """A K-Farey pair ``(x, y)`` with ``x`` in the orbit of ``target``.

    Principal class: ``x = target`` and ``y`` its Bezout partner.  Otherwise a
    nonprincipal prime ideal ``(a0 + sqrt f, p0)`` in the target's class is
    located by increasing odd ``p0`` and the linear equation
    ``(N(a0 + sqrt f)/p0) u - p0 t = 1`` gives the neighbour.
    """
    F = target.field
    rep = _unimodular_rep(target)
    if rep is not None:
        gamma = bezout_complete(*rep)
        alpha = target
        beta = _from_homogeneous(F, gamma.b, gamma.d)
        S = MoebiusMatrix(F.zero, -F.one, F.one, F.zero)
        E = gamma * S * gamma.adjugate()
        _verify_involution(E, alpha, beta)
        return FareyWitness(F, alpha, beta, gamma, E, 1,
                            pointwise_stabilizer_order(alpha, beta), "principal")
    sf = F.sqrt_f
    for p0, a0 in _prime_candidates(F, prime_bound):
        a = F(a0) + sf
        ideal = ideal_from_generators(a, F(p0))
        if is_principal(ideal) is not None or not same_class(ideal, target.ideal):
            continue
        nn = a.norm() // p0
        u = pow(nn, -1, p0)
        t = (nn * u - 1) // p0
        b, c, d = F(p0), a * t, F(nn * u)
        alpha, beta = ProjectivePoint(a, b), ProjectivePoint(c, d)
        if not is_k_farey(alpha, beta):
            raise AssertionError(f"construction failed the ideal equation at p0={p0}")
        if alpha.ideal != ideal or not same_class(alpha.ideal, target.ideal):
            raise AssertionError("constructed point has the wrong class")
        iota, E = _iota_for(alpha, beta, search_bound)
        return FareyWitness(F, alpha, beta, MoebiusMatrix(a, c, b, d), E, iota,
                            pointwise_stabilizer_order(alpha, beta), "construct", p0)
    raise SearchExhausted(f"no suitable prime below {prime_bound} for {F}")


def class_points(F: QuadField) -> list[ProjectivePoint]:
    """One point of P^1(K) per ideal class, built from the class representatives."""
    _, reps = class_group(F)
    out = []
    for I in reps:
        e1, e2 = I.basis()
        out.append(ProjectivePoint.infinity(F) if I.norm == 1 else ProjectivePoint(e2, e1))
    return out


def _odd_prime_factors(n: int):
    n, out, p = abs(n), [], 3
    while n % 2 == 0:
        n //= 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 2
    if n > 1:
        out.append(n)
    return out


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % k for k in range(2, math.isqrt(n) + 1))


def example_family(F: QuadField, family: str, p0: int | None = None) -> FareyWitness:
    """The explicit reciprocal K-Farey pairs ``ex1``, ``ex2``, ``ex3``.

    ``C`` maps ``(inf, 0)`` to ``(alpha, beta)`` with determinant 1 and
    ``E = C iota C^{-1}`` for the involution ``iota = [[0, 1/k], [-k, 0]]``.
    """
    f, sf = F.f, F.sqrt_f
    fr = Fraction
    if family == "ex1":
        if -f < 6 or _is_prime(-f):
            raise ValueError("ex1 needs -f composite and at least 6")
        odd = _odd_prime_factors(f)
        if p0 is None:
            if not odd:
                raise ValueError("ex1 needs an odd prime factor of f")
            p0 = odd[0]
        if p0 not in odd:
            raise ValueError(f"p0 = {p0} is not an odd prime factor of {f}")
        m = -f // p0
        u = pow(m, -1, p0)
        t = (m * u - 1) // p0
        a, b, c, d = sf, F(p0), sf * t, F(-u * f // p0)
        C = MoebiusMatrix(sf, F(t), F(p0), sf * fr(-u, p0))
        k = p0
        expected = MoebiusMatrix(sf * (t * u - 1), F(t * t * p0 + f // p0),
                                 F(-u * u * f // p0 - p0), sf * (1 - t * u))
    elif family == "ex2":
        if not (f % 4 == 3 and (-f >= 5 or f == -1)) and f % 4 != 1:
            raise ValueError("ex2 needs f = 3 mod 4 with -f >= 5 (or f = -1)")
        a, b, c, d = F.one + sf, F(2), F(fr(-(1 + f), 2)), F.one - sf
        C = MoebiusMatrix(F.one + sf, F(fr(-(1 + f), 4)), F(2), (F.one - sf) * fr(1, 2))
        k = 2
        expected = MoebiusMatrix(F(fr(-3 + f, 4)) - sf * fr(5 + f, 4),
                                 F(fr(5 + 6 * f + f * f, 8)) + sf,
                                 F(fr(-(5 + f), 2)) + sf,
                                 F(fr(3 - f, 4)) + sf * fr(5 + f, 4))
    elif family == "ex3":
        if f % 4 != 2 or -f < 6:
            raise ValueError("ex3 needs f = 2 mod 4 and -f >= 6")
        a, b, c, d = sf, F(2), F(fr(f + 2, 2)), sf
        C = MoebiusMatrix(sf, F(fr(-(2 + f), 4)), F(2), sf * fr(-1, 2))
        k = 2
        expected = MoebiusMatrix(sf * fr(-(6 + f), 4), F(fr(4 + 8 * f + f * f, 8)),
                                 F(fr(-(4 + f), 2)), sf * fr(6 + f, 4))
    else:
        raise ValueError(f"unknown family {family!r}")
    if not all(z.is_integral() for z in (a, b, c, d)):
        raise ValueError(f"{family} representatives are not integral for f = {f}")
    alpha, beta = ProjectivePoint(a, b), ProjectivePoint(c, d)
    if not is_k_farey(alpha, beta):
        raise AssertionError(f"{family} pair fails the ideal equation")
    if C.det() != F.one or _act(C, ProjectivePoint.infinity(F)) != alpha \
            or _act(C, ProjectivePoint.of(F, 0)) != beta:
        raise AssertionError("C does not map (inf, 0) to (alpha, beta)")
    iota_k = MoebiusMatrix(F.zero, F(fr(1, k)), F(-k), F.zero)
    E = C * iota_k * C.adjugate()
    if E.entries() != expected.entries():
        raise AssertionError("conjugated involution differs from the closed form")
    source = family
    if not all(z.is_integral() for z in E.entries()):
        # outside the family's hypotheses: alpha, beta are ordinary Farey
        # neighbours, and conjugating [[0, -1], [1, 0]] gives an integral E
        if f % 4 != 1:
            raise AssertionError(f"{family} involution is not integral")
        gamma = bezout_complete(*_unimodular_rep(alpha))
        gamma = gamma * MoebiusMatrix(F.one, _bezout_shift(gamma, beta), F.zero, F.one)
        E = gamma * MoebiusMatrix(F.zero, -F.one, F.one, F.zero) * gamma.adjugate()
        source = family + "-farey"
    _verify_involution(E, alpha, beta)
    return FareyWitness(F, alpha, beta, C, E, 1, pointwise_stabilizer_order(alpha, beta),
                        source, p0 if family == "ex1" else None)


def _bezout_shift(gamma: MoebiusMatrix, beta: ProjectivePoint) -> QuadNumber:
    """``k`` with ``gamma [[1, k], [0, 1]]`` sending 0 to ``beta``."""
    # gamma^{-1} beta is a Farey neighbour of infinity, hence lies in O_K
    u, v = gamma.adjugate().act(beta.a, beta.b)
    k = u / v
    if not k.is_integral():
        raise AssertionError("beta is not a Farey neighbour of gamma(inf)")
    return k


# -- counting ----------------------------------------------------------------

def _threshold(epsilon=None, eps_sq=None) -> Fraction:
    if eps_sq is None:
        if epsilon is None:
            raise ValueError("give epsilon or eps_sq")
        eps_sq = Fraction(epsilon) ** 2
    eps_sq = Fraction(eps_sq)
    if eps_sq <= 0 or eps_sq > 1:
        raise ValueError("need 0 < epsilon <= 1")
    return eps_sq


def _elements_by_norm(F: QuadField, X: int):
    return {n: elements_of_norm(F, n) for n in range(1, X + 1)}


def _coprime(q: QuadNumber, s: QuadNumber, nq: int, ns: int) -> bool:
    if math.gcd(nq, ns) == 1:
        return True
    return ideal_from_generators(q, s).norm == 1


DEFAULT_MAX_NORM = 10 ** 5


def count_k_farey_pairs(F: QuadField, x=None, y=None, epsilon=None, eps_sq=None,
                        max_norm: int = DEFAULT_MAX_NORM) -> int:
    """Translation classes of pairs in the orbit of ``{x, y}`` with ``N(beta - alpha) >= eps^2``.

    Default orbit is that of ``{0, inf}`` (all Farey pairs), counted through
    unimodular bottom rows ``(q, s)`` with ``N(q) N(s) <= eps^-2``.  Pairs
    containing infinity are not counted.
    """
    thr = _threshold(epsilon, eps_sq)
    inf, zero = ProjectivePoint.infinity(F), ProjectivePoint.of(F, 0)
    x = inf if x is None else ProjectivePoint.of(F, x)
    y = zero if y is None else ProjectivePoint.of(F, y)
    if {x, y} == {inf, zero}:
        return _count_fast(F, thr, max_norm)
    return len(orbit_pair_classes(x, y, eps_sq=thr, max_norm=max_norm))


def _count_fast(F: QuadField, thr: Fraction, max_norm: int) -> int:
    X = int(1 / thr)
    if X > max_norm:
        raise SearchExhausted(f"norm bound {X} exceeds max_norm {max_norm}")
    by_norm = _elements_by_norm(F, X)
    rows = 0
    for nq in range(1, X + 1):
        for q in by_norm[nq]:
            for ns in range(1, X // nq + 1):
                for s in by_norm[ns]:
                    if _coprime(q, s, nq, ns):
                        rows += 1
    per_class = 2 * F.unit_count
    assert rows % per_class == 0
    return rows // per_class


def _translate_key(alpha: QuadNumber, beta: QuadNumber):
    kx, ky = math.floor(alpha.x), math.floor(alpha.y)
    return (Fraction(alpha.x - kx), Fraction(alpha.y - ky),
            Fraction(beta.x - kx), Fraction(beta.y - ky))


def pair_class_key(alpha: QuadNumber, beta: QuadNumber):
    """Canonical key of the unordered pair ``{alpha, beta}`` modulo O_K translations."""
    return min(_translate_key(alpha, beta), _translate_key(beta, alpha))


def orbit_pair_classes(x: ProjectivePoint, y: ProjectivePoint, eps_sq,
                       max_norm: int = DEFAULT_MAX_NORM) -> set:
    """Translation classes of finite pairs ``{g x, g y}``, g in PSL2(O_K), with gap^2 >= eps_sq.

    With ``u = q a + s b`` and ``v = q c + s d`` (the denominators of ``g x``
    and ``g y``) the squared gap is ``N(ad - bc) / (N(u) N(v))``, so the
    orbit is enumerated through ``(u, v)`` and mapped back to bottom rows.
    """
    F = x.field
    thr = Fraction(eps_sq)
    a, b, c, d = x.a, x.b, y.a, y.b
    delta = a * d - b * c
    if not delta:
        raise ValueError("x and y must be distinct")
    Y = int(Fraction(delta.norm()) / thr)
    if Y > max_norm:
        raise SearchExhausted(f"norm bound {Y} exceeds max_norm {max_norm}")
    by_norm = _elements_by_norm(F, Y)
    inv = delta.inverse()
    classes = set()
    for nu in range(1, Y + 1):
        for u in by_norm[nu]:
            for nv in range(1, Y // nu + 1):
                for v in by_norm[nv]:
                    q = (u * d - v * b) * inv
                    s = (v * a - u * c) * inv
                    if not (q.is_integral() and s.is_integral()):
                        continue
                    if not (q or s) or ideal_from_generators(q, s).norm != 1:
                        continue
                    g = bezout_complete(*_row_to_column(q, s))
                    gamma = MoebiusMatrix(g.d, g.b, q, s)
                    ux, vx = gamma.act(a, b)
                    uy, vy = gamma.act(c, d)
                    classes.add(pair_class_key(ux / vx, uy / vy))
    return classes


def _row_to_column(q: QuadNumber, s: QuadNumber):
    # bottom row (q, s) of [[p, r], [q, s]] comes from completing the column (s, q)
    return s, q
