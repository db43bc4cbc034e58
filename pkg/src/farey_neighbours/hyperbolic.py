"""Upper half-space geometry and the asymptotic main terms of the counting laws.

Counting geometry is exact (squared gaps and diameters as Fractions); only
the lengths and model values returned here are floats.

Every main term comes from one coefficient: the number of common
perpendiculars of length at most ``s`` from a cusp neighbourhood to a
divergent geodesic in an ``n``-dimensional quotient ``M`` grows like

    Gamma(n/2) iota VolBoundary / (2 sqrt(pi) Gamma((n+1)/2) m Vol M) * s e^{(n-1)s}.

A gap ``|beta - alpha| >= eps`` is a perpendicular of length
``ln(2/eps)``, which turns this into ``C ln(1/eps) / eps^(n-1)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

import numpy as np

from .quadratic import QuadField, zeta_K_2

ZETA3 = 1.2020569031595942
DIMENSIONS = (2, 3, 5)


class InsideHoroballError(ValueError):
    """The geodesic enters the horoball at infinity (gap >= 2)."""


class OverlapError(ValueError):
    pass


@dataclass(frozen=True)
class ModelPoint:
    boundary: tuple
    height: float

    def __post_init__(self):
        if not self.height > 0:
            raise ValueError("height must be positive")


def perp_length_binf(gap, dim: int = 2) -> float:
    """Length of the common perpendicular from ``B_inf`` to the geodesic with endpoint gap ``gap``.

    For ``dim = 5`` pass ``n(beta - alpha)**(1/2)``.  A gap of exactly 2 is the
    tangent configuration (length 0); larger gaps raise InsideHoroballError.
    """
    if dim not in DIMENSIONS:
        raise ValueError(f"dimension must be one of {DIMENSIONS}")
    if gap <= 0:
        raise ValueError("gap must be positive")
    if gap > 2:
        raise InsideHoroballError(f"gap {gap} > 2: the geodesic meets the interior of B_inf")
    return math.log(2 / gap)


def gap_from_length(length: float) -> float:
    return 2 * math.exp(-length)


def horoball_distance(h1, h2) -> float:
    """Hyperbolic distance between two horoballs with disjoint interiors.

    Inputs carry ``is_infinite``, ``diameter`` and ``gap_squared(other)``
    (Ford circles and canonical horoballs both do).  The distance is
    ``ln(g^2 / (d1 d2))``, and ``ln(1/d)`` against the height-1 horoball.
    """
    if h1.is_infinite and h2.is_infinite:
        raise ValueError("two horoballs at infinity")
    if h1.is_infinite or h2.is_infinite:
        d = Fraction(h2.diameter if h1.is_infinite else h1.diameter)
        if d > 1:
            raise OverlapError("horoball meets the interior of B_inf")
        return math.log(1 / d)
    ratio = Fraction(h1.gap_squared(h2)) / (Fraction(h1.diameter) * Fraction(h2.diameter))
    if ratio < 1:
        raise OverlapError(f"overlapping horoballs (ratio {ratio})")
    return math.log(ratio)


# -- asymptotic models -------------------------------------------------------

THEOREMS = ("T1_1", "T1_2", "T4", "T5", "T16", "T17", "R8i", "Eq3", "Cor2")
PAPER, ALT = "paper", "alt_volume"


def perpendicular_coefficient(n: int, iota, vol_boundary, m, vol_M) -> float:
    """Leading coefficient of ``s e^{(n-1)s}`` in the perpendicular count."""
    return (math.gamma(n / 2) * iota * vol_boundary
            / (2 * math.sqrt(math.pi) * math.gamma((n + 1) / 2) * m * vol_M))


def modular_surface_volume() -> float:
    return math.pi / 3


def bianchi_volume(F: QuadField, variant: str = PAPER) -> float:
    """Covolume of PSL2(O_K); the alternate variant uses the 4 pi^2 normalisation."""
    D = abs(F.D)
    denom = 4 * math.pi if variant == PAPER else 4 * math.pi ** 2
    return D ** 1.5 * zeta_K_2(F) / denom


def _order_product(D_A: int) -> int:
    out, n, p = 1, D_A, 2
    while n > 1:
        if n % p == 0:
            out *= (p ** 3 - 1) * (p - 1)
            while n % p == 0:
                n //= p
        p += 1
    return out


def quaternion_volume(D_A: int = 2) -> float:
    return ZETA3 * _order_product(D_A) / 11520


@dataclass(frozen=True)
class AsymptoticModel:
    theorem_id: str
    parameters: Mapping = field(default_factory=dict)
    variant: str = PAPER

    def __post_init__(self):
        if self.theorem_id not in THEOREMS:
            raise ValueError(f"unknown model {self.theorem_id!r}")
        if self.variant not in (PAPER, ALT):
            raise ValueError(f"unknown variant {self.variant!r}")

    def param(self, name, default=None):
        return self.parameters.get(name, default)


def _field(model: AsymptoticModel) -> QuadField:
    F = model.param("field")
    if F is None:
        F = QuadField(model.param("f", -1))
    return F


def model_coefficient(model: AsymptoticModel) -> float:
    """``C`` in ``C ln(1/eps)/eps^k`` (or ``C e^T``, ``C N ln N``)."""
    t, p = model.theorem_id, model.param
    if t in ("T1_1", "T4", "Cor2"):
        iota, idx_inf, index = (p("iota", 1), p("cusp_index", 1), p("index", 1)) \
            if t == "T4" else (1, 1, 1)
        c = perpendicular_coefficient(2, iota, idx_inf, 1, index * modular_surface_volume())
        # s e^s at s = ln(2/eps) has leading part 2 ln(1/eps)/eps
        c *= 2
        return 2 * c if t == "Cor2" else c
    if t in ("T1_2", "T5"):
        F = _field(model)
        u = F.unit_count
        if t == "T1_2":
            iota, m, idx_inf, index, translations = 1, u / 2, 1, 1, u / 2
        else:
            iota, m = p("iota", 1), p("m", 1)
            idx_inf, index, translations = p("cusp_index", 1), p("index", 1), 1
        vol_b = idx_inf * math.sqrt(abs(F.D)) / u
        c = perpendicular_coefficient(3, iota, vol_b, m, index * bianchi_volume(F, model.variant))
        return 4 * c * translations
    if t in ("T16", "T17"):
        D_A, u = p("D_A", 2), p("unit_count", 24)
        if t == "T16":
            iota, m, idx_inf, index, translations = 1, u * u / 2, 1, 1, u * u / 2
        else:
            iota, m = p("iota", 1), p("m", 1)
            idx_inf, index, translations = p("cusp_index", 1), p("index", 1), 1
        vol_b = idx_inf * D_A / (8 * u * u)
        c = perpendicular_coefficient(5, iota, vol_b, m, index * quaternion_volume(D_A))
        # s = ln(2/sqrt(eps)): s e^{4s} has leading part 8 ln(1/eps)/eps^2
        return 8 * c * translations
    if t == "R8i":
        n = 2
        unit_sphere = 2 * math.pi
        return 2 ** (n - 1) * (n - 1) / (unit_sphere * modular_surface_volume())
    if t == "Eq3":
        return 1 / (2 * modular_surface_volume())
    raise AssertionError(t)


def model_value(model: AsymptoticModel, threshold) -> float:
    """Main term at ``threshold`` (``eps`` for T-models, ``T`` for R8i/Eq3, ``N`` for Cor2)."""
    t = model.theorem_id
    c = model_coefficient(model)
    x = float(threshold)
    if t == "R8i":
        _need(x >= 0, "T must be non-negative")
        return c * math.exp(x)
    if t == "Eq3":
        _need(x >= 0, "T must be non-negative")
        return c * math.exp(x / 2)
    if t == "Cor2":
        _need(x >= 1, "N must be at least 1")
        return c * x * math.log(x)
    _need(0 < x <= 1, "epsilon must lie in (0, 1]")
    power = 1 if t in ("T1_1", "T4") else 2
    return c * math.log(1 / x) / x ** power


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def fitted_constant(count: int, epsilon, power: int) -> float:
    """``count eps^power / ln(1/eps)``; infinite at ``eps = 1``."""
    eps = float(epsilon)
    denom = math.log(1 / eps)
    return math.inf if denom == 0 else count * eps ** power / denom


def fit_error_exponent(thresholds, counts, main_terms) -> float:
    """Least-squares ``kappa`` in ``|count/main - 1| ~ e^{-kappa T}``."""
    T = np.asarray(thresholds, dtype=float)
    rel = np.abs(np.asarray(counts, dtype=float) / np.asarray(main_terms, dtype=float) - 1)
    keep = rel > 0
    if keep.sum() < 2:
        raise ValueError("need at least two nonzero relative errors")
    slope, _ = np.polyfit(T[keep], np.log(rel[keep]), 1)
    return -slope
