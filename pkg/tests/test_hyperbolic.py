import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import integrate, optimize

from farey_neighbours import hyperbolic as hy
from farey_neighbours.quadratic import QuadField
from farey_neighbours.rational import FordCircle, INF, Rational, enumerate_farey_pairs, is_farey_pair_q


def test_perp_length_examples():
    assert hy.perp_length_binf(2) == 0
    assert math.isclose(hy.perp_length_binf(Fraction(1, 10)), math.log(20))
    assert hy.perp_length_binf(2, dim=5) == 0
    with pytest.raises(hy.InsideHoroballError):
        hy.perp_length_binf(3)
    with pytest.raises(ValueError):
        hy.perp_length_binf(1, dim=4)


@given(st.floats(1e-4, 2.0))
def test_perp_length_by_arclength(gap):
    # vertical segment from the top of the geodesic (height gap/2) to height 1
    length, _ = integrate.quad(lambda t: 1 / t, gap / 2, 1, epsabs=1e-13, epsrel=1e-13)
    assert abs(hy.perp_length_binf(gap) - length) < 1e-9
    assert math.isclose(hy.gap_from_length(hy.perp_length_binf(gap)), gap)


def _numeric_horoball_distance(x1, d1, x2, d2):
    def point(x, d, th):
        r = d / 2
        return x + r * math.sin(th), r - r * math.cos(th)

    def dist(v):
        (a, s), (b, t) = point(x1, d1, v[0]), point(x2, d2, v[1])
        return math.acosh(1 + ((a - b) ** 2 + (s - t) ** 2) / (2 * s * t))

    guess = [math.pi / 2 if x2 > x1 else -math.pi / 2, -math.pi / 2 if x2 > x1 else math.pi / 2]
    res = optimize.minimize(dist, guess, method="Nelder-Mead",
                            options={"xatol": 1e-12, "fatol": 1e-14, "maxiter": 20000})
    return res.fun


def test_horoball_distance_examples():
    B = lambda p, q: FordCircle(Rational(p, q))
    assert hy.horoball_distance(B(0, 1), B(1, 2)) == 0
    assert math.isclose(hy.horoball_distance(FordCircle(INF), B(1, 3)), 2 * math.log(3))
    assert math.isclose(hy.horoball_distance(B(0, 1), B(2, 5)), 2 * math.log(2))
    assert math.isclose(_numeric_horoball_distance(0, 1, 0.4, 1 / 25), 2 * math.log(2), abs_tol=1e-6)


def test_ford_tangency_characterisation():
    rng = random.Random(5)
    for _ in range(2000):
        a = Fraction(rng.randint(-50, 50), rng.randint(1, 40))
        b = Fraction(rng.randint(-50, 50), rng.randint(1, 40))
        if a == b:
            continue
        d = hy.horoball_distance(FordCircle(Rational.of(a)), FordCircle(Rational.of(b)))
        assert (d == 0) == is_farey_pair_q(a, b)
        assert d >= 0


def test_figure_consistency():
    pairs = enumerate_farey_pairs(10 ** 3)
    near = [p for p in pairs if hy.perp_length_binf(p.gap) <= math.log(20) + 1e-12]
    assert len(near) == 23
    assert all(p.gap >= Fraction(1, 10) for p in near)


def test_model_values():
    assert math.isclose(hy.model_value(hy.AsymptoticModel("T1_1"), 0.01), 279.9608, rel_tol=1e-6)
    assert math.isclose(hy.model_value(hy.AsymptoticModel("R8i"), math.log(100)), 300 / math.pi ** 2,
                        rel_tol=1e-12)
    assert math.isclose(hy.model_coefficient(hy.AsymptoticModel("T16")),
                        2160 * 2 / (hy.ZETA3 * 576 * 7), rel_tol=1e-12)
    assert math.isclose(hy.model_coefficient(hy.AsymptoticModel("Cor2")), 12 / math.pi ** 2)


@pytest.mark.parametrize("f", [-1, -2, -3, -5, -7])
def test_variant_relation(f):
    F = QuadField(f)
    paper = hy.AsymptoticModel("T1_2", {"field": F}, hy.PAPER)
    alt = hy.AsymptoticModel("T1_2", {"field": F}, hy.ALT)
    for eps in (0.5, 0.1, 1 / 40):
        assert math.isclose(hy.model_value(alt, eps), math.pi * hy.model_value(paper, eps))
    assert math.isclose(hy.model_coefficient(paper),
                        4 * math.pi / (F.unit_count * abs(F.D) * hy.zeta_K_2(F)), rel_tol=1e-12)


@pytest.mark.parametrize("tid", ["T1_1", "T1_2", "T4", "T5", "T16", "T17"])
def test_models_increase_as_eps_shrinks(tid):
    m = hy.AsymptoticModel(tid)
    vals = [hy.model_value(m, e) for e in np.geomspace(0.9, 1e-4, 30)]
    assert all(b > a for a, b in zip(vals, vals[1:]))


@pytest.mark.parametrize("tid", ["R8i", "Eq3"])
def test_models_increase_in_T(tid):
    m = hy.AsymptoticModel(tid)
    vals = [hy.model_value(m, T) for T in np.linspace(0, 20, 30)]
    assert all(b > a for a, b in zip(vals, vals[1:]))


def test_model_domain_errors():
    with pytest.raises(ValueError):
        hy.model_value(hy.AsymptoticModel("T1_1"), 0)
    with pytest.raises(ValueError):
        hy.AsymptoticModel("T99")


def test_fit_error_exponent_recovers_rate():
    T = np.linspace(2, 12, 15)
    main = np.exp(T)
    counts = main * (1 + 0.3 * np.exp(-0.5 * T))
    assert math.isclose(hy.fit_error_exponent(T, counts, main), 0.5, rel_tol=1e-9)
