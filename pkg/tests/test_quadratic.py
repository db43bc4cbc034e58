from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from farey_neighbours.quadratic import (QuadField, class_group, ideal_from_generators,
                                        ideal_product, is_principal, kronecker,
                                        reduced_form_count, sqrt_in_field, zeta_K_2)

FIELDS = [-1, -2, -3, -5, -6, -7, -10, -14, -15, -23, -26]
ints = st.integers(-30, 30)


def test_discriminants_and_units():
    assert [QuadField(f).D for f in (-1, -2, -3, -5, -7)] == [-4, -8, -3, -20, -7]
    assert [QuadField(f).unit_count for f in (-1, -2, -3)] == [4, 2, 6]
    with pytest.raises(ValueError):
        QuadField(-4)


@pytest.mark.parametrize("f", FIELDS)
@given(ints, ints, ints, ints)
def test_norm_is_multiplicative(f, a, b, c, d):
    F = QuadField(f)
    x, y = F(a, b), F(c, d)
    assert (x * y).norm() == x.norm() * y.norm()
    assert isinstance((x * y).norm(), (int, Fraction))
    assert x.conj().conj() == x
    assert (x * y).conj() == x.conj() * y.conj()
    assert (x + y).conj() == x.conj() + y.conj()
    if x:
        assert x * x.inverse() == F.one


@pytest.mark.parametrize("f", FIELDS)
def test_sqrt_recovers_squares(f):
    F = QuadField(f)
    for z in (F(3, 1), F(-2, 5), F.sqrt_f):
        r = sqrt_in_field(z * z)
        assert r is not None and r * r == z * z
    assert sqrt_in_field(F.sqrt_f) is None


@pytest.mark.parametrize("f, h", [(-1, 1), (-2, 1), (-3, 1), (-5, 2), (-6, 2), (-14, 4),
                                  (-15, 2), (-23, 3), (-26, 6), (-71, 7), (-89, 12)])
def test_class_numbers(f, h):
    assert class_group(QuadField(f))[0] == h


@pytest.mark.parametrize("f", FIELDS + [-47, -51, -58, -79, -97])
def test_class_number_matches_form_count(f):
    F = QuadField(f)
    assert class_group(F)[0] == reduced_form_count(F.D)


def test_ideal_norms_and_products():
    F = QuadField(-5)
    P = ideal_from_generators(F(2), F(1, 1))  # (2, 1 + sqrt-5) is not principal
    assert P.norm == 2
    assert is_principal(P) is None or not is_principal(P)
    assert ideal_product(P, P).norm == 4 and is_principal(ideal_product(P, P))


@pytest.mark.parametrize("f", [-1, -2, -3, -5, -7, -23])
def test_zeta_against_mpmath(f):
    F = QuadField(f)
    D = F.D
    mpmath.mp.dps = 30
    # zeta_K(2) = zeta(2) L(2, chi_D); the character is periodic mod |D|
    L = sum(kronecker(D, a) * mpmath.zeta(2, mpmath.mpf(a) / abs(D)) for a in range(1, abs(D) + 1)) / D ** 2
    assert abs(zeta_K_2(F) - float(mpmath.zeta(2) * L)) < 1e-9


def test_kronecker_small():
    assert [kronecker(-4, n) for n in range(1, 6)] == [1, 0, -1, 0, 1]
    assert [kronecker(-3, n) for n in range(1, 5)] == [1, -1, 0, 1]
