import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from farey_neighbours import quaternion as qt
from farey_neighbours.quaternion import ONE, ZERO, Q, QuatMatrix

I, J, K = Q(0, 1), Q(0, 0, 1), Q(0, 0, 0, 1)

hurwitz = st.builds(lambda h, c: Q.from_doubled(*(2 * v + h for v in c)),
                    st.integers(0, 1), st.tuples(*[st.integers(-4, 4)] * 4))


def test_units():
    us = qt.units()
    assert len(us) == 24 and len(set(us)) == 24
    assert all(u.norm() == 1 and u.in_order() for u in us)


@given(hurwitz, hurwitz)
def test_norm_multiplicative_and_conjugation(a, b):
    assert (a * b).norm() == a.norm() * b.norm()
    assert (a * b).conj() == b.conj() * a.conj()
    assert (a * b).in_order()


@given(hurwitz)
def test_nearest_in_order_remainder(v):
    x = v * Q(Fraction(1, 3), Fraction(1, 5))
    w = qt.nearest_in_order(x)
    assert w.in_order() and 2 * (x - w).norm() <= 1


def test_dieudonne_examples():
    assert qt.dieudonne_det(QuatMatrix.identity()).exact_root == 1
    d = qt.dieudonne_det(QuatMatrix(ONE + I, ZERO, ZERO, ONE))
    assert d.squared == 2 and math.isclose(d.value, math.sqrt(2))
    assert qt.dieudonne_det(QuatMatrix(I, ZERO, ONE + I, J)).exact_root == 1


def _rand_matrix(rng):
    return QuatMatrix(*(qt.random_quaternion(rng, 100) for _ in range(4)))


def test_dieudonne_multiplicative_and_alternate_form():
    rng = random.Random(7)
    for _ in range(300):
        M, N = _rand_matrix(rng), _rand_matrix(rng)
        assert qt.dieudonne_det(M * N).squared == qt.dieudonne_det(M).squared * qt.dieudonne_det(N).squared
        if M.c:
            assert qt.dieudonne_det_alt(M).squared == qt.dieudonne_det(M).squared


def test_euclidean_reduce_examples():
    r = qt.euclidean_reduce(ONE, ZERO)
    assert r.steps == () and r.g == ONE
    r = qt.euclidean_reduce(ONE + I, Q(2))
    assert r.g.norm() == 2 and len(r.steps) == 2
    r = qt.euclidean_reduce(qt.HALF, ONE)
    assert len(r.steps) == 1 and r.g == ONE


@given(hurwitz, hurwitz)
def test_reduction_reconstructs_pair(p, q):
    if not p and not q:
        return
    r = qt.euclidean_reduce(p, q)
    assert r.matrix.act(r.g, ZERO) == (p, q)
    assert r.inverse_apply(p, q) == (r.g, ZERO)


def test_farey_examples():
    assert qt.is_quat_farey("inf", ZERO)
    assert qt.is_quat_farey((ONE + I) * Fraction(1, 2), ZERO)
    assert not qt.is_quat_farey("inf", (ONE + I) * Fraction(1, 2))
    g = qt.quat_farey_witness((ONE + I) * Fraction(1, 2), ZERO)
    assert qt.dieudonne_det(g).exact_root == 1 and g.in_order()


def test_soundness_on_random_group_elements():
    rng = random.Random(3)
    for _ in range(200):
        g = qt.random_sl2(rng, length=rng.randint(1, 5))
        assert qt.dieudonne_det(g).exact_root == 1
        x, y = (g.a, g.c), (g.b, g.d)
        assert qt.is_quat_farey(x, y)
        w = qt.quat_farey_witness(x, y)
        assert qt.dieudonne_det(w).exact_root == 1
        assert qt.same_point((w.a, w.c), x) and qt.same_point((w.b, w.d), y)


@given(hurwitz, hurwitz, hurwitz)
def test_translation_invariance(p, s, w):
    x = p * Fraction(1, 2)
    y = s * Fraction(1, 3)
    if qt.same_point(x, y):
        return
    assert qt.is_quat_farey(x + w, y + w) == qt.is_quat_farey(x, y)


def test_completeness_small_height():
    rng = random.Random(11)
    checked = 0
    while checked < 25:
        pts = []
        for _ in range(2):
            q = qt.random_quaternion(rng, 4)
            p = qt.random_quaternion(rng, 8)
            if not q:
                q = ONE
            pts.append((p, q))
        if qt.same_point(*pts):
            continue
        assert qt.is_quat_farey(*pts) == qt.brute_force_farey(*pts)
        checked += 1


def test_counts():
    assert qt.count_quat_farey_pairs(1) == 12
    assert qt.count_quat_farey_pairs(2) == 0
    assert qt.count_quat_farey_pairs(Fraction(1, 2)) == 36
    assert qt.count_quat_farey_pairs(Fraction(1, 4)) == 156


@pytest.mark.parametrize("eps, expected", [(1, 12), (Fraction(1, 2), 36)])
def test_counts_against_point_search(eps, expected):
    assert len(qt.brute_force_pair_classes(eps)) == expected


def test_right_coprime():
    assert qt.right_coprime(ONE + I, Q(3))
    assert not qt.right_coprime(ONE + I, Q(2))
